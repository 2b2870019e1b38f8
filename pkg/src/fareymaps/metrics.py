"""Graph metric, distance classification, and the two circuits around 1/0.

For prime p >= 5 the vertices of M3(p) split by distance from the north pole
N = 1/0 into N itself, a circuit of the p vertices with denominator 1, a
closed walk through all vertices with denominator not in {0, +-1}, and the
remaining poles a/0 at distance 3.  The closed-form distance test is the
cross-determinant class; a BFS over the 1-skeleton serves as the independent
oracle and is the only metric offered at composite levels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .arith import FareyFraction, canonical, is_adjacent
from .errors import EqualVertices, LevelMismatch, NotPrime
from .maps import FareyMap


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p) or p < 5:
        raise NotPrime(f"need a prime >= 5, got {p}")


@dataclass(frozen=True)
class Circuit:
    """Closed vertex walk; consecutive entries (cyclically) are adjacent."""

    vertices: tuple[FareyFraction, ...]
    level: int

    def __post_init__(self):
        vs = self.vertices
        for i, v in enumerate(vs):
            if v.level != self.level:
                raise LevelMismatch(f"{v} not at level {self.level}")
            if not is_adjacent(v, vs[(i + 1) % len(vs)]):
                raise ValueError(f"circuit broken at slot {i}: {v}")

    def __len__(self) -> int:
        return len(self.vertices)

    def support(self) -> frozenset[FareyFraction]:
        return frozenset(self.vertices)

    def labels(self) -> list[str]:
        return [str(v) for v in self.vertices]


@dataclass(frozen=True)
class Decomposition:
    """Vertices of M3(p) grouped by distance 0, 1, 2, 3 from the north pole."""

    north: FareyFraction
    sphere1: Circuit
    sphere2: Circuit
    poles: tuple[FareyFraction, ...]  # the distance-3 poles, north excluded


def distance_formula(f: FareyFraction, g: FareyFraction, p: int) -> int:
    """Closed-form distance in M3(p): 1, 2 or 3 by the class of ad - bc mod p."""
    _require_prime(p)
    if f.level != p or g.level != p:
        raise LevelMismatch(f"vertices at level {f.level}/{g.level}, not {p}")
    if f == g:
        raise EqualVertices(f"distance classification needs distinct vertices, got {f}")
    delta = (f.num * g.den - g.num * f.den) % p
    if delta in (1, p - 1):
        return 1
    if delta == 0:
        return 3
    return 2


def bfs_distance(fmap: FareyMap, f: FareyFraction, g: FareyFraction) -> int:
    """Shortest-path length between two vertices of the 1-skeleton."""
    start = fmap.vertex_id(f)
    goal = fmap.vertex_id(g)
    if start == goal:
        return 0
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in fmap.neighbor_ids(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                if w == goal:
                    return dist[w]
                queue.append(w)
    raise AssertionError("1-skeleton is connected; unreachable vertex")


def _bfs_all(fmap: FareyMap, start: int) -> list[int]:
    dist = [-1] * fmap.vertex_count
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in fmap.neighbor_ids(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(fmap: FareyMap) -> int:
    """Max over all vertex pairs of the BFS distance."""
    return max(max(_bfs_all(fmap, v)) for v in range(fmap.vertex_count))


def first_circuit(p: int) -> Circuit:
    """The circuit 0/1, 1/1, ..., (p-1)/1 at distance 1 from 1/0."""
    _require_prime(p)
    return Circuit(tuple(canonical(k, 1, p) for k in range(p)), p)


def second_circuit_seed(p: int) -> tuple[FareyFraction, ...]:
    """The length p-4 seed: 1/((p-1)/2), ..., 1/2, 2/3, ..., ((p-3)/2)/((p-1)/2)."""
    _require_prime(p)
    half = (p - 1) // 2
    head = [canonical(1, k, p) for k in range(half, 1, -1)]
    tail = [canonical(m - 1, m, p) for m in range(3, half + 1)]
    return tuple(head + tail)


def second_circuit(p: int) -> Circuit:
    """Concatenation of the p translates of the seed; the distance-2 circuit."""
    seed = second_circuit_seed(p)
    walk = [v.translated(k) for k in range(p) for v in seed]
    return Circuit(tuple(walk), p)


def poles(p: int) -> tuple[FareyFraction, ...]:
    """All (p-1)/2 poles 1/0, 2/0, ..., ((p-1)/2)/0."""
    _require_prime(p)
    return tuple(canonical(a, 0, p) for a in range(1, (p - 1) // 2 + 1))


def decompose(p: int) -> Decomposition:
    """Quasi-icosahedral decomposition of the vertex set by distance from 1/0."""
    _require_prime(p)
    return Decomposition(
        north=canonical(1, 0, p),
        sphere1=first_circuit(p),
        sphere2=second_circuit(p),
        poles=poles(p)[1:],
    )
