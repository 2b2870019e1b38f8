"""The level-n Farey map as an explicit combinatorial map.

Darts are the elements of PSL(2, Z_n).  The dart of the matrix g = (a b; c d)
runs from the vertex a/c (first column) toward b/d (second column).  Right
multiplication by T = (1 1; 0 1) is the rotation sigma (counterclockwise
around the source vertex) and right multiplication by S = (0 -1; 1 0) is the
reversal alpha; faces are the orbits of sigma o alpha, i.e. right
multiplication by ST, which has order 3.  Any consistent convention gives an
isomorphic map; this one is fixed so that tests and exports are
deterministic.

Indexing: vertices are sorted by (den, num); the darts with source vertex v
occupy the block v*n .. v*n + n - 1, the dart (v, t) having second column
(b0 + t*a, d0 + t*c) for a fixed solution (b0, d0) of a*d0 - c*b0 = 1 mod n.
Under this indexing sigma is simply (v, t) -> (v, t + 1 mod n), and the block
of a vertex lists its n neighbours in rotation order.

A built map is immutable; concurrent readers are safe.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .arith import FareyFraction, _is_canonical_pair
from .errors import NonIntegral, ResourceLimit, UnknownVertex, Unsupported

DEFAULT_LEVEL_BOUND = 101


def _distinct_prime_factors(n: int) -> list[int]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def mu(n: int) -> int:
    """Order of PSL(2, Z_n) = number of darts: n^3/2 * prod(1 - 1/p^2)."""
    if n < 3:
        raise Unsupported(f"mu(n) needs n >= 3, got {n}")
    value = Fraction(n**3, 2)
    for p in _distinct_prime_factors(n):
        value *= 1 - Fraction(1, p * p)
    if value.denominator != 1:
        raise NonIntegral(f"mu({n}) = {value} is not an integer")
    return int(value)


def genus(n: int) -> int:
    """Genus of the level-n map: 1 + n^2/24 * (n - 6) * prod(1 - 1/p^2)."""
    if n < 3:
        raise Unsupported(f"genus(n) needs n >= 3, got {n}")
    value = Fraction(n * n, 24) * (n - 6)
    for p in _distinct_prime_factors(n):
        value *= 1 - Fraction(1, p * p)
    value += 1
    if value.denominator != 1:
        raise NonIntegral(f"genus({n}) = {value} is not an integer")
    return int(value)


@dataclass(frozen=True)
class Face:
    """A triangular face: the three vertex labels in rotation order.

    The tuple is rotated so the least vertex (by (den, num)) comes first;
    the cyclic order itself is the one traced by the face operator.
    """

    vertices: tuple[FareyFraction, FareyFraction, FareyFraction]

    def labels(self) -> tuple[str, str, str]:
        return tuple(str(v) for v in self.vertices)

    def vertex_set(self) -> frozenset[FareyFraction]:
        return frozenset(self.vertices)

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def _enumerate_vertices(n: int) -> list[tuple[int, int]]:
    """Canonical (num, den) pairs in (den, num) order."""
    out = []
    for c in range(n // 2 + 1):
        for a in range(n):
            if _is_canonical_pair(a, c, n) and gcd(gcd(a, c), n) == 1:
                out.append((a, c))
    return out


def _bezout_column(a: int, c: int, n: int) -> tuple[int, int]:
    """Some (b0, d0) with a*d0 - c*b0 = 1 mod n; needs gcd(a, c, n) = 1."""
    # x*a + y*c = g over Z, then scale by the inverse of g mod n.
    old_r, r = a, c
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    g = old_r
    ginv = pow(g % n, -1, n)
    d0 = old_x * ginv % n
    b0 = -old_y * ginv % n
    return b0, d0


class FareyMap:
    """Immutable combinatorial map M3(n); build with build_map()."""

    def __init__(self, level: int, vertices, sigma, alpha, dart_target,
                 face_of_dart, face_leaders):
        self.level = level
        self.vertices: list[FareyFraction] = vertices
        self.sigma: np.ndarray = sigma
        self.alpha: np.ndarray = alpha
        self._dart_target: np.ndarray = dart_target
        self._face_of_dart: np.ndarray = face_of_dart
        self._face_leaders: np.ndarray = face_leaders
        self._index = {v: i for i, v in enumerate(vertices)}
        self._face_lookup: dict[frozenset[int], int] | None = None

    # -- counts ---------------------------------------------------------

    @property
    def dart_count(self) -> int:
        return int(self.sigma.shape[0])

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return self.dart_count // 2

    @property
    def face_count(self) -> int:
        return int(self._face_leaders.shape[0])

    # -- incidence ------------------------------------------------------

    def vertex_id(self, v: FareyFraction) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"{v} is not a vertex of M3({self.level})") from None

    def dart_source_id(self, dart: int) -> int:
        return dart // self.level

    def dart_target_id(self, dart: int) -> int:
        return int(self._dart_target[dart])

    def neighbor_ids(self, vid: int) -> list[int]:
        n = self.level
        return [int(t) for t in self._dart_target[vid * n:(vid + 1) * n]]

    def neighbors(self, v: FareyFraction) -> tuple[FareyFraction, ...]:
        """The n neighbours of v as a cyclic sequence in sigma rotation order."""
        return tuple(self.vertices[i] for i in self.neighbor_ids(self.vertex_id(v)))

    def edge_id_pairs(self) -> list[tuple[int, int]]:
        src = np.arange(self.dart_count) // self.level
        tgt = self._dart_target
        keep = src < tgt
        return sorted(zip(src[keep].tolist(), tgt[keep].tolist()))

    # -- faces ----------------------------------------------------------

    def face_dart_orbit(self, face_id: int) -> tuple[int, int, int]:
        d0 = int(self._face_leaders[face_id])
        d1 = int(self.sigma[self.alpha[d0]])
        d2 = int(self.sigma[self.alpha[d1]])
        return d0, d1, d2

    def face_vertex_ids(self, face_id: int) -> tuple[int, int, int]:
        return tuple(d // self.level for d in self.face_dart_orbit(face_id))

    def face(self, face_id: int) -> Face:
        ids = self.face_vertex_ids(face_id)
        k = min(range(3), key=lambda i: ids[i])
        rotated = ids[k:] + ids[:k]
        return Face(tuple(self.vertices[i] for i in rotated))

    def faces(self) -> list[Face]:
        return [self.face(i) for i in range(self.face_count)]

    def face_id_of_dart(self, dart: int) -> int:
        return int(self._face_of_dart[dart])

    def face_id_by_vertices(self, vs) -> int:
        """Face id of the face with the given vertex set; raises if absent."""
        if self._face_lookup is None:
            lookup = {}
            for fid in range(self.face_count):
                lookup[frozenset(self.face_vertex_ids(fid))] = fid
            self._face_lookup = lookup
        key = frozenset(self.vertex_id(v) if isinstance(v, FareyFraction) else v
                        for v in vs)
        try:
            return self._face_lookup[key]
        except KeyError:
            raise UnknownVertex(f"no face with vertices {sorted(key)}") from None

    def has_face(self, vs) -> bool:
        try:
            self.face_id_by_vertices(vs)
            return True
        except UnknownVertex:
            return False

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count


def build_map(n: int, max_level: int = DEFAULT_LEVEL_BOUND) -> FareyMap:
    """Construct M3(n) with its dart permutations and faces."""
    if n < 3:
        raise Unsupported(f"build_map needs n >= 3, got {n}")
    if n > max_level:
        raise ResourceLimit(f"level {n} above bound {max_level}")

    pairs = _enumerate_vertices(n)
    vcount = len(pairs)
    order = mu(n)
    assert vcount * n == order

    av = np.array([p[0] for p in pairs], dtype=np.int64)
    cv = np.array([p[1] for p in pairs], dtype=np.int64)
    bases = [_bezout_column(a, c, n) for a, c in pairs]
    b0 = np.array([b for b, _ in bases], dtype=np.int64)
    d0 = np.array([d for _, d in bases], dtype=np.int64)

    t = np.tile(np.arange(n, dtype=np.int64), vcount)
    A = np.repeat(av, n)
    C = np.repeat(cv, n)
    B = (np.repeat(b0, n) + t * A) % n
    D = (np.repeat(d0, n) + t * C) % n

    def encode(a, b, c, d):
        return ((a * n + b) * n + c) * n + d

    keys = encode(A, B, C, D)
    sortidx = np.argsort(keys, kind="stable")
    sortedkeys = keys[sortidx]

    def lookup(target_keys):
        pos = np.searchsorted(sortedkeys, target_keys)
        if not np.array_equal(sortedkeys[pos], target_keys):
            raise AssertionError("dart lookup failed; construction bug")
        return sortidx[pos]

    idx = np.arange(order, dtype=np.int64)
    sigma = idx - t + (t + 1) % n

    # alpha: g -> g*S = (b, -a; d, -c), normalized so the first column is the
    # canonical vertex representative.
    Ba, Da = B, D
    A2, C2 = (-A) % n, (-C) % n
    half = n // 2
    canon_first = (
        ((Da == 0) & (Ba >= 1) & (Ba <= half))
        | ((Da >= 1) & (2 * Da < n))
        | ((n % 2 == 0) & (2 * Da == n) & (2 * Ba < n))
    )
    na = np.where(canon_first, Ba, (-Ba) % n)
    nb = np.where(canon_first, A2, A)
    nc = np.where(canon_first, Da, (-Da) % n)
    nd = np.where(canon_first, C2, C)
    alpha = lookup(encode(na, nb, nc, nd))

    phi = sigma[alpha]
    reps = np.minimum(np.minimum(idx, phi), phi[phi])
    face_leaders = idx[reps == idx]
    face_of_dart = np.empty(order, dtype=np.int64)
    fids = np.arange(face_leaders.shape[0], dtype=np.int64)
    face_of_dart[face_leaders] = fids
    face_of_dart[phi[face_leaders]] = fids
    face_of_dart[phi[phi[face_leaders]]] = fids

    vertices = [FareyFraction(int(a), int(c), n) for a, c in pairs]
    dart_target = alpha // n
    return FareyMap(n, vertices, sigma, alpha, dart_target, face_of_dart,
                    face_leaders)


# -- module-level convenience wrappers --------------------------------------

def neighbors(fmap: FareyMap, v: FareyFraction) -> tuple[FareyFraction, ...]:
    return fmap.neighbors(v)


def faces_of(fmap: FareyMap) -> list[Face]:
    return fmap.faces()


def euler_characteristic(fmap: FareyMap) -> int:
    return fmap.euler_characteristic()


# -- export / import -------------------------------------------------------

def map_to_dict(fmap: FareyMap) -> dict:
    verts = [str(v) for v in fmap.vertices]
    edges = [[verts[i], verts[j]] for i, j in fmap.edge_id_pairs()]
    faces = sorted(list(f.labels()) for f in fmap.faces())
    return {"level": fmap.level, "vertices": verts, "edges": edges, "faces": faces}


def to_json(fmap: FareyMap, indent: int | None = None) -> str:
    return json.dumps(map_to_dict(fmap), indent=indent)


@dataclass(frozen=True)
class MapData:
    """Parsed form of the JSON export; enough to compare maps up to iso."""

    level: int
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]
    faces: frozenset[frozenset[str]]


def from_json(text: str) -> MapData:
    data = json.loads(text)
    level = int(data["level"])
    vertices = tuple(data["vertices"])
    known = set(vertices)
    edges = set()
    for u, v in data["edges"]:
        if u not in known or v not in known:
            raise UnknownVertex(f"edge ({u}, {v}) uses unknown vertices")
        edges.add(frozenset((u, v)))
    faces = set()
    for f in data["faces"]:
        if len(f) != 3 or any(u not in known for u in f):
            raise UnknownVertex(f"bad face {f}")
        faces.add(frozenset(f))
    return MapData(level, vertices, frozenset(edges), frozenset(faces))


def same_combinatorics(fmap: FareyMap, data: MapData) -> bool:
    """Label-preserving comparison: equal V/E/F and identical adjacency."""
    if data.level != fmap.level or len(data.vertices) != fmap.vertex_count:
        return False
    verts = [str(v) for v in fmap.vertices]
    if sorted(verts) != sorted(data.vertices):
        return False
    edges = {frozenset((verts[i], verts[j])) for i, j in fmap.edge_id_pairs()}
    faces = {frozenset(f.labels()) for f in fmap.faces()}
    return edges == data.edges and faces == data.faces


def to_dot(fmap: FareyMap) -> str:
    lines = [f'graph farey_{fmap.level} {{']
    for v in fmap.vertices:
        lines.append(f'  "{v}";')
    verts = [str(v) for v in fmap.vertices]
    for i, j in fmap.edge_id_pairs():
        lines.append(f'  "{verts[i]}" -- "{verts[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
