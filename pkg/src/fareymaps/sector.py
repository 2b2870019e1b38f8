"""The level-11 construction: sector, 198-gon boundary, orientable pairing.

The rotation t -> t + 1 splits the 220 faces of M3(11) into 20 free orbits
of size 11.  A sector is an edge-connected choice of one face per orbit
containing the central triangle {1/0, 0/1, 1/1}; its eleven translates tile
the map.  Unfolding the translates around the centre glues consecutive
copies along a short radial path through 1/0 and leaves a closed boundary
walk; for the reference sector supported on 22 particular vertex labels that walk
has 198 slots, every directed edge appears once in each direction, and the
resulting orientable identification yields a genus-26 surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import FareyFraction, canonical
from .errors import (
    DisconnectedBoundary,
    NoSector,
    UnpairedEdge,
    WrongLevel,
)
from .maps import Face, FareyMap

LEVEL = 11

# The 22 vertex labels of the reference sector, in boundary circuit order;
# its boundary table is pinned verbatim by the golden tests.
REFERENCE_SECTOR_LABELS = (
    "1/0", "0/1", "1/5", "1/4", "1/3", "2/5", "1/2", "5/0", "6/2", "7/4",
    "3/5", "6/3", "4/0", "2/3", "6/4", "3/0", "3/4", "4/2", "4/5", "2/0",
    "6/5", "1/1",
)


def reference_sector_vertices() -> frozenset[FareyFraction]:
    return frozenset(FareyFraction.parse(s, LEVEL) for s in REFERENCE_SECTOR_LABELS)


def _require_level(fmap: FareyMap) -> None:
    if fmap.level != LEVEL:
        raise WrongLevel(f"expected a level-11 map, got level {fmap.level}")


class _FaceStructure:
    """Face orbits under translation and face adjacency along shared edges."""

    def __init__(self, fmap: FareyMap):
        self.fmap = fmap
        n = fmap.level
        self.translate_face = []
        for fid in range(fmap.face_count):
            vs = [fmap.vertices[i].translated(1) for i in fmap.face_vertex_ids(fid)]
            self.translate_face.append(fmap.face_id_by_vertices(vs))

        self.orbit_of = [-1] * fmap.face_count
        orbits = 0
        for fid in range(fmap.face_count):
            if self.orbit_of[fid] >= 0:
                continue
            cur = fid
            for _ in range(n):
                self.orbit_of[cur] = orbits
                cur = self.translate_face[cur]
            assert cur == fid, "face orbit is not free"
            orbits += 1
        self.orbit_count = orbits

        edge_faces: dict[frozenset[int], list[int]] = {}
        for fid in range(fmap.face_count):
            a, b, c = fmap.face_vertex_ids(fid)
            for e in (frozenset((a, b)), frozenset((b, c)), frozenset((a, c))):
                edge_faces.setdefault(e, []).append(fid)
        self.adjacent = [set() for _ in range(fmap.face_count)]
        for pair in edge_faces.values():
            assert len(pair) == 2
            self.adjacent[pair[0]].add(pair[1])
            self.adjacent[pair[1]].add(pair[0])


def _anchor_id(fmap: FareyMap) -> int:
    """Face id of the central triangle {1/0, 0/1, 1/1}."""
    return fmap.face_id_by_vertices(
        (canonical(1, 0, LEVEL), canonical(0, 1, LEVEL), canonical(1, 1, LEVEL))
    )


class Sector:
    """A 20-face fundamental region for t -> t + 1 on the faces of M3(11)."""

    def __init__(self, fmap: FareyMap, face_ids):
        self.fmap = fmap
        self.face_ids = tuple(sorted(face_ids))
        self.anchor_id = _anchor_id(fmap)

    def faces(self) -> list[Face]:
        return [self.fmap.face(fid) for fid in self.face_ids]

    def vertex_support(self) -> frozenset[FareyFraction]:
        out = set()
        for fid in self.face_ids:
            out.update(self.fmap.vertices[i] for i in self.fmap.face_vertex_ids(fid))
        return frozenset(out)

    def __len__(self) -> int:
        return len(self.face_ids)


def _prepare(fmap: FareyMap, restrict):
    structure = _FaceStructure(fmap)
    anchor = _anchor_id(fmap)
    allowed = None
    if restrict is not None:
        allowed_ids = {fmap.vertex_id(v) for v in restrict}
        allowed = [
            all(i in allowed_ids for i in fmap.face_vertex_ids(fid))
            for fid in range(fmap.face_count)
        ]
        if not allowed[anchor]:
            raise NoSector("restriction excludes the central triangle")
    return structure, anchor, allowed


def sector_search(fmap: FareyMap, restrict=None) -> Sector:
    """Depth-first search in canonical face order; first complete solution.

    Grows an edge-connected face set from the central triangle, one face per
    translation orbit, trying frontier faces in ascending canonical order.
    With `restrict`, only faces whose three vertices lie in the given set
    are considered.
    """
    _require_level(fmap)
    structure, anchor, allowed = _prepare(fmap, restrict)
    chosen: list[int] = [anchor]
    used = {structure.orbit_of[anchor]}

    def extend() -> bool:
        if len(chosen) == structure.orbit_count:
            return True
        frontier = sorted(
            {
                g
                for fid in chosen
                for g in structure.adjacent[fid]
                if structure.orbit_of[g] not in used and (allowed is None or allowed[g])
            }
        )
        for g in frontier:
            chosen.append(g)
            used.add(structure.orbit_of[g])
            if extend():
                return True
            used.remove(structure.orbit_of[g])
            chosen.pop()
        return False

    if not extend():
        raise NoSector("no complete sector under the given restriction")
    return Sector(fmap, chosen)


def count_sectors(fmap: FareyMap, restrict) -> int:
    """Number of distinct sectors available under a vertex restriction.

    Binary include/exclude on the least frontier face, so every complete
    face set is counted exactly once.
    """
    _require_level(fmap)
    structure, anchor, allowed = _prepare(fmap, restrict)
    chosen = {anchor}
    used = {structure.orbit_of[anchor]}
    banned: set[int] = set()

    def walk() -> int:
        if len(chosen) == structure.orbit_count:
            return 1
        frontier = [
            g
            for fid in chosen
            for g in structure.adjacent[fid]
            if g not in chosen
            and g not in banned
            and structure.orbit_of[g] not in used
            and (allowed is None or allowed[g])
        ]
        if not frontier:
            return 0
        pivot = min(frontier)
        chosen.add(pivot)
        used.add(structure.orbit_of[pivot])
        total = walk()
        used.remove(structure.orbit_of[pivot])
        chosen.remove(pivot)
        banned.add(pivot)
        total += walk()
        banned.remove(pivot)
        return total

    return walk()


def tile_by_translates(sector: Sector) -> list[frozenset[int]]:
    """The eleven translated copies of the sector, as face-id sets."""
    fmap = sector.fmap
    structure = _FaceStructure(fmap)
    tiles = []
    current = set(sector.face_ids)
    for _ in range(LEVEL):
        tiles.append(frozenset(current))
        current = {structure.translate_face[fid] for fid in current}
    return tiles


@dataclass(frozen=True)
class BoundaryWalk:
    """Closed walk around the unfolded union of the eleven sector copies."""

    vertices: tuple[FareyFraction, ...]
    row_length: int  # fresh slots contributed by each sector copy
    sector_boundary: tuple[FareyFraction, ...]  # one copy's full boundary cycle
    fmap: FareyMap

    def __len__(self) -> int:
        return len(self.vertices)

    def labels(self) -> list[str]:
        return [str(v) for v in self.vertices]

    def edges(self) -> list[tuple[FareyFraction, FareyFraction]]:
        vs = self.vertices
        return [(v, vs[(i + 1) % len(vs)]) for i, v in enumerate(vs)]

    def rows(self) -> list[list[str]]:
        """Row k lists the slots of sector copy k plus the shared end slot."""
        vs = self.labels()
        out = []
        for k in range(LEVEL):
            row = vs[k * self.row_length:(k + 1) * self.row_length]
            row.append(vs[((k + 1) * self.row_length) % len(vs)])
            out.append(row)
        return out

    def rotated(self, shift: int) -> "BoundaryWalk":
        vs = self.vertices
        shifted = vs[shift % len(vs):] + vs[:shift % len(vs)]
        return BoundaryWalk(shifted, self.row_length, self.sector_boundary, self.fmap)


def _boundary_cycle(fmap: FareyMap, face_ids) -> list[int]:
    """Darts of the closed boundary walk of a face set, region on the left."""
    inside = set(face_ids)
    n = fmap.level
    boundary = [
        d
        for d in range(fmap.dart_count)
        if fmap.face_id_of_dart(int(fmap.alpha[d])) in inside
        and fmap.face_id_of_dart(d) not in inside
    ]
    if not boundary:
        raise DisconnectedBoundary("face set has no boundary")
    remaining = set(boundary)
    start = min(boundary)
    cycle = [start]
    remaining.discard(start)
    d = start
    while True:
        e = int(fmap.alpha[d])
        while True:
            t = e % n
            e = e - t + (t - 1) % n  # sigma^(-1): previous dart around the vertex
            if fmap.face_id_of_dart(e) not in inside:
                break
        if e == start:
            break
        cycle.append(e)
        remaining.discard(e)
        d = e
    if remaining:
        raise DisconnectedBoundary(
            f"boundary splits into more than one cycle ({len(remaining)} darts left over)"
        )
    return cycle


def boundary_walk(sector: Sector) -> BoundaryWalk:
    """Unfold the eleven copies and walk their common boundary.

    The sector's own boundary is rooted at 1/0; consecutive copies glue
    along the maximal radial path fixed by s_j + 1 = s_-j, and each copy
    contributes the remaining arc of its boundary, translated.
    """
    fmap = sector.fmap
    cycle = _boundary_cycle(fmap, sector.face_ids)
    slots = [fmap.vertices[d // fmap.level] for d in cycle]
    north = canonical(1, 0, LEVEL)
    hits = [i for i, v in enumerate(slots) if v == north]
    if len(hits) != 1:
        raise DisconnectedBoundary(f"1/0 appears {len(hits)} times on the sector boundary")
    k = hits[0]
    slots = slots[k:] + slots[:k]
    length = len(slots)

    radius = 0
    while radius + 1 < length // 2 and slots[radius + 1].translated(1) == slots[-(radius + 1)]:
        radius += 1
    # fresh slots per copy; the next copy starts at the translate of slots[radius]
    free = slots[radius:length - radius]
    walk = tuple(v.translated(k) for k in range(LEVEL) for v in free)
    return BoundaryWalk(walk, len(free), tuple(slots), fmap)


def normalize_walk(walk: BoundaryWalk, first_label: str, second_label: str) -> BoundaryWalk:
    """Rotate so the walk opens with the directed edge first -> second.

    Every directed edge occurs at most once on the walk, so this fixes the
    starting slot unambiguously for table comparison.
    """
    vs = walk.labels()
    candidates = [
        i
        for i, v in enumerate(vs)
        if v == first_label and vs[(i + 1) % len(vs)] == second_label
    ]
    if len(candidates) != 1:
        raise UnpairedEdge(
            f"directed edge {first_label}->{second_label} occurs {len(candidates)} times"
        )
    return walk.rotated(candidates[0])


@dataclass(frozen=True)
class PairingTable:
    """99 pairs of directed boundary slots (i, j): edge i runs v->u where
    edge j runs u->v."""

    pairs: tuple[tuple[int, int], ...]

    def partner(self, slot: int) -> int:
        return self._lookup()[slot]

    def _lookup(self) -> dict[int, int]:
        out = {}
        for i, j in self.pairs:
            out[i] = j
            out[j] = i
        return out


def pair_boundary(walk: BoundaryWalk) -> PairingTable:
    """Match every directed boundary edge with its unique reversal."""
    vs = walk.vertices
    total = len(vs)
    where: dict[tuple[FareyFraction, FareyFraction], int] = {}
    for i in range(total):
        key = (vs[i], vs[(i + 1) % total])
        if key in where:
            raise UnpairedEdge(f"directed edge {key[0]}->{key[1]} occurs twice")
        where[key] = i
    pairs = set()
    for (u, v), i in where.items():
        j = where.get((v, u))
        if j is None:
            raise UnpairedEdge(f"no reversed occurrence of {u}->{v}")
        if i == j:
            raise UnpairedEdge(f"edge {u}->{v} pairs with itself")
        pairs.add((min(i, j), max(i, j)))
    assert len(pairs) * 2 == total
    return PairingTable(tuple(sorted(pairs)))


def quotient_genus(walk: BoundaryWalk, pairing: PairingTable) -> int:
    """Genus of the surface obtained by gluing the paired boundary edges.

    Boundary slots glued by the pairing are merged with union-find; the
    Euler characteristic combines those corner classes with the interior
    vertex/edge/face counts of the tiling.
    """
    total = len(walk)
    parent = list(range(total))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    for i, j in pairing.pairs:
        union(i, (j + 1) % total)
        union((i + 1) % total, j)

    classes: dict[int, FareyFraction] = {}
    for slot in range(total):
        root = find(slot)
        v = walk.vertices[slot]
        if root in classes:
            assert classes[root] == v, "glued slots carry different labels"
        else:
            classes[root] = v

    fmap = walk.fmap
    boundary_vertices = set(walk.vertices)
    interior_vertices = fmap.vertex_count - len(boundary_vertices)
    boundary_edge_classes = len(pairing.pairs)
    interior_edges = fmap.edge_count - boundary_edge_classes
    chi = (
        (len(classes) + interior_vertices)
        - (boundary_edge_classes + interior_edges)
        + fmap.face_count
    )
    assert chi % 2 == 0
    return (2 - chi) // 2
