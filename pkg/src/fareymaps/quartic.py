"""Klein's 14-sided polygon derived from the level-7 Farey map.

Outside the distance-2 walk of M3(7) sit 21 faces: the seven triangles of the
star of 2/0 and seven quadrilaterals (pairs of faces glued along a diagonal)
with a corner at 3/0.  Cutting the surface open along the seven seams
"2/0 -- x/3 -- 3/0" (a Farey edge followed by a segment through a
quadrilateral) unfolds this outer region into a ring of 14 chambers: reading
the 21-slot walk cyclically, every denominator-3 slot is a pinch point where
a seam meets the walk, and between consecutive pinches lies either a single
triangle (one walk edge, corner instance of 2/0) or a cut-open quadrilateral
region (two walk edges around a denominator-2 slot, corner instance of 3/0).
The polygon side through a pinch x/3 carries the labels
(2/0, x/3, y/2, 3/0), where y/2 is the quadrilateral corner on a fixed side
of the oriented seam; paired sides carry equal label sequences read in
opposite directions, which reproduces Klein's identifications
1-6, 3-8, 5-10, 7-12, 9-14, 11-2, 13-4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import (
    ExtRational,
    FareyFraction,
    IntMatrix,
    canonical,
    in_principal_congruence,
    mobius_exact,
)
from .errors import NoMatch, WrongLevel
from .maps import Face, FareyMap
from .metrics import second_circuit

LEVEL = 7


def _require_level(fmap: FareyMap) -> None:
    if fmap.level != LEVEL:
        raise WrongLevel(f"expected a level-7 map, got level {fmap.level}")


@dataclass(frozen=True)
class RingRegion:
    """One chamber of the outer ring: a triangle at 2/0 or a quadrilateral
    at 3/0 (two faces sharing a diagonal), with its corners in cyclic order."""

    kind: str  # "triangle" | "quad"
    corners: tuple[FareyFraction, ...]
    faces: tuple[Face, ...]

    def labels(self) -> tuple[str, ...]:
        return tuple(str(v) for v in self.corners)


@dataclass(frozen=True)
class Side:
    """One side of the 14-gon.

    labels is always ordered (2/0, x/3, y/2, 3/0); anticlockwise tells whether
    walking the polygon anticlockwise reads the sequence in that direction or
    reversed.
    """

    index: int
    labels: tuple[FareyFraction, FareyFraction, FareyFraction, FareyFraction]

    anticlockwise: bool

    def label_strings(self) -> tuple[str, str, str, str]:
        return tuple(str(v) for v in self.labels)


@dataclass(frozen=True)
class FourteenGon:
    sides: tuple[Side, ...]  # listed as sides 1..14 in polygon order

    def side(self, index: int) -> Side:
        return self.sides[index - 1]

    def corner_labels(self) -> tuple[str, ...]:
        """The 14 polygon corners in order; corner k starts side k."""
        out = []
        for s in self.sides:
            out.append(str(s.labels[0] if s.anticlockwise else s.labels[3]))
        return tuple(out)


@dataclass(frozen=True)
class SidePairing:
    pairs: tuple[tuple[int, int], ...]  # 7 pairs, each sorted, fixed-point-free

    def partner(self, index: int) -> int:
        for i, j in self.pairs:
            if index == i:
                return j
            if index == j:
                return i
        raise NoMatch(f"side {index} not in pairing")


def _quad_at(fmap: FareyMap, third: FareyFraction):
    """The quadrilateral with denominator-3 corner `third`: returns
    (inner face, outer face, ccw-later den-2 corner, ccw-earlier den-2 corner)."""
    pole3 = canonical(3, 0, LEVEL)
    inner = None
    for fid in range(fmap.face_count):
        vs = fmap.face(fid).vertices
        if third in vs and sorted(v.den for v in vs) == [2, 2, 3]:
            inner = fmap.face(fid)
            break
    assert inner is not None, f"no quadrilateral at {third}"
    u, w = [v for v in inner.vertices if v.den == 2]
    outer = fmap.face(fmap.face_id_by_vertices([u, pole3, w]))
    rot = fmap.neighbors(pole3)
    for i, r in enumerate(rot):
        nxt = rot[(i + 1) % len(rot)]
        if {r, nxt} == {u, w}:
            return inner, outer, nxt, r
    raise AssertionError(f"{u}, {w} not consecutive around {pole3}")


def outer_ring(fmap: FareyMap) -> tuple[RingRegion, ...]:
    """The 14 chambers of the ring beyond the distance-2 walk, in cyclic order.

    Each quadrilateral is listed at the chamber whose leading seam cuts it.
    """
    _require_level(fmap)
    walk = second_circuit(LEVEL).vertices
    pole2 = canonical(2, 0, LEVEL)
    pole3 = canonical(3, 0, LEVEL)
    pinches = [i for i, v in enumerate(walk) if v.den == 3]
    regions = []
    for a, b in zip(pinches, pinches[1:] + [pinches[0] + len(walk)]):
        gap = b - a
        start, end = walk[a], walk[b % len(walk)]
        if gap == 1:
            face = fmap.face(fmap.face_id_by_vertices([start, pole2, end]))
            regions.append(RingRegion("triangle", (start, pole2, end), (face,)))
        else:
            assert gap == 2, "walk structure: pinches one or two slots apart"
            inner, outer, later, earlier = _quad_at(fmap, start)
            regions.append(
                RingRegion("quad", (start, later, pole3, earlier), (inner, outer))
            )
    assert len(regions) == 14
    assert all(r.kind != regions[i - 1].kind for i, r in enumerate(regions))
    return tuple(regions)


def fourteen_gon(fmap: FareyMap) -> FourteenGon:
    """The 14-gon: one side per pinch slot, numbered so that side 1 is the
    anticlockwise side labelled (2/0, 5/3, 3/2, 3/0)."""
    _require_level(fmap)
    walk = second_circuit(LEVEL).vertices
    pole2 = canonical(2, 0, LEVEL)
    pole3 = canonical(3, 0, LEVEL)
    pinches = [i for i, v in enumerate(walk) if v.den == 3]

    raw = []
    for k, s in enumerate(pinches):
        prev_gap = s - pinches[k - 1] if k else s + len(walk) - pinches[-1]
        third = walk[s]
        _, _, later, _ = _quad_at(fmap, third)
        # a triangle chamber before the pinch means the side runs from its
        # 2/0 corner through the pinch into a quadrilateral: anticlockwise
        raw.append(((pole2, third, later, pole3), prev_gap == 1))

    anchor_labels = tuple(
        canonical(a, c, LEVEL) for a, c in [(2, 0), (5, 3), (3, 2), (3, 0)]
    )
    anchor = next(
        i for i, (labels, acw) in enumerate(raw) if acw and labels == anchor_labels
    )
    sides = tuple(
        Side(k + 1, *raw[(anchor + k) % 14]) for k in range(14)
    )
    gon = FourteenGon(sides)
    corners = gon.corner_labels()
    assert corners.count("2/0") == corners.count("3/0") == 7
    assert all(corners[i] != corners[i - 1] for i in range(14))
    return gon


def side_pairing(gon: FourteenGon) -> SidePairing:
    """Pair sides whose label sequences match with reversed orientation."""
    by_labels: dict[tuple, list[Side]] = {}
    for side in gon.sides:
        by_labels.setdefault(side.labels, []).append(side)
    pairs = []
    for labels, group in sorted(by_labels.items(), key=lambda kv: kv[1][0].index):
        if len(group) != 2 or group[0].anticlockwise == group[1].anticlockwise:
            raise NoMatch(f"side(s) {[s.index for s in group]} lack a reversed partner")
        pairs.append(tuple(sorted((group[0].index, group[1].index))))
    return SidePairing(tuple(sorted(pairs)))


def quotient_genus_of_gon(gon: FourteenGon, pairing: SidePairing) -> int:
    """Genus of the surface obtained by identifying paired sides.

    Corner k (start of side k) is glued to the end corner of its partner
    side; the identified polygon has (corner classes) - 7 + 1 = 2 - 2g.
    """
    parent = list(range(14))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    for k in range(1, 15):
        union(k - 1, pairing.partner(k) % 14)  # c_k ~ c_{partner(k)+1}
    classes = len({find(i) for i in range(14)})
    corners = gon.corner_labels()
    for i in range(14):
        assert corners[i] == corners[find(i)], "corner classes mix vertex labels"
    chi = classes - 7 + 1
    assert chi % 2 == 0
    return (2 - chi) // 2


# -- Klein's explicit edge-pairing matrix -----------------------------------

KLEIN_PAIRING_MATRIX = IntMatrix(113, -35, 42, -13)
KLEIN_EDGE1 = tuple(ExtRational.parse(s) for s in ("2/7", "1/3", "3/7"))
KLEIN_EDGE6_RECORDED = tuple(ExtRational.parse(s) for s in ("18/7", "8/3", "19/7"))


def _segment_det(q1: ExtRational, q2: ExtRational) -> int:
    return q1.num * q2.den - q2.num * q1.den


@dataclass(frozen=True)
class KleinMatrixReport:
    """Exact check of Klein's matrix that pairs edge 1 with edge 6."""

    matrix: IntMatrix
    in_gamma7: bool
    edge1: tuple[ExtRational, ...]
    images: tuple[ExtRational, ...]
    recorded_edge6: tuple[ExtRational, ...]
    endpoints_match_recorded: bool
    segment_dets_before: tuple[int, int]
    segment_dets_after: tuple[int, int]

    def to_text(self) -> str:
        lines = [
            f"matrix {self.matrix}",
            f"in Gamma(7): {self.in_gamma7}",
            "edge 1 -> image:",
        ]
        for q, img in zip(self.edge1, self.images):
            lines.append(f"  {q} -> {img}")
        lines.append(
            f"segment determinants before: {self.segment_dets_before}"
            " (Farey edge, non-Farey segment)"
        )
        lines.append(f"segment determinants after:  {self.segment_dets_after}")
        lines.append(
            f"edge 6 as Klein recorded it: ({', '.join(map(str, self.recorded_edge6))})"
        )
        if self.endpoints_match_recorded:
            lines.append("computed image matches the recorded edge 6")
        else:
            diffs = ", ".join(
                f"{q} -> {img} (recorded {rec})"
                for q, img, rec in zip(self.edge1, self.images, self.recorded_edge6)
                if img != rec
            )
            lines.append(f"NOTE: computed image differs from the recorded edge 6: {diffs}")
        return "\n".join(lines)


def klein_matrix_report() -> KleinMatrixReport:
    m = KLEIN_PAIRING_MATRIX
    images = tuple(mobius_exact(m, q) for q in KLEIN_EDGE1)
    return KleinMatrixReport(
        matrix=m,
        in_gamma7=in_principal_congruence(m, 7),
        edge1=KLEIN_EDGE1,
        images=images,
        recorded_edge6=KLEIN_EDGE6_RECORDED,
        endpoints_match_recorded=images == KLEIN_EDGE6_RECORDED,
        segment_dets_before=(
            _segment_det(KLEIN_EDGE1[0], KLEIN_EDGE1[1]),
            _segment_det(KLEIN_EDGE1[1], KLEIN_EDGE1[2]),
        ),
        segment_dets_after=(
            _segment_det(images[0], images[1]),
            _segment_det(images[1], images[2]),
        ),
    )
