"""Schematic SVG drawings: concentric shells for prime levels, BFS shells
otherwise.  Output is plain SVG 1.1 with straight chords; byte-identical for
identical inputs."""

from __future__ import annotations

import math

from .arith import canonical
from .errors import Unsupported
from .maps import FareyMap
from .metrics import first_circuit, is_prime, poles, second_circuit

_SCALE = 110.0
_EXTENT = 3.6


def _fmt(x: float) -> str:
    out = f"{x:.2f}"
    return "0.00" if out == "-0.00" else out


def _polar(radius: float, angle: float) -> tuple[float, float]:
    # angle measured counterclockwise from 12 o'clock; y grows downward in SVG
    return radius * math.sin(angle), -radius * math.cos(angle)


def layout_positions(fmap: FareyMap) -> dict[int, tuple[float, float]]:
    """Vertex id -> planar position: 1/0 at the origin, the distance-1
    circuit on radius 1, the distance-2 walk on radius 2 (first visit fixes
    the slot), remaining poles outside; composite levels fall back to BFS
    shells from 1/0."""
    n = fmap.level
    if n < 3:
        raise Unsupported(f"no layout below level 3, got {n}")
    positions: dict[int, tuple[float, float]] = {}
    north = fmap.vertex_id(canonical(1, 0, n))
    positions[north] = (0.0, 0.0)
    if is_prime(n) and n >= 5:
        ring1 = first_circuit(n).vertices
        for j, v in enumerate(ring1):
            positions[fmap.vertex_id(v)] = _polar(1.0, 2 * math.pi * j / len(ring1))
        walk = second_circuit(n).vertices
        for j, v in enumerate(walk):
            vid = fmap.vertex_id(v)
            if vid not in positions:
                positions[vid] = _polar(2.0, 2 * math.pi * j / len(walk))
        outer = poles(n)[1:]
        for j, v in enumerate(outer):
            positions[fmap.vertex_id(v)] = _polar(3.0, 2 * math.pi * j / len(outer))
        return positions
    # BFS shells
    from .metrics import _bfs_all

    dist = _bfs_all(fmap, north)
    for d in range(1, max(dist) + 1):
        shell = sorted(i for i, x in enumerate(dist) if x == d)
        for j, vid in enumerate(shell):
            positions[vid] = _polar(float(d), 2 * math.pi * j / len(shell))
    return positions


def _point(pos) -> str:
    x, y = pos
    return f"{_fmt(_SCALE * x + _SCALE * _EXTENT)},{_fmt(_SCALE * y + _SCALE * _EXTENT)}"


def render_map(fmap: FareyMap, sector_face_ids=None) -> str:
    """SVG document for the map, or for a shaded face subset when given."""
    positions = layout_positions(fmap)
    size = _fmt(2 * _SCALE * _EXTENT)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    centre = _fmt(_SCALE * _EXTENT)
    if is_prime(fmap.level) and fmap.level >= 5:
        for radius, dash in ((1.0, ""), (2.0, ""), (3.0, ' stroke-dasharray="6,4"')):
            lines.append(
                f'<circle cx="{centre}" cy="{centre}" r="{_fmt(_SCALE * radius)}" '
                f'fill="none" stroke="#cccccc" stroke-width="1"{dash}/>'
            )

    if sector_face_ids is None:
        shown_vertices = sorted(positions)
        edges = fmap.edge_id_pairs()
        shaded = []
    else:
        face_ids = sorted(sector_face_ids)
        shaded = [fmap.face_vertex_ids(fid) for fid in face_ids]
        shown = {i for tri in shaded for i in tri}
        shown_vertices = sorted(shown)
        edges = sorted(
            {
                tuple(sorted((a, b)))
                for tri in shaded
                for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2]))
            }
        )

    for tri in shaded:
        pts = " ".join(_point(positions[i]) for i in tri)
        lines.append(f'<polygon points="{pts}" fill="#dce9f9" stroke="none"/>')
    for i, j in edges:
        xi, yi = _point(positions[i]).split(",")
        xj, yj = _point(positions[j]).split(",")
        lines.append(
            f'<line x1="{xi}" y1="{yi}" x2="{xj}" y2="{yj}" '
            'stroke="#5577aa" stroke-width="0.8"/>'
        )
    for vid in shown_vertices:
        x, y = _point(positions[vid]).split(",")
        lines.append(f'<circle cx="{x}" cy="{y}" r="3" fill="#203050"/>')
        lines.append(
            f'<text x="{x}" y="{y}" dx="5" dy="-4" font-size="11" '
            f'font-family="monospace" fill="#000000">{fmap.vertices[vid]}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
