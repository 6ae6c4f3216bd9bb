"""Rank-3 picture: stereographic projection of the arrangement sphere.

Projects from the pole opposite the generic direction onto the tangent
plane at the generic direction, so the open hemisphere where the slice is
bounded lands inside a disk.  Reflection planes appear as arcs, bounded
chambers as shaded spherical triangles, and the transformed-root facets as
bold triangle boundaries with their vertices labeled by root position
(1-based).

Floating point is used here for display coordinates only; every decision
feeding the picture (which chambers are bounded, which facets exist) was
made upstream in exact arithmetic.
"""

from __future__ import annotations

import math

from .pipeline import Bundle

VIEW = 1000.0
SCALE = VIEW / 4.4          # hemisphere disk has radius 2
CUTOFF = -0.15              # drop sphere points too close to the pole
ARC_STEPS = 192


def _unit(v):
    norm = math.sqrt(sum(x * x for x in v))
    return tuple(x / norm for x in v)


def _fvec(vector):
    return tuple(float(x) for x in vector)


def _basis_perp(v):
    axis = (1.0, 0.0, 0.0) if abs(v[0]) < 0.9 else (0.0, 1.0, 0.0)
    b1 = _unit(_cross(v, axis))
    b2 = _cross(v, b1)
    return b1, b2


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class _Projector:
    def __init__(self, v_unit):
        self.v = v_unit
        self.b1, self.b2 = _basis_perp(v_unit)

    def height(self, x):
        return _dot(x, self.v)

    def to_plane(self, x):
        """Stereographic image of a unit vector, in pixel coordinates."""
        t = 2.0 / (1.0 + _dot(x, self.v))
        u = tuple(t * (xi + vi) - 2.0 * vi for xi, vi in zip(x, self.v))
        px = VIEW / 2 + SCALE * _dot(u, self.b1)
        py = VIEW / 2 - SCALE * _dot(u, self.b2)
        return px, py


def _slerp(a, b, t):
    cosw = max(-1.0, min(1.0, _dot(a, b)))
    w = math.acos(cosw)
    if w < 1e-9:
        return a
    s = math.sin(w)
    return tuple((math.sin((1 - t) * w) * xa + math.sin(t * w) * xb) / s
                 for xa, xb in zip(a, b))


def _path(points, close=False):
    cmds = [f"{'M' if i == 0 else 'L'}{x:.3f},{y:.3f}"
            for i, (x, y) in enumerate(points)]
    return " ".join(cmds) + (" Z" if close else "")


def _arc_points(proj, a, b, steps=48):
    return [proj.to_plane(_slerp(a, b, i / steps)) for i in range(steps + 1)]


def render_svg(bundle: Bundle) -> str:
    system = bundle.system
    if system.rank != 3:
        raise ValueError("rendering is defined for rank 3 only")
    proj = _Projector(_unit(_fvec(bundle.generic.vector)))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW:.0f} {VIEW:.0f}">',
        "<style>"
        ".plane{fill:none;stroke:#9aa0a6;stroke-width:1.2}"
        ".region{fill:#f6d8a0;stroke:none;fill-opacity:0.85}"
        ".facet{fill:none;stroke:#111111;stroke-width:5;stroke-linejoin:round}"
        ".vertex-label{font:28px sans-serif;fill:#b03030;text-anchor:middle}"
        "</style>",
        f'<rect width="{VIEW:.0f}" height="{VIEW:.0f}" fill="#ffffff"/>',
    ]

    # shaded bounded-slice chambers (drawn first, under everything)
    for chamber, bounded in zip(bundle.chamber_list, bundle.bounded_flags):
        if not bounded:
            continue
        corners = [_unit(_fvec(r)) for r in chamber.rays]
        points = []
        for i, corner in enumerate(corners):
            points.extend(_arc_points(proj, corner, corners[(i + 1) % 3]))
        parts.append(f'<path class="region" d="{_path(points, close=True)}"/>')

    # great circles of the reflection planes
    for _, root in system.reflections:
        normal = _unit(_fvec(root))
        e1, e2 = _basis_perp(normal)
        run = []
        for i in range(ARC_STEPS + 1):
            t = 2 * math.pi * i / ARC_STEPS
            x = tuple(math.cos(t) * a + math.sin(t) * b for a, b in zip(e1, e2))
            if proj.height(x) > CUTOFF:
                run.append(proj.to_plane(x))
            elif len(run) > 1:
                parts.append(f'<path class="plane" d="{_path(run)}"/>')
                run = []
            else:
                run = []
        if len(run) > 1:
            parts.append(f'<path class="plane" d="{_path(run)}"/>')

    # bold facet boundaries of the transformed-root complex
    vertices = bundle.vertex_complex.vertices
    for facet in bundle.vertex_complex.complex.facets:
        corners = [_unit(_fvec(vertices[i])) for i in facet]
        points = []
        for i, corner in enumerate(corners):
            points.extend(_arc_points(proj, corner, corners[(i + 1) % 3]))
        parts.append(f'<path class="facet" d="{_path(points, close=True)}"/>')

    # vertex labels (1-based root positions)
    for i, vertex in enumerate(vertices):
        px, py = proj.to_plane(_unit(_fvec(vertex)))
        parts.append(f'<text class="vertex-label" x="{px:.3f}" '
                     f'y="{py - 10:.3f}">{i + 1}</text>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
