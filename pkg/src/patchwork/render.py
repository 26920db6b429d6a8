"""Deterministic SVG (curves) and OBJ (surfaces) emitters.

The SVG shows the square model [-d, d]^2: the four reflected triangulations,
signs as filled/hollow vertices, curve pieces as polylines, and matched tick
marks indicating the antipodal boundary identification.  The OBJ lists the
pieces in the octahedron model with a JSON sidecar for the identifications.
"""

from __future__ import annotations

from fractions import Fraction

from .construction import PatchworkComplex, SignedOrthantComplex

VIEW = 720
MARGIN = 40


def _fmt(x: Fraction) -> str:
    return f"{float(x):.3f}"


def render_svg(soc: SignedOrthantComplex, pc: PatchworkComplex) -> str:
    d = pc.degree
    scale = Fraction(VIEW - 2 * MARGIN, 4 * d)  # model coords are 2x-scaled

    def px(p):
        x = MARGIN + float((p[0] + 2 * d) * scale)
        y = MARGIN + float((2 * d - p[1]) * scale)
        return f"{x:.2f},{y:.2f}"

    model = soc.model
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW}" height="{VIEW}" viewBox="0 0 {VIEW} {VIEW}">',
        f'<rect width="{VIEW}" height="{VIEW}" fill="white"/>',
    ]
    # triangulation edges
    edges = set()
    for coords, _, _ in model.simplices:
        for i in range(3):
            for j in range(i + 1, 3):
                edges.add(tuple(sorted((coords[i], coords[j]))))
    for u, v in sorted(edges):
        lines.append(
            f'<polyline points="{px(u)} {px(v)}" stroke="#cccccc" stroke-width="1" fill="none"/>'
        )
    # boundary of the model square
    corners = [(2 * d, 0), (0, 2 * d), (-2 * d, 0), (0, -2 * d), (2 * d, 0)]
    pts = " ".join(px(c) for c in corners)
    lines.append(f'<polyline points="{pts}" stroke="#444444" stroke-width="2" fill="none"/>')
    # antipodal tick marks on boundary curve nodes
    ticks = sorted(
        {
            tuple(2 * c for c in p)
            for piece in pc.pieces
            for p in piece
            if sum(abs(c) for c in p) == d
        }
    )
    mark = 0
    seen = set()
    for p in ticks:
        key = min(p, tuple(-c for c in p))
        if key in seen:
            continue
        seen.add(key)
        mark += 1
        for q in (p, tuple(-c for c in p)):
            lines.append(
                f'<circle cx="{px(q).split(",")[0]}" cy="{px(q).split(",")[1]}" r="6" fill="none" stroke="#2b8a3e" stroke-width="1.5"/>'
            )
            lines.append(
                f'<text x="{px(q).split(",")[0]}" y="{px(q).split(",")[1]}" font-size="9" fill="#2b8a3e" dx="7" dy="-5">{mark}</text>'
            )
    # curve pieces
    for piece in sorted(pc.pieces):
        scaled = [tuple(2 * c for c in p) for p in piece]
        pts = " ".join(px(p) for p in scaled)
        lines.append(f'<polyline points="{pts}" stroke="#c92a2a" stroke-width="2.5" fill="none"/>')
    # signed vertices
    drawn = set()
    for s_id, (coords, vids, mults) in enumerate(model.simplices):
        signs = soc.simplex_signs[s_id]
        for p, s in zip(coords, signs):
            if p in drawn:
                continue
            drawn.add(p)
            cx, cy = px(p).split(",")
            if s > 0:
                lines.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="#1864ab"/>')
            else:
                lines.append(
                    f'<circle cx="{cx}" cy="{cy}" r="4" fill="white" stroke="#1864ab" stroke-width="1.5"/>'
                )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_obj(pc: PatchworkComplex):
    """OBJ text plus a sidecar dict describing antipodal identifications."""
    verts = []
    vid = {}

    def vertex_id(p):
        if p not in vid:
            vid[p] = len(verts) + 1
            verts.append(p)
        return vid[p]

    faces = []
    for piece in sorted(pc.pieces):
        faces.append([vertex_id(tuple(p)) for p in piece])

    out = ["# patchwork surface pieces, octahedron model"]
    for p in verts:
        out.append("v " + " ".join(f"{float(c):.6f}" for c in p))
    for f in faces:
        out.append("f " + " ".join(map(str, f)))
    d = pc.degree
    ident = []
    for p, i in sorted(vid.items()):
        if sum(abs(c) for c in p) == d:
            q = tuple(-c for c in p)
            if q in vid and vid[p] < vid[q]:
                ident.append([vid[p], vid[q]])
    sidecar = {"identifiedVertexPairs": ident, "model": "octahedron", "degree": pc.degree}
    return "\n".join(out) + "\n", sidecar
