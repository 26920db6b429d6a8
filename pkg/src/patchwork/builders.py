"""Ready-made triangulations of T_d^n and random-triangulation utilities."""

from __future__ import annotations

from random import Random

from . import geometry as geo
from . import lifts
from .lattice import InvalidArgument, LatticePolytope, Triangulation, standard_simplex


def grid_triangulation_2d(d: int) -> Triangulation:
    """The standard primitive triangulation of T_d^2: upward triangles
    (i,j),(i+1,j),(i,j+1) and downward triangles (i+1,j),(i,j+1),(i+1,j+1)."""
    cells = []
    for i in range(d):
        for j in range(d - i):
            cells.append(LatticePolytope([(i, j), (i + 1, j), (i, j + 1)]))
            if i + j <= d - 2:
                cells.append(LatticePolytope([(i + 1, j), (i, j + 1), (i + 1, j + 1)]))
    return Triangulation(standard_simplex(2, d), cells)


def staircase_triangulation_3d(d: int) -> Triangulation:
    """A maximal primitive triangulation of T_d^3: upward tetrahedra plus
    octahedra split along a fixed diagonal plus downward tetrahedra."""
    cells = []
    for i in range(d):
        for j in range(d - i):
            for k in range(d - i - j):
                o = (i, j, k)
                e1 = (i + 1, j, k)
                e2 = (i, j + 1, k)
                e3 = (i, j, k + 1)
                cells.append(LatticePolytope([o, e1, e2, e3]))
                if i + j + k <= d - 2:
                    a, a2 = e1, (i, j + 1, k + 1)
                    b, b2 = e2, (i + 1, j, k + 1)
                    c, c2 = e3, (i + 1, j + 1, k)
                    for x, y in ((b, c), (c, b2), (b2, c2), (c2, b)):
                        cells.append(LatticePolytope([a, a2, x, y]))
                if i + j + k <= d - 3:
                    cells.append(
                        LatticePolytope(
                            [(i + 1, j + 1, k), (i + 1, j, k + 1), (i, j + 1, k + 1), (i + 1, j + 1, k + 1)]
                        )
                    )
    return Triangulation(standard_simplex(3, d), cells)


def regular_triangulation_2d(d: int, heights, ranks=None) -> Triangulation:
    points = standard_simplex(2, d).lattice_points()
    cells = [
        LatticePolytope([points[i] for i in tri])
        for tri in lifts.lift_triangulation(points, heights, ranks)
    ]
    return Triangulation(standard_simplex(2, d), cells)


def random_regular_subdivision(n: int, d: int, rng: Random):
    """A random regular subdivision of T_d^n (possibly coarse cells)."""
    from .lattice import LatticeSubdivision

    target = standard_simplex(n, d)
    points = target.lattice_points()
    heights = [rng.randrange(0, 4) for _ in points]
    cells = [
        LatticePolytope([points[i] for i in cell])
        for cell in lifts.lift_subdivision(points, heights)
    ]
    return LatticeSubdivision(target, cells)


def random_maximal_triangulation_2d(d: int, rng: Random, flips: int = 0) -> Triangulation:
    """Random maximal triangulation: a jittered-paraboloid regular
    triangulation followed by random edge flips (which may destroy
    regularity but preserve maximality)."""
    target = standard_simplex(2, d)
    points = target.lattice_points()
    big = 1000000
    heights = [big * h + rng.randrange(0, 1000) for h in lifts.paraboloid_heights(points)]
    cells = [
        LatticePolytope([points[i] for i in tri])
        for tri in lifts.lift_triangulation(points, heights)
    ]
    t = Triangulation(target, cells)
    for _ in range(flips if flips else 4 * d * d):
        flippable = flippable_edges(t)
        if not flippable:
            break
        edge = flippable[rng.randrange(len(flippable))]
        t = edge_flip(t, edge)
    return t


def flippable_edges(t: Triangulation):
    """Interior edges whose two triangles form a strictly convex quad."""
    edge_map = {}
    for idx, cell in enumerate(t.cells):
        vs = cell.vertices
        for a in range(3):
            for b in range(a + 1, 3):
                edge_map.setdefault(tuple(sorted((vs[a], vs[b]))), []).append(idx)
    out = []
    for edge, tris in sorted(edge_map.items()):
        if len(tris) != 2:
            continue
        u, v = edge
        a = next(x for x in t.cells[tris[0]].vertices if x not in edge)
        b = next(x for x in t.cells[tris[1]].vertices if x not in edge)
        s_u = geo.cross2(geo.vsub(v, u), geo.vsub(a, u)), geo.cross2(geo.vsub(v, u), geo.vsub(b, u))
        if s_u[0] * s_u[1] >= 0:
            continue
        # strictly convex: u and v on opposite sides of line(a, b)
        t_u = geo.cross2(geo.vsub(b, a), geo.vsub(u, a))
        t_v = geo.cross2(geo.vsub(b, a), geo.vsub(v, a))
        if t_u * t_v < 0:
            out.append(edge)
    return out


def edge_flip(t: Triangulation, edge) -> Triangulation:
    u, v = edge
    tris = [c for c in t.cells if u in c.vertices and v in c.vertices]
    if len(tris) != 2:
        raise InvalidArgument(f"edge {edge} is not interior")
    a = next(x for x in tris[0].vertices if x not in edge)
    b = next(x for x in tris[1].vertices if x not in edge)
    cells = [c for c in t.cells if c not in tris]
    cells.append(LatticePolytope([a, b, u]))
    cells.append(LatticePolytope([a, b, v]))
    return Triangulation(t.target, cells)
