"""Lower convex hulls of lifted point configurations.

``lift_triangulation`` computes the regular triangulation induced by
integer heights with an infinitesimal tie-break: point k gets height
h_k + eps^{rank_k} for eps -> 0+, so cospherical/coplanar flats are split
deterministically by rank (lexicographic placing order by default).

Candidate simplices are tested directly against all other points; with the
small configurations of this package (at most a few dozen points) this is
simpler and safer than an incremental hull.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial

from . import geometry as geo


def lift_triangulation(points, heights, ranks=None):
    """Cells (as index tuples) of the lower hull of the lifted points.

    points  -- list of distinct integer tuples spanning dimension n
    heights -- parallel list of exact heights
    ranks   -- perturbation order (defaults to position); must be distinct
    """
    pts = [tuple(p) for p in points]
    n = len(pts[0])
    N = len(pts)
    if ranks is None:
        ranks = list(range(N))
    hs = [Fraction(h) for h in heights]
    cells = []
    for S in combinations(range(N), n + 1):
        base = pts[S[0]]
        vol = geo.det([geo.vsub(pts[i], base) for i in S[1:]])
        if vol == 0:
            continue
        plane = geo.solve_linear(
            [list(pts[i]) + [1] for i in S],
            [hs[i] for i in S],
        )
        alpha, beta = plane[:n], plane[n]
        ok = True
        for q in range(N):
            if q in S:
                continue
            diff = hs[q] - (geo.vdot(alpha, pts[q]) + beta)
            if diff > 0:
                continue
            if diff < 0:
                ok = False
                break
            # exact tie: the infinitesimal perturbation decides
            lam = geo.barycentric([pts[i] for i in S], pts[q])
            contributions = [(ranks[q], Fraction(1))]
            for pos, i in enumerate(S):
                if lam[pos] != 0:
                    contributions.append((ranks[i], -lam[pos]))
            contributions.sort()
            dominant = contributions[0][1]
            if dominant < 0:
                ok = False
                break
        if ok:
            cells.append(S)
    return cells


def lift_subdivision(points, heights):
    """Cells of the (unperturbed) regular subdivision induced by heights.

    Returned as tuples of point indices; non-simplicial cells appear as a
    single merged cell.
    """
    pts = [tuple(p) for p in points]
    n = len(pts[0])
    hs = [Fraction(h) for h in heights]
    tris = lift_triangulation(pts, hs)

    def plane_of(cell):
        sol = geo.solve_linear([list(pts[i]) + [1] for i in cell], [hs[i] for i in cell])
        return tuple(sol)

    planes = [plane_of(c) for c in tris]
    parent = list(range(len(tris)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    facet_map = {}
    for idx, cell in enumerate(tris):
        for facet in combinations(cell, n):
            facet_map.setdefault(facet, []).append(idx)
    for shared in facet_map.values():
        if len(shared) == 2:
            a, b = shared
            if planes[a] == planes[b]:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb

    groups = {}
    for idx in range(len(tris)):
        groups.setdefault(find(idx), set()).update(tris[idx])
    return [tuple(sorted(g)) for g in sorted(groups.values(), key=lambda s: tuple(sorted(s)))]


def paraboloid_heights(points):
    """The canonical convexifying lift f(i) = sum of squared coordinates."""
    return [sum(c * c for c in p) for p in points]


def unit_volume_count(points, cells) -> bool:
    """True iff every cell is a simplex of minimal lattice volume."""
    pts = [tuple(p) for p in points]
    n = len(pts[0])
    unit = Fraction(1, factorial(n))
    return all(
        len(c) == n + 1 and geo.simplex_volume([pts[i] for i in c]) == unit for c in cells
    )
