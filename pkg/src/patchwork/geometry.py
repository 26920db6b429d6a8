"""Exact rational geometry in dimensions 1..3.

Everything here works over ``fractions.Fraction`` (or plain ints); no
floating point is used anywhere.  Polytopes are small (cells of lattice
subdivisions), so face enumeration is done by direct search over
supporting hyperplanes rather than by a general hull algorithm.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

Vec = tuple  # tuple of int/Fraction


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(c, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def vdot(a: Vec, b: Vec):
    return sum(x * y for x, y in zip(a, b))


def cross2(a: Vec, b: Vec):
    return a[0] * b[1] - a[1] * b[0]


def cross3(a: Vec, b: Vec) -> Vec:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def det(rows) -> Fraction:
    """Determinant of a small square matrix by fraction-free-ish elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return sign * result


def matrix_rank(rows) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        p = m[row][col]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col] / p
                for c in range(col, ncols):
                    m[r][c] -= f * m[row][c]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def solve_linear(rows, rhs):
    """Solve a square exact linear system; returns None if singular."""
    n = len(rows)
    m = [list(map(Fraction, rows[i])) + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / p
                for c in range(col, n + 1):
                    m[r][c] -= f * m[col][c]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def affine_rank(points) -> int:
    """Dimension of the affine hull of a point set."""
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return matrix_rank([vsub(p, p0) for p in points[1:]])


def barycentric(basis, p):
    """Coefficients l with sum(l)=1 and sum(l_i * basis_i) = p.

    ``basis`` must be affinely independent and p must lie in its affine
    span; returns None otherwise.
    """
    n = len(basis[0])
    k = len(basis)
    rows = [[Fraction(basis[j][i]) for j in range(k)] for i in range(n)]
    rows.append([Fraction(1)] * k)
    rhs = list(p) + [1]
    aug = [list(map(Fraction, rows[i])) + [Fraction(rhs[i])] for i in range(n + 1)]
    pivots = []
    rr = 0
    for cc in range(k):
        pivot = None
        for q in range(rr, n + 1):
            if aug[q][cc] != 0:
                pivot = q
                break
        if pivot is None:
            continue
        aug[rr], aug[pivot] = aug[pivot], aug[rr]
        pv = aug[rr][cc]
        for q in range(n + 1):
            if q != rr and aug[q][cc] != 0:
                f = aug[q][cc] / pv
                for c2 in range(cc, k + 1):
                    aug[q][c2] -= f * aug[rr][c2]
        pivots.append((rr, cc))
        rr += 1
    # consistency: rows below rr must have zero rhs
    for q in range(rr, n + 1):
        if aug[q][k] != 0:
            return None
    if len(pivots) < k:
        return None  # basis not affinely independent
    sol = [Fraction(0)] * k
    for (q, cc) in pivots:
        sol[cc] = aug[q][k] / aug[q][cc]
    return tuple(sol)


def extreme_points(points):
    """Extreme points of conv(points), dimension of span <= 3."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts
    out = []
    for p in pts:
        others = [q for q in pts if q != p]
        if not point_in_hull(p, others):
            out.append(p)
    return out


def point_in_hull(p, points) -> bool:
    """Exact test: p in conv(points)?  Small LP-free implementation via
    recursive facet description of the hull within its affine span."""
    pts = sorted(set(map(tuple, points)))
    if not pts:
        return False
    if tuple(p) in pts:
        return True
    d = affine_rank(pts)
    if d == 0:
        return tuple(p) == pts[0]
    # p must lie in the affine span
    if affine_rank(pts + [tuple(p)]) > d:
        return False
    if d == 1:
        # segment: p between min and max along the direction
        a, b = pts[0], pts[-1]
        ab = vsub(b, a)
        t_num = vdot(vsub(p, a), ab)
        t_den = vdot(ab, ab)
        return 0 <= t_num and t_num <= t_den
    ineqs = hull_inequalities(pts)
    return all(vdot(n_, p) <= c for (n_, c) in ineqs)


def hull_inequalities(points):
    """Facet inequalities (n, c) with conv(points) = {x : n.x <= c}.

    Only valid when the points affinely span the ambient space (full
    dimension 2 or 3).
    """
    pts = sorted(set(map(tuple, points)))
    dim = len(pts[0])
    assert affine_rank(pts) == dim, "hull_inequalities needs full-dimensional input"
    ineqs = set()
    if dim == 2:
        for a, b in combinations(pts, 2):
            dvec = vsub(b, a)
            n_ = (dvec[1], -dvec[0])
            c = vdot(n_, a)
            vals = [vdot(n_, q) - c for q in pts]
            if all(v <= 0 for v in vals):
                ineqs.add(_normalize_ineq(n_, c))
            elif all(v >= 0 for v in vals):
                ineqs.add(_normalize_ineq(vneg(n_), -c))
    elif dim == 3:
        for a, b, c3 in combinations(pts, 3):
            n_ = cross3(vsub(b, a), vsub(c3, a))
            if all(x == 0 for x in n_):
                continue
            c = vdot(n_, a)
            vals = [vdot(n_, q) - c for q in pts]
            if all(v <= 0 for v in vals):
                ineqs.add(_normalize_ineq(n_, c))
            elif all(v >= 0 for v in vals):
                ineqs.add(_normalize_ineq(vneg(n_), -c))
    else:
        raise ValueError(f"unsupported dimension {dim}")
    return sorted(ineqs)


def _normalize_ineq(n_, c):
    from math import gcd
    ints = [Fraction(x) for x in n_] + [Fraction(c)]
    denom = 1
    for f in ints:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in ints]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def polytope_facets(points):
    """Facet vertex sets of conv(points) (full-dimensional input)."""
    pts = extreme_points(points)
    facets = []
    for (n_, c) in hull_inequalities(pts):
        on = tuple(sorted(q for q in pts if vdot(n_, q) == c))
        facets.append(on)
    return sorted(set(facets))


def polytope_faces(points):
    """All proper nonempty faces (as sorted vertex tuples) of a full-dim
    polytope, plus the polytope's own vertex set is NOT included."""
    pts = extreme_points(points)
    facets = polytope_facets(pts)
    faces = set(facets)
    for v in pts:
        faces.add((v,))
    if len(pts[0]) == 3:
        for f1, f2 in combinations(facets, 2):
            common = tuple(sorted(set(f1) & set(f2)))
            if len(common) >= 2:
                faces.add(common)
    return faces


def intersect_polytopes(p_points, q_points):
    """Vertex set of conv(p) .. conv(q) for full-dimensional polytopes.

    Returns a sorted tuple of extreme points of the intersection (possibly
    empty).
    """
    dim = len(p_points[0])
    # cheap reject: disjoint bounding boxes
    for i in range(dim):
        if max(x[i] for x in p_points) < min(x[i] for x in q_points):
            return ()
        if max(x[i] for x in q_points) < min(x[i] for x in p_points):
            return ()
    ineqs = list(hull_inequalities(p_points)) + list(hull_inequalities(q_points))
    cands = set()
    if dim == 2:
        for (n1, c1), (n2, c2) in combinations(ineqs, 2):
            sol = solve_linear([n1, n2], [c1, c2])
            if sol is not None:
                cands.add(sol)
    else:
        for (n1, c1), (n2, c2), (n3, c3) in combinations(ineqs, 3):
            sol = solve_linear([n1, n2, n3], [c1, c2, c3])
            if sol is not None:
                cands.add(sol)
    pts = [p for p in cands if all(vdot(n_, p) <= c for (n_, c) in ineqs)]
    if not pts:
        return ()
    return tuple(extreme_points(pts))


def simplex_volume(vertices) -> Fraction:
    """Euclidean volume of a simplex (n+1 points in R^n)."""
    p0 = vertices[0]
    rows = [vsub(p, p0) for p in vertices[1:]]
    n = len(rows)
    from math import factorial

    return abs(det(rows)) / factorial(n)


def polygon_area(points) -> Fraction:
    """Area of a convex polygon given by its (unordered) vertices in R^2."""
    pts = extreme_points(points)
    if len(pts) < 3:
        return Fraction(0)
    ordered = order_polygon(pts)
    s = Fraction(0)
    for i in range(len(ordered)):
        a, b = ordered[i], ordered[(i + 1) % len(ordered)]
        s += cross2(a, b)
    return abs(s) / 2


def order_polygon(pts):
    """Order convex-position points counterclockwise (exact angular sort)."""
    n = len(pts)
    cx = sum(Fraction(p[0]) for p in pts) / n
    cy = sum(Fraction(p[1]) for p in pts) / n

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    import functools

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        cr = cross2((a[0] - cx, a[1] - cy), (b[0] - cx, b[1] - cy))
        if cr > 0:
            return -1
        if cr < 0:
            return 1
        return 0

    return sorted(pts, key=functools.cmp_to_key(cmp))


def polytope_volume(points) -> Fraction:
    """Euclidean volume of a full-dimensional convex polytope, dim 2 or 3."""
    pts = extreme_points(points)
    dim = len(pts[0])
    if dim == 2:
        return polygon_area(pts)
    if dim != 3:
        raise ValueError(f"unsupported dimension {dim}")
    total = Fraction(0)
    origin = pts[0]
    for facet in polytope_facets(pts):
        if origin in facet:
            continue
        ordered = _order_facet_3d(facet)
        a = ordered[0]
        for i in range(1, len(ordered) - 1):
            total += abs(det([vsub(a, origin), vsub(ordered[i], origin), vsub(ordered[i + 1], origin)])) / 6
    return total


def _order_facet_3d(facet):
    """Cyclically order the vertices of a planar convex polygon in R^3."""
    pts = list(facet)
    if len(pts) <= 3:
        return pts
    n_ = None
    a = pts[0]
    for b, c in combinations(pts[1:], 2):
        n_ = cross3(vsub(b, a), vsub(c, a))
        if any(x != 0 for x in n_):
            break
    # project onto dominant coordinate plane, then exact angular sort
    ax = max(range(3), key=lambda i: abs(n_[i]))
    keep = [i for i in range(3) if i != ax]
    flat = [(p[keep[0]], p[keep[1]]) for p in pts]
    order = order_polygon(flat)
    lookup = {}
    for p in pts:
        lookup.setdefault((p[keep[0]], p[keep[1]]), p)
    return [lookup[f] for f in order]


def lattice_points_in(points):
    """All integer points inside conv(points) (dim of ambient 1..3)."""
    pts = [tuple(map(Fraction, p)) for p in points]
    dim = len(pts[0])
    lo = [min(p[i] for p in pts) for i in range(dim)]
    hi = [max(p[i] for p in pts) for i in range(dim)]
    import math

    ranges = [range(math.ceil(lo[i]), math.floor(hi[i]) + 1) for i in range(dim)]
    full = affine_rank(pts) == dim
    out = []
    if full:
        ineqs = hull_inequalities(pts)
        import itertools

        for cand in itertools.product(*ranges):
            if all(vdot(n_, cand) <= c for (n_, c) in ineqs):
                out.append(cand)
    else:
        import itertools

        for cand in itertools.product(*ranges):
            if point_in_hull(cand, pts):
                out.append(cand)
    return sorted(out)
