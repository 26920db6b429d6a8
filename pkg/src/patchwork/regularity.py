"""Convexity (regularity) of lattice subdivisions, with proof objects.

A subdivision is convex/regular when some convex piecewise-linear lift has
the cells as its exact linearity domains.  The decision procedure solves an
exact rational LP over the fold conditions at interior facets; a feasible
point is rescaled into a witness whose slack against *every* (cell, outside
vertex) pair is at least 1, and an infeasible system yields a Farkas vector
that replays to 0 < 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import geometry as geo
from . import lifts
from .lattice import (
    InvalidArgument,
    LatticePolytope,
    LatticeSubdivision,
    Triangulation,
    is_maximal,
    validate_subdivision,
)
from .linprog import Feasible, Infeasible, solve_feasibility


@dataclass(frozen=True)
class LiftingWitness:
    heights: dict  # vertex -> Fraction
    functionals: tuple  # per cell: (alpha tuple, beta) with lift(x) = alpha.x + beta

    def to_json(self):
        return {
            "heights": {",".join(map(str, v)): str(h) for v, h in sorted(self.heights.items())},
            "functionals": [
                {"alpha": [str(a) for a in al], "beta": str(b)} for al, b in self.functionals
            ],
        }


@dataclass(frozen=True)
class NonRegularityCertificate:
    # sorted tuples of ((cell_index, vertex), coefficient) over the full system
    ineq_coeffs: tuple
    eq_coeffs: tuple

    def to_json(self):
        return {
            "inequalities": [
                {"cell": c, "vertex": list(v), "coeff": str(x)} for (c, v), x in self.ineq_coeffs
            ],
            "equalities": [
                {"kind": k, "vertex": list(v), "coeff": str(x)} for (k, v), x in self.eq_coeffs
            ],
        }


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    witness: LiftingWitness | None = None
    certificate: NonRegularityCertificate | None = None

    def to_json(self):
        if self.regular:
            return {"status": "regular", "witness": self.witness.to_json()}
        return {"status": "nonregular", "certificate": self.certificate.to_json()}


def _affine_basis(cell: LatticePolytope):
    """First n+1 affinely independent vertices, lexicographic greedy."""
    basis = [cell.vertices[0]]
    for v in cell.vertices[1:]:
        if geo.affine_rank(basis + [v]) == len(basis):
            basis.append(v)
        if len(basis) == cell.dim + 1:
            break
    return basis


def _cell_systems(s: LatticeSubdivision):
    """Index maps plus the barycentric data reused by the LP builders."""
    vs = list(s.vertex_set)
    vindex = {v: i for i, v in enumerate(vs)}
    data = []
    for cell in s.cells:
        basis = _affine_basis(cell)
        data.append((cell, basis))
    return vs, vindex, data


def _row_for(vindex, basis, w, num_vars):
    """LP row for: affine interpolant over `basis` heights, evaluated at w,
    minus h_w.  Returns the coefficient vector."""
    lam = geo.barycentric(basis, w)
    row = [Fraction(0)] * num_vars
    for pos, b in enumerate(basis):
        row[vindex[b]] += lam[pos]
    row[vindex[w]] -= 1
    return row


def interior_facets(s: LatticeSubdivision):
    """Pairs (i, j, facet_vertices) of cells meeting in a common (n-1)-face."""
    n = s.dim
    out = []
    for i in range(len(s.cells)):
        for j in range(i + 1, len(s.cells)):
            inter = geo.intersect_polytopes(s.cells[i].vertices, s.cells[j].vertices)
            if inter and geo.affine_rank(inter) == n - 1:
                out.append((i, j, inter))
    return out


def check_regularity(s: LatticeSubdivision, *, prevalidated: bool = False) -> RegularityResult:
    """Decide convexity of a valid subdivision.

    The LP imposes one fold constraint per interior facet (strictness
    normalized to slack 1); convexity of a PL function over a convex target
    is a local condition across facets, so this is equivalent to the full
    definition, and the returned witness is rescaled so that every pair
    (cell, vertex outside the cell) has slack >= 1.
    """
    if not prevalidated:
        report = s.validate()
        if not report.valid:
            raise InvalidArgument(f"subdivision invalid: {report.to_json()['violations']}")
    vs, vindex, data = _cell_systems(s)
    num_vars = len(vs)

    eqs = []
    eq_keys = []
    # gauge: pin heights on the first cell's vertices to zero
    for v in s.cells[0].vertices:
        row = [Fraction(0)] * num_vars
        row[vindex[v]] = Fraction(1)
        eqs.append((row, Fraction(0)))
        eq_keys.append(("gauge", v))
    # non-simplex cells must lift coplanarly
    for ci, (cell, basis) in enumerate(data):
        for v in cell.vertices:
            if v in basis:
                continue
            eqs.append((_row_for(vindex, basis, v, num_vars), Fraction(0)))
            eq_keys.append((f"coplanar:{ci}", v))

    ineqs = []
    ineq_keys = []
    for i, j, facet in interior_facets(s):
        facet_set = set(facet)
        w = min(v for v in s.cells[j].vertices if v not in facet_set)
        ineqs.append((_row_for(vindex, data[i][1], w, num_vars), Fraction(-1)))
        ineq_keys.append((i, w))

    result = solve_feasibility(num_vars, ineqs, eqs)
    if isinstance(result, Feasible):
        heights = {v: result.x[vindex[v]] for v in vs}
        heights = _rescale(s, data, heights)
        witness = _witness_from_heights(s, data, heights)
        assert verify_witness(s, witness), "produced witness failed verification"
        return RegularityResult(True, witness=witness)

    assert isinstance(result, Infeasible)
    cert = NonRegularityCertificate(
        ineq_coeffs=tuple(
            (key, lam) for key, lam in zip(ineq_keys, result.lam) if lam != 0
        ),
        eq_coeffs=tuple((key, mu) for key, mu in zip(eq_keys, result.mu) if mu != 0),
    )
    assert verify_certificate(s, cert), "produced certificate failed verification"
    return RegularityResult(False, certificate=cert)


def _rescale(s, data, heights):
    """Scale heights so every (cell, outside vertex) slack is >= 1."""
    slack = None
    for cell, basis in data:
        cell_set = set(cell.vertices)
        for w in s.vertex_set:
            if w in cell_set:
                continue
            lam = geo.barycentric(basis, w)
            gap = heights[w] - sum(l * heights[b] for l, b in zip(lam, basis))
            slack = gap if slack is None else min(slack, gap)
    if slack is None:
        return heights
    if slack <= 0:
        raise AssertionError("facet-feasible heights violate a pair constraint")
    if slack >= 1:
        return heights
    factor = Fraction(1) / slack
    return {v: h * factor for v, h in heights.items()}


def _functional(cell_basis, heights):
    basis = cell_basis
    n = len(basis[0])
    sol = geo.solve_linear(
        [list(b) + [1] for b in basis],
        [heights[b] for b in basis],
    )
    return tuple(sol[:n]), sol[n]


def _witness_from_heights(s, data, heights):
    functionals = tuple(_functional(basis, heights) for _, basis in data)
    return LiftingWitness(heights=dict(heights), functionals=functionals)


def verify_witness(s: LatticeSubdivision, w: LiftingWitness) -> bool:
    """Replay the full definition: per-cell agreement plus strict slack >= 1
    at every vertex outside the cell."""
    if set(w.heights) != set(s.vertex_set):
        return False
    if len(w.functionals) != len(s.cells):
        return False
    for cell, (alpha, beta) in zip(s.cells, w.functionals):
        for v in cell.vertices:
            if geo.vdot(alpha, v) + beta != w.heights[v]:
                return False
        cell_set = set(cell.vertices)
        for u in s.vertex_set:
            if u in cell_set:
                continue
            if geo.vdot(alpha, u) + beta > w.heights[u] - 1:
                return False
    return True


def full_system(s: LatticeSubdivision):
    """The complete constraint system of the regularity definition."""
    vs, vindex, data = _cell_systems(s)
    num_vars = len(vs)
    eqs = {}
    for v in s.cells[0].vertices:
        row = [Fraction(0)] * num_vars
        row[vindex[v]] = Fraction(1)
        eqs[("gauge", v)] = (row, Fraction(0))
    for ci, (cell, basis) in enumerate(data):
        for v in cell.vertices:
            if v not in basis:
                eqs[(f"coplanar:{ci}", v)] = (
                    _row_for(vindex, basis, v, num_vars),
                    Fraction(0),
                )
    ineqs = {}
    for ci, (cell, basis) in enumerate(data):
        cell_set = set(cell.vertices)
        for u in s.vertex_set:
            if u not in cell_set:
                ineqs[(ci, u)] = (_row_for(vindex, basis, u, num_vars), Fraction(-1))
    return num_vars, ineqs, eqs


def verify_certificate(s: LatticeSubdivision, cert: NonRegularityCertificate) -> bool:
    """Replay the Farkas contradiction against the full constraint system."""
    num_vars, ineqs, eqs = full_system(s)
    combo = [Fraction(0)] * num_vars
    total = Fraction(0)
    for key, lam in cert.ineq_coeffs:
        if lam < 0 or key not in ineqs:
            return False
        row, b = ineqs[key]
        for k in range(num_vars):
            combo[k] += lam * row[k]
        total += lam * b
    for key, mu in cert.eq_coeffs:
        if key not in eqs:
            return False
        row, b = eqs[key]
        for k in range(num_vars):
            combo[k] += mu * row[k]
        total += mu * b
    return all(c == 0 for c in combo) and total < 0


def maximal_convex_refinement(s: LatticeSubdivision) -> Triangulation:
    """Refine every cell by the lower hull of the paraboloid lift.

    The lift f(i) = sum(i_k^2) is shared across cells and the infinitesimal
    tie-break order is global (lexicographic over the target's lattice
    points), so refinements of adjacent cells agree on shared faces and the
    union is a valid maximal triangulation refining s.
    """
    target_points = s.target.lattice_points()
    rank = {tuple(p): i for i, p in enumerate(target_points)}
    out_cells = []
    for cell in s.cells:
        pts = cell.lattice_points()
        heights = lifts.paraboloid_heights(pts)
        ranks = [rank[tuple(p)] for p in pts]
        for tri in lifts.lift_triangulation(pts, heights, ranks):
            out_cells.append(LatticePolytope([pts[i] for i in tri]))
    result = Triangulation(s.target, out_cells)
    return result


# ---------------------------------------------------------------------------
# star moves: transforming a maximal triangulation of T_d^2 so that the star
# of the origin becomes the whole triangle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StarMove:
    kind: str  # "i" | "ii" | "iii"
    removed: tuple
    inserted: tuple
    star_area_after: Fraction

    def to_json(self):
        return {
            "kind": self.kind,
            "removed": [list(map(list, t)) for t in self.removed],
            "inserted": [list(map(list, t)) for t in self.inserted],
            "starAreaAfter": str(self.star_area_after),
        }


@dataclass(frozen=True)
class StarMoveTrace:
    degree: int
    moves: tuple
    final_cells: tuple

    def to_json(self):
        return {
            "degree": self.degree,
            "moves": [m.to_json() for m in self.moves],
            "finalCells": [list(map(list, t)) for t in self.final_cells],
        }


class StarMoveDeadlock(RuntimeError):
    pass


def _orient(a, b, c):
    return geo.cross2(geo.vsub(b, a), geo.vsub(c, a))


def _tri_area2(t):
    return abs(_orient(*t))


def _star_boundary(triangles, origin):
    """Boundary polyline P_0..P_r of the star of `origin`, ccw order."""
    edges = []
    for t in triangles:
        if origin in t:
            rest = [v for v in t if v != origin]
            a, b = rest
            if _orient(origin, a, b) < 0:
                a, b = b, a
            edges.append((a, b))
    nxt = dict(edges)
    starts = set(a for a, _ in edges) - set(b for _, b in edges)
    assert len(starts) == 1, "star boundary is not a simple path"
    walk = [starts.pop()]
    while walk[-1] in nxt:
        walk.append(nxt[walk[-1]])
    return walk


def _validate_patch_regular(removed, inserted, convex):
    """Post hoc local check of a star move.

    Convex patch: the inserted cells triangulate the convex union and admit
    a convex lift relative to it.  Dart patch: the inserted fan is the
    common coarsening; each fan cell must be convexly refined by the
    removed cells it contains.
    """
    if convex:
        verts = {v for t in inserted for v in t}
        target = LatticePolytope(verts)
        sub = LatticeSubdivision(target, [LatticePolytope(t) for t in inserted])
        rep = validate_subdivision(list(sub.cells), target)
        if not rep.valid:
            return False
        return check_regularity(sub, prevalidated=True).regular
    for f in inserted:
        cells = [w for w in removed if _tri_inside(w, f)]
        target = LatticePolytope(f)
        sub = LatticeSubdivision(target, [LatticePolytope(t) for t in cells])
        rep = validate_subdivision(list(sub.cells), target)
        if not rep.valid:
            return False
        if not check_regularity(sub, prevalidated=True).regular:
            return False
    return True


def convexify_star_moves(t: Triangulation, *, validate_moves: bool = True) -> StarMoveTrace:
    """Grow the star of the origin to all of T_d^2 by local moves.

    Moves: (i) boundary edge flips into the convex quad O P_i Q P_{i+1};
    (ii) collapse of a degree-3 boundary vertex whose wheel is a triangle;
    (iii) absorption of a boundary vertex whose wheel union is convex (the
    vertex ends up inside the new star, on a fan edge when collinear with
    the origin and an outer wheel vertex).  Every move strictly increases
    the star area, so the process terminates; each inserted patch is
    re-checked for local regularity.
    """
    if not is_maximal(t):
        raise InvalidArgument("convexify_star_moves requires a maximal triangulation")
    d = max(v[0] for v in t.target.vertices)
    n = t.target.ambient_dim
    if n != 2:
        raise InvalidArgument("star moves are defined for T_d^2 only")
    origin = (0, 0)
    full_area2 = d * d  # twice the area of T_d^2

    tris = {tuple(sorted(c.vertices)) for c in t.cells}

    def star_area2():
        return sum(_tri_area2(tr) for tr in tris if origin in tr)

    edge_map = {}

    def rebuild_edges():
        edge_map.clear()
        for tr in tris:
            for k in range(3):
                e = tuple(sorted((tr[k], tr[(k + 1) % 3])))
                edge_map.setdefault(e, []).append(tr)

    moves = []
    area2 = star_area2()
    guard = 0
    while area2 < full_area2:
        guard += 1
        if guard > 50 * d * d + 100:
            raise StarMoveDeadlock("move budget exceeded; configuration not handled")
        rebuild_edges()
        walk = _star_boundary(tris, origin)
        move = _find_move(tris, edge_map, walk, origin)
        if move is None:
            raise StarMoveDeadlock(f"no applicable star move; boundary {walk}")
        kind, removed, inserted, convex = move
        if validate_moves and not _validate_patch_regular(removed, inserted, convex):
            raise StarMoveDeadlock(f"inserted patch failed local regularity: {inserted}")
        for tr in removed:
            tris.remove(tr)
        for tr in inserted:
            tris.add(tr)
        new_area2 = star_area2()
        assert new_area2 > area2, "star area must strictly increase"
        area2 = new_area2
        moves.append(
            StarMove(
                kind=kind,
                removed=tuple(sorted(removed)),
                inserted=tuple(sorted(inserted)),
                star_area_after=Fraction(new_area2, 2),
            )
        )

    return StarMoveTrace(degree=d, moves=tuple(moves), final_cells=tuple(sorted(tris)))


def _tri_inside(inner, outer) -> bool:
    """All vertices of triangle `inner` inside the closed triangle `outer`."""
    a, b, c = outer
    s = _orient(a, b, c)
    if s < 0:
        a, b = b, a
    for p in inner:
        if _orient(a, b, p) < 0 or _orient(b, c, p) < 0 or _orient(c, a, p) < 0:
            return False
    return True


def _find_move(tris, edge_map, walk, origin):
    r = len(walk)

    def tri_key(*vs):
        return tuple(sorted(vs))

    def outside_tri(a, b):
        e = tuple(sorted((a, b)))
        cand = [tr for tr in edge_map.get(e, []) if origin not in tr]
        return cand[0] if cand else None

    # (i) convex-quad flips along the boundary
    for i in range(r - 1):
        a, b = walk[i], walk[i + 1]
        T = outside_tri(a, b)
        if T is None:
            continue
        q = next(v for v in T if v not in (a, b))
        if _orient(origin, a, q) > 0 and _orient(origin, b, q) < 0:
            removed = (tri_key(origin, a, b), T)
            inserted = (tri_key(origin, a, q), tri_key(origin, q, b))
            return ("i", removed, inserted, True)

    # (ii)/(iii) boundary-vertex absorption
    for i in range(r):
        p = walk[i]
        wheel = [tr for tr in tris if p in tr]
        outside = [tr for tr in wheel if origin not in tr]
        if not outside:
            continue
        move = _absorb_move(wheel, p, origin)
        if move is not None:
            return move
    return None


def _wheel_boundary(wheel, p):
    """Cycle of outer vertices of the wheel around p (link of p), or None."""
    nxt = {}
    for tr in wheel:
        rest = [v for v in tr if v != p]
        a, b = rest
        if _orient(p, a, b) < 0:
            a, b = b, a
        if a in nxt:
            return None
        nxt[a] = b
    start_candidates = set(nxt) - set(nxt.values())
    if start_candidates:
        start = start_candidates.pop()
        walk = [start]
        while walk[-1] in nxt:
            walk.append(nxt[walk[-1]])
            if len(walk) > len(wheel) + 1:
                return None
        if len(walk) != len(wheel) + 1:
            return None
        return walk, False  # open link (p on the target boundary)
    start = min(nxt)
    walk = [start]
    while True:
        walk.append(nxt[walk[-1]])
        if walk[-1] == start:
            break
        if len(walk) > len(wheel) + 1:
            return None
    return walk[:-1], True  # closed link (p interior)


def _absorb_move(wheel, p, origin):
    link = _wheel_boundary(wheel, p)
    if link is None:
        return None
    cycle, closed = link
    if origin not in cycle:
        return None
    if not closed:
        # p sits on the boundary of T_d^2: absorbing is only sound when the
        # open ends are collinear with p along that boundary edge
        a, b = cycle[0], cycle[-1]
        if _orient(a, p, b) != 0:
            return None
        boundary = cycle + [p]
    else:
        boundary = list(cycle)

    # rotate the cycle to start at the origin
    k = boundary.index(origin)
    poly = boundary[k:] + boundary[:k]

    # convexity of the wheel union (collinear chains allowed)
    m = len(poly)
    convex = all(
        _orient(poly[i], poly[(i + 1) % m], poly[(i + 2) % m]) >= 0 for i in range(m)
    )

    # fan arc: origin removed; p itself is not a polygon corner (it lies on
    # a straight boundary stretch in the open case) and must not reappear
    arc = [v for v in poly[1:] if v != p]
    # star-shapedness from the origin, with nondegenerate fan triangles
    for i in range(len(arc) - 1):
        if _orient(origin, arc[i], arc[i + 1]) <= 0:
            return None

    inserted = tuple(sorted(tuple(sorted((origin, arc[i], arc[i + 1]))) for i in range(len(arc) - 1)))
    removed = tuple(sorted(tuple(sorted(tr)) for tr in wheel))
    if set(inserted) == set(removed):
        return None
    if not convex:
        # dart-shaped union: still sound when the removed cone refines the
        # inserted fan cell by cell (the fan is then the common coarsening)
        if not all(any(_tri_inside(w, f) for f in inserted) for w in removed):
            return None
    kind = "ii" if (closed and len(wheel) == 3) else "iii"
    return (kind, removed, inserted, convex)
