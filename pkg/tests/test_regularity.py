from fractions import Fraction
from random import Random

import pytest

from patchwork import geometry as geo
from patchwork.builders import (
    grid_triangulation_2d,
    random_maximal_triangulation_2d,
    random_regular_subdivision,
)
from patchwork.lattice import (
    InvalidArgument,
    LatticePolytope,
    LatticeSubdivision,
    Triangulation,
    is_maximal,
    standard_simplex,
)
from patchwork.regularity import (
    check_regularity,
    convexify_star_moves,
    maximal_convex_refinement,
    verify_certificate,
    verify_witness,
    _cell_systems,
    _witness_from_heights,
)

PINWHEEL_CELLS = [
    [(0, 0), (4, 0), (2, 1)],
    [(0, 0), (2, 1), (1, 1)],
    [(4, 0), (0, 4), (1, 2)],
    [(4, 0), (1, 2), (2, 1)],
    [(0, 4), (0, 0), (1, 1)],
    [(0, 4), (1, 1), (1, 2)],
    [(1, 1), (2, 1), (1, 2)],
]


@pytest.fixture(scope="module")
def pinwheel():
    return LatticeSubdivision(
        standard_simplex(2, 4), [LatticePolytope(c) for c in PINWHEEL_CELLS]
    )


def test_grid_t2_regular_with_verified_witness(grid2):
    res = check_regularity(grid2)
    assert res.regular
    assert verify_witness(grid2, res.witness)


def test_witness_slack_at_least_one(grid2):
    res = check_regularity(grid2)
    w = res.witness
    for cell, (alpha, beta) in zip(grid2.cells, w.functionals):
        cell_set = set(cell.vertices)
        for u in grid2.vertex_set:
            if u not in cell_set:
                assert w.heights[u] - (geo.vdot(alpha, u) + beta) >= 1


def test_degenerate_witnesses_rejected(grid2):
    vs, vindex, data = _cell_systems(grid2)
    zero = _witness_from_heights(grid2, data, {v: Fraction(0) for v in grid2.vertex_set})
    assert not verify_witness(grid2, zero)
    # the raw paraboloid is flat on the cocircular unit square, so its
    # linearity domains are not the four triangles
    par = _witness_from_heights(
        grid2, data, {v: Fraction(v[0] ** 2 + v[1] ** 2) for v in grid2.vertex_set}
    )
    assert not verify_witness(grid2, par)


def test_pinwheel_is_valid_but_nonregular(pinwheel):
    assert pinwheel.validate().valid
    res = check_regularity(pinwheel)
    assert not res.regular
    assert verify_certificate(pinwheel, res.certificate)


def test_certificate_does_not_transfer(grid2, pinwheel):
    res = check_regularity(pinwheel)
    assert not verify_certificate(grid2, res.certificate)


def test_regularity_requires_valid_subdivision():
    target = standard_simplex(2, 1)
    overlap = LatticeSubdivision(
        target,
        [LatticePolytope([(0, 0), (1, 0), (0, 1)]), LatticePolytope([(0, 0), (1, 0), (0, 1)])],
    )
    with pytest.raises(InvalidArgument):
        check_regularity(overlap)


def test_determinism(pinwheel, grid2):
    a = check_regularity(pinwheel)
    b = check_regularity(pinwheel)
    assert a.certificate == b.certificate
    c = check_regularity(grid2)
    d = check_regularity(grid2)
    assert c.witness == d.witness


def test_refinement_identity_on_unit_simplex():
    t1 = standard_simplex(2, 1)
    sub = LatticeSubdivision(t1, [t1])
    ref = maximal_convex_refinement(sub)
    assert len(ref.cells) == 1
    assert ref.cells[0].vertices == t1.vertices


def test_refinement_t2_lower_hull_oracle():
    """Independent oracle: a cell belongs to the paraboloid lower hull iff
    every other lifted lattice point lies weakly above its lifted plane."""
    t2 = standard_simplex(2, 2)
    sub = LatticeSubdivision(t2, [t2])
    ref = maximal_convex_refinement(sub)
    assert len(ref.cells) == 4
    pts = t2.lattice_points()
    for cell in ref.cells:
        vs = cell.vertices
        plane = geo.solve_linear(
            [[v[0], v[1], 1] for v in vs],
            [v[0] ** 2 + v[1] ** 2 for v in vs],
        )
        for q in pts:
            lift = q[0] ** 2 + q[1] ** 2
            assert lift >= plane[0] * q[0] + plane[1] * q[1] + plane[2]


def test_refinement_is_refinement_and_maximal(grid2):
    rng = Random(1)
    for d in (2, 3):
        sub = random_regular_subdivision(2, d, rng)
        assert sub.validate().valid
        ref = maximal_convex_refinement(sub)
        assert ref.validate().valid
        assert is_maximal(ref)
        # every output cell lies inside exactly one input cell
        for cell in ref.cells:
            containers = [
                c
                for c in sub.cells
                if all(geo.point_in_hull(v, c.vertices) for v in cell.vertices)
            ]
            assert len(containers) == 1
        # vertex set = all lattice points of the target
        assert set(ref.vertex_set) == set(map(tuple, sub.target.lattice_points()))


def test_refinement_agrees_on_shared_edge():
    # two cells of T_2^2 split by the diagonal x = y line through (1,1)
    target = standard_simplex(2, 2)
    a = LatticePolytope([(0, 0), (2, 0), (1, 1)])
    b = LatticePolytope([(0, 0), (1, 1), (0, 2)])
    sub = LatticeSubdivision(target, [a, b])
    assert sub.validate().valid
    ref = maximal_convex_refinement(sub)
    assert ref.validate().valid
    # the shared edge [(0,0), (1,1)] contains no further lattice points, so
    # both sides subdivide it identically (trivially); global validity above
    # is the real assertion: mismatched refinements would break face-to-face
    assert is_maximal(ref)


def test_per_cell_regularity_of_refinement():
    rng = Random(7)
    sub = random_regular_subdivision(2, 3, rng)
    ref = maximal_convex_refinement(sub)
    for cell in sub.cells:
        inner = [
            c
            for c in ref.cells
            if all(geo.point_in_hull(v, cell.vertices) for v in c.vertices)
        ]
        local = LatticeSubdivision(cell, inner)
        assert check_regularity(local).regular


def test_paraboloid_refinements_always_regular_100():
    # asserted over 100 random subdivisions at d <= 4
    rng = Random(11)
    for i in range(100):
        d = 2 + i % 3
        sub = random_regular_subdivision(2, d, rng)
        ref = maximal_convex_refinement(sub)
        assert check_regularity(ref).regular


def test_soundness_round_trip_random():
    rng = Random(23)
    for _ in range(6):
        t = random_maximal_triangulation_2d(3, rng)
        res = check_regularity(t)
        if res.regular:
            assert verify_witness(t, res.witness)
        else:
            assert verify_certificate(t, res.certificate)


# --- star moves


def test_star_trace_empty_when_star_full():
    t1 = grid_triangulation_2d(1)
    trace = convexify_star_moves(t1)
    assert trace.moves == ()

    # fan of T_2^2 from the origin is not maximal, so build the grid fan:
    # the grid triangulation's star is not everything; instead check d=1
    # plus a maximal triangulation whose star happens to be full
    rng = Random(9)
    for _ in range(20):
        t = random_maximal_triangulation_2d(2, rng)
        if all((0, 0) in c.vertices for c in t.cells):
            trace = convexify_star_moves(t)
            assert trace.moves == ()
            break


def test_star_moves_require_maximal():
    t = Triangulation(standard_simplex(2, 2), [standard_simplex(2, 2)])
    with pytest.raises(InvalidArgument):
        convexify_star_moves(t)


def test_star_moves_terminate_with_full_star_and_monotone_area():
    rng = Random(4242)
    for d in (2, 3, 4):
        for _ in range(4):
            t = random_maximal_triangulation_2d(d, rng)
            trace = convexify_star_moves(t, validate_moves=True)
            assert all((0, 0) in cell for cell in trace.final_cells)
            areas = [m.star_area_after for m in trace.moves]
            assert all(a < b for a, b in zip(areas, areas[1:]))
            if trace.moves:
                assert trace.moves[-1].star_area_after == Fraction(d * d, 2)


def test_star_move_intermediate_states_valid():
    rng = Random(17)
    t = random_maximal_triangulation_2d(3, rng)
    trace = convexify_star_moves(t)
    cells = {tuple(sorted(c.vertices)) for c in t.cells}
    target = standard_simplex(2, 3)
    for mv in trace.moves:
        for r in mv.removed:
            cells.remove(r)
        for i in mv.inserted:
            cells.add(i)
        sub = LatticeSubdivision(target, [LatticePolytope(c) for c in cells])
        assert sub.validate().valid
    assert cells == set(trace.final_cells)
