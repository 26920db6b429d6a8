from fractions import Fraction

from patchwork.linprog import Feasible, Infeasible, solve_feasibility


def _check_solution(x, ineqs, eqs):
    for a, b in ineqs:
        assert sum(ai * xi for ai, xi in zip(a, x)) <= b
    for e, f in eqs:
        assert sum(ei * xi for ei, xi in zip(e, x)) == f


def test_feasible_interval():
    res = solve_feasibility(1, [((1,), 2), ((-1,), -1)], [])
    assert isinstance(res, Feasible)
    _check_solution(res.x, [((1,), 2), ((-1,), -1)], [])


def test_infeasible_interval_farkas():
    ineqs = [((1,), -1), ((-1,), -1)]  # x <= -1 and -x <= -1
    res = solve_feasibility(1, ineqs, [])
    assert isinstance(res, Infeasible)
    lam = res.lam
    assert all(l >= 0 for l in lam)
    assert lam[0] * 1 + lam[1] * (-1) == 0
    assert lam[0] * (-1) + lam[1] * (-1) < 0


def test_equalities():
    eqs = [((1, 1), 3), ((1, -1), 1)]
    res = solve_feasibility(2, [], eqs)
    assert isinstance(res, Feasible)
    assert res.x == (Fraction(2), Fraction(1))


def test_mixed_system():
    # x + y <= 4, x >= 1, y >= 1, x - y = 0 -> x = y in [1, 2]
    ineqs = [((1, 1), 4), ((-1, 0), -1), ((0, -1), -1)]
    eqs = [((1, -1), 0)]
    res = solve_feasibility(2, ineqs, eqs)
    assert isinstance(res, Feasible)
    _check_solution(res.x, ineqs, eqs)
    assert res.x[0] == res.x[1]


def test_infeasible_with_equalities():
    # x = 5 but x <= 1
    res = solve_feasibility(1, [((1,), 1)], [((1,), 5)])
    assert isinstance(res, Infeasible)
    # replay: lam * (x - 1) + mu * (x - 5) with lam + mu = 0, -lam - 5 mu < 0
    lam, mu = res.lam[0], res.mu[0]
    assert lam >= 0
    assert lam + mu == 0
    assert lam * 1 + mu * 5 < 0


def test_rational_coefficients():
    ineqs = [((Fraction(1, 3), Fraction(1, 7)), Fraction(2, 21))]
    res = solve_feasibility(2, ineqs, [])
    assert isinstance(res, Feasible)
    _check_solution(res.x, ineqs, [])


def test_determinism():
    ineqs = [((1, 2), 3), ((2, 1), 3), ((-1, 0), 0), ((0, -1), 0)]
    a = solve_feasibility(2, ineqs, [])
    b = solve_feasibility(2, ineqs, [])
    assert a == b
