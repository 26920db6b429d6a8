from random import Random

from patchwork import invariants as inv
from patchwork import restrictions as restr
from patchwork import topology
from patchwork.topology import TopologyReport


def fake_curve_report(degree, components, p, n, flags=None, b_total=None):
    flags = {
        "pMinus": 0,
        "nMinus": 0,
        "pZero": 0,
        "nZero": 0,
        "pPlus": p,
        "nPlus": n,
        **(flags or {}),
    }
    b = 2 * components if b_total is None else b_total
    b_ref = inv.betti_total_complex(2, degree)
    return TopologyReport(
        degree=degree,
        dim=2,
        components=[],
        num_components=components,
        one_sided_count=degree % 2,
        p_even=p,
        n_odd=n,
        forest=None,
        depth_histogram={},
        oval_characteristic={},
        flags=flags,
        regions=[],
        principal_region=0,
        region_chi_sum=1,
        chi=0,
        b_total=b,
        a_defect=(b_ref - b) // 2,
        mod2_degree=degree % 2,
        line_seed=0,
        component_chis=[0] * components,
    )


def fake_surface_report(degree, chi, b_total):
    b_ref = inv.betti_total_complex(3, degree)
    return TopologyReport(
        degree=degree,
        dim=3,
        components=[],
        num_components=1,
        one_sided_count=0,
        p_even=0,
        n_odd=0,
        forest=None,
        depth_histogram={},
        oval_characteristic={},
        flags={"pMinus": 0, "nMinus": 0, "pZero": 0, "nZero": 0, "pPlus": 0, "nPlus": 0},
        regions=[],
        principal_region=None,
        region_chi_sum=0,
        chi=chi,
        b_total=b_total,
        a_defect=(b_ref - b_total) // 2,
        mod2_degree=degree % 2,
        line_seed=0,
        component_chis=[chi],
    )


def test_harnack_entry():
    r = fake_curve_report(6, 11, 10, 1)
    e = restr.check_harnack(r)
    assert e.applicable and e.passed and e.slack == 0
    assert "M-curve" in e.detail
    e = restr.check_harnack(fake_curve_report(6, 12, 11, 1))
    assert e.passed is False


def test_gudkov_rokhlin_d6():
    # k = 3: p - n must be 9 = 1 mod 8 for M-curves
    assert restr.check_gudkov_rokhlin(fake_curve_report(6, 11, 10, 1)).passed
    assert restr.check_gudkov_rokhlin(fake_curve_report(6, 11, 9, 2)).passed is False
    # non-M-curves: not applicable
    assert not restr.check_gudkov_rokhlin(fake_curve_report(6, 10, 9, 1)).applicable


def test_gudkov_rokhlin_d2():
    # k = 1: the single-oval curve has p - n = 1 = 1 mod 8
    assert restr.check_gudkov_rokhlin(fake_curve_report(2, 1, 1, 0)).passed


def test_gkk_d6():
    # (M-1)-curves need p - n = 9 +- 1 mod 8, i.e. residues {0, 2}
    assert restr.check_gkk(fake_curve_report(6, 10, 10, 0)).passed  # p-n=10, 10-9=1
    assert restr.check_gkk(fake_curve_report(6, 10, 9, 1)).passed  # p-n=8, 8-9=-1
    assert restr.check_gkk(fake_curve_report(6, 10, 7, 3)).passed is False  # 4-9=3 mod 8
    assert not restr.check_gkk(fake_curve_report(6, 11, 10, 1)).applicable


def test_petrovsky_bounds():
    # d=6: p - n^- <= 10 and n - p^- <= 18
    e = restr.check_petrovsky(fake_curve_report(6, 11, 10, 1))
    assert e.passed and "10" in e.detail and "18" in e.detail
    bad = fake_curve_report(6, 11, 11, 0)
    assert restr.check_petrovsky(bad).passed is False
    # d=2 bounds are 1 and 0; the single oval passes
    e = restr.check_petrovsky(fake_curve_report(2, 1, 1, 0))
    assert e.passed


def test_arnold_bounds():
    # d=6 (k=3): p^- + p^0 <= 1 and n^- + n^0 <= 1
    ok = fake_curve_report(6, 5, 4, 1, flags={"pZero": 1, "pPlus": 3})
    assert restr.check_arnold(ok).passed
    bad = fake_curve_report(6, 5, 4, 1, flags={"pMinus": 1, "pZero": 1, "pPlus": 2})
    assert restr.check_arnold(bad).passed is False
    # d=2 (k=1): both bounds are 0, a plain oval has characteristic 1
    assert restr.check_arnold(fake_curve_report(2, 1, 1, 0)).passed
    # d=4 (k=2): bounds 1 and 0
    e = restr.check_arnold(fake_curve_report(4, 4, 4, 0))
    assert "<= 1" in e.detail and "<= 0" in e.detail


def test_smith_entry():
    # d=6 M-curve: b_total = 22 = b_6^2, a = 0
    e = restr.check_smith(fake_curve_report(6, 11, 10, 1))
    assert e.passed and e.slack == 0
    # empty d=2 curve: b_total = 0, b_2^2 = 2, a = 1
    e = restr.check_smith(fake_curve_report(2, 0, 0, 0))
    assert e.passed and e.slack == 2
    # parity break fails
    e = restr.check_smith(fake_curve_report(2, 0, 0, 0, b_total=1))
    assert e.passed is False


def test_mod16_cases():
    # d=2: sign = 0; torus (a=0, chi=0): 0 = 0 mod 16
    assert restr.check_mod16(fake_surface_report(2, 0, 4)).passed
    # sphere (a=1, chi=2): 2 = +-2 mod 16
    assert restr.check_mod16(fake_surface_report(2, 2, 2)).passed
    # two spheres (a=0, chi=4) would violate the congruence
    assert restr.check_mod16(fake_surface_report(2, 4, 4)).passed is False
    # a >= 2: not applicable
    assert not restr.check_mod16(fake_surface_report(2, 0, 0)).applicable
    # d=4 M-surface: chi must be 0 mod 16 (sign = -16)
    assert restr.check_mod16(fake_surface_report(4, -16, 24)).passed
    assert restr.check_mod16(fake_surface_report(4, -8, 24)).passed is False


def test_comessatti_cases():
    # d=4: -18 <= chi <= 20
    assert restr.check_comessatti(fake_surface_report(4, -18, 24)).passed
    assert restr.check_comessatti(fake_surface_report(4, 20, 4)).passed
    assert restr.check_comessatti(fake_surface_report(4, -20, 22)).passed is False
    # d=2: h11 = 2, so 0 <= chi <= 2 (tighter than the naive +-h11 window)
    assert restr.check_comessatti(fake_surface_report(2, 0, 4)).passed
    assert restr.check_comessatti(fake_surface_report(2, 2, 2)).passed
    # d=1: bound 2 - 1 <= chi <= 1 holds for RP^2
    e = restr.check_comessatti(fake_surface_report(1, 1, 3))
    assert e.passed


def test_every_check_returns_exactly_one_entry():
    r = fake_curve_report(4, 2, 2, 0)
    report = restr.check_all(r)
    assert len(report.entries) == len(restr.ALL_CHECKS)
    names = [e.name for e in report.entries]
    assert len(set(names)) == len(names)
    for e in report.entries:
        assert e.applicable in (True, False)
        assert (e.passed is None) == (not e.applicable)


def test_check_all_aggregation_and_anomaly_flag():
    good = restr.check_all(fake_curve_report(6, 11, 10, 1))
    assert not good.critical_anomaly
    bad = restr.check_all(fake_curve_report(6, 12, 11, 1))
    assert bad.critical_anomaly
    assert any(e.name == "harnack" for e in bad.anomalies)


def test_table_rendering():
    table = restr.check_all(fake_curve_report(6, 11, 10, 1)).table()
    assert "harnack" in table and "pass" in table


def test_constructed_instances_never_fail(model4):
    rng = Random(99)
    for _ in range(150):
        bits = [rng.choice((1, -1)) for _ in model4.base_vertices]
        rep = topology.analyze_signs(model4, bits)
        report = restr.check_all(rep)
        assert not report.critical_anomaly
        smith = next(e for e in report.entries if e.name == "smith")
        assert smith.slack == 2 * rep.a_defect  # cross-module consistency
