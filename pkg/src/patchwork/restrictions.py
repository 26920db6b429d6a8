"""Topological restrictions on real hypersurfaces, checked with exact slack.

Every entry is pass / fail / not-applicable; a fail on a constructed
T-hypersurface is a critical anomaly (the statements are theorems), so
batch drivers abort and serialize a reproducer when one appears.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import invariants as inv
from .topology import TopologyReport


@dataclass(frozen=True)
class Entry:
    name: str
    applicable: bool
    passed: bool | None
    slack: int | None
    detail: str

    def to_json(self):
        return {
            "name": self.name,
            "applicable": self.applicable,
            "passed": self.passed,
            "slack": self.slack,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class RestrictionReport:
    entries: tuple

    @property
    def anomalies(self):
        return [e for e in self.entries if e.applicable and e.passed is False]

    @property
    def critical_anomaly(self) -> bool:
        return bool(self.anomalies)

    def to_json(self):
        return {
            "entries": [e.to_json() for e in self.entries],
            "criticalAnomaly": self.critical_anomaly,
        }

    def table(self) -> str:
        rows = ["{:<22} {:<12} {:>6}  {}".format("check", "status", "slack", "detail")]
        for e in self.entries:
            status = "n/a" if not e.applicable else ("pass" if e.passed else "FAIL")
            rows.append(
                "{:<22} {:<12} {:>6}  {}".format(
                    e.name, status, "" if e.slack is None else e.slack, e.detail
                )
            )
        return "\n".join(rows)


def _na(name, detail=""):
    return Entry(name, False, None, None, detail)


def check_harnack(r: TopologyReport) -> Entry:
    if r.dim != 2:
        return _na("harnack", "curves only")
    bound = inv.harnack_bound(r.degree)
    slack = bound - r.num_components
    detail = f"components={r.num_components}, bound={bound}"
    if slack == 0:
        detail += ", M-curve"
    return Entry("harnack", True, slack >= 0, slack, detail)


def check_gudkov_rokhlin(r: TopologyReport) -> Entry:
    name = "gudkov-rokhlin"
    if r.dim != 2 or r.degree % 2 != 0:
        return _na(name, "even-degree curves only")
    if r.num_components != inv.harnack_bound(r.degree):
        return _na(name, "M-curves only")
    k = r.degree // 2
    diff = (r.p_even - r.n_odd - k * k) % 8
    return Entry(name, True, diff == 0, None, f"p-n={r.p_even - r.n_odd}, k^2={k * k} (mod 8 residue {diff})")


def check_gkk(r: TopologyReport) -> Entry:
    name = "gudkov-krahnov-kharlamov"
    if r.dim != 2 or r.degree % 2 != 0:
        return _na(name, "even-degree curves only")
    if r.num_components != inv.harnack_bound(r.degree) - 1:
        return _na(name, "(M-1)-curves only")
    k = r.degree // 2
    diff = (r.p_even - r.n_odd - k * k) % 8
    ok = diff in (1, 7)
    return Entry(name, True, ok, None, f"p-n={r.p_even - r.n_odd}, residue {diff}, need +-1 mod 8")


def check_petrovsky(r: TopologyReport) -> Entry:
    name = "petrovsky"
    if r.dim != 2 or r.degree % 2 != 0:
        return _na(name, "even-degree curves only")
    k = r.degree // 2
    bound1 = 3 * k * (k - 1) // 2 + 1
    bound2 = 3 * k * (k - 1)
    s1 = bound1 - (r.p_even - r.flags["nMinus"])
    s2 = bound2 - (r.n_odd - r.flags["pMinus"])
    return Entry(
        name,
        True,
        s1 >= 0 and s2 >= 0,
        min(s1, s2),
        f"p-n^-={r.p_even - r.flags['nMinus']}<= {bound1}; n-p^-={r.n_odd - r.flags['pMinus']}<= {bound2}",
    )


def check_arnold(r: TopologyReport) -> Entry:
    name = "arnold"
    if r.dim != 2 or r.degree % 2 != 0:
        return _na(name, "even-degree curves only")
    k = r.degree // 2
    bound_p = (k * k - 3 * k + 3 + (-1) ** k) // 2
    bound_n = (k * k - 3 * k + 2) // 2
    vp = r.flags["pMinus"] + r.flags["pZero"]
    vn = r.flags["nMinus"] + r.flags["nZero"]
    ok = vp <= bound_p and vn <= bound_n
    detail = f"p^-+p^0={vp}<= {bound_p}; n^-+n^0={vn}<= {bound_n}"
    # extremal conclusions are themselves theorems; assert them at equality
    if ok and k % 2 == 0 and k >= 2 and vp == (k * k - 3 * k + 4) // 2:
        extremal = r.flags["pMinus"] == 0 and r.flags["pPlus"] == 0
        ok = ok and extremal
        detail += f"; p-extremal => p^-=p^+=0 ({'ok' if extremal else 'VIOLATED'}), type I (informational)"
    if ok and k % 2 == 1 and vn == bound_n and k >= 3:
        extremal = r.flags["nMinus"] == 0 and r.flags["nPlus"] == 0
        ok = ok and extremal
        detail += f"; n-extremal => n^-=n^+=0 ({'ok' if extremal else 'VIOLATED'}), type I (informational)"
    return Entry(name, True, ok, min(bound_p - vp, bound_n - vn), detail)


def check_smith(r: TopologyReport) -> Entry:
    name = "smith"
    if r.dim not in (2, 3):
        return _na(name)
    b_ref = inv.betti_total_complex(r.dim, r.degree)
    ok = r.b_total <= b_ref and (b_ref - r.b_total) % 2 == 0
    return Entry(
        name,
        True,
        ok,
        b_ref - r.b_total,
        f"b_total={r.b_total}, b_d^n={b_ref}, a={(b_ref - r.b_total) // 2}",
    )


def check_mod16(r: TopologyReport) -> Entry:
    name = "mod16"
    if r.dim != 3:
        return _na(name, "surfaces only")
    if r.a_defect > 1:
        return _na(name, f"a(RM)={r.a_defect} > 1")
    sign = inv.signature_complex(3, r.degree)
    residue = (r.chi - sign) % 16
    if r.a_defect == 0:
        ok = residue == 0
        need = "0"
    else:
        ok = residue in (2, 14)
        need = "+-2"
    return Entry(name, True, ok, None, f"chi={r.chi}, sign={sign}, residue {residue}, need {need} mod 16")


def check_comessatti(r: TopologyReport) -> Entry:
    name = "comessatti"
    if r.dim != 3:
        return _na(name, "surfaces only")
    h = inv.h11(r.degree)
    ok = 2 - h <= r.chi <= h
    slack = min(r.chi - (2 - h), h - r.chi)
    return Entry(name, True, ok, slack, f"{2 - h} <= chi={r.chi} <= {h}")


ALL_CHECKS = (
    check_harnack,
    check_gudkov_rokhlin,
    check_gkk,
    check_petrovsky,
    check_arnold,
    check_smith,
    check_mod16,
    check_comessatti,
)


def check_all(r: TopologyReport) -> RestrictionReport:
    return RestrictionReport(tuple(fn(r) for fn in ALL_CHECKS))
