"""Exact rational linear feasibility via a phase-1 simplex method.

Bland's rule guarantees termination and makes the pivot sequence (hence
witnesses and Farkas certificates) deterministic.  The solver is dense and
meant for the small systems that arise from lattice subdivisions, not for
industrial LP sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Feasible:
    x: tuple  # one solution of the system


@dataclass(frozen=True)
class Infeasible:
    lam: tuple  # one multiplier >= 0 per inequality row
    mu: tuple  # one free multiplier per equality row


def solve_feasibility(num_vars: int, ineqs, eqs):
    """Decide feasibility of {a.x <= b for (a, b) in ineqs, e.x = f for (e, f) in eqs}.

    Variables are free.  Returns Feasible(x) or Infeasible(lam, mu) with

        sum(lam_i * a_i) + sum(mu_j * e_j) == 0   (componentwise)
        sum(lam_i * b_i) + sum(mu_j * f_j) < 0
        lam >= 0

    which replays to the contradiction 0 <= negative.
    """
    m_in = len(ineqs)
    m_eq = len(eqs)
    m = m_in + m_eq
    if m == 0:
        return Feasible(tuple(Fraction(0) for _ in range(num_vars)))

    # columns: u (num_vars) | w (num_vars) | slacks (m_in) | artificials (m)
    n_u = num_vars
    n_cols = 2 * num_vars + m_in + m
    art0 = 2 * num_vars + m_in

    rows = []
    rhs = []
    flips = []
    for a, b in ineqs:
        rows.append((tuple(Fraction(x) for x in a), Fraction(1)))
        rhs.append(Fraction(b))
    for e, f in eqs:
        rows.append((tuple(Fraction(x) for x in e), None))
        rhs.append(Fraction(f))

    T = []
    for r in range(m):
        coeffs, slack = rows[r]
        flip = -1 if rhs[r] < 0 else 1
        flips.append(flip)
        row = [Fraction(0)] * (n_cols + 1)
        for k in range(num_vars):
            c = flip * coeffs[k]
            row[k] = c
            row[n_u + k] = -c
        if slack is not None:
            row[2 * num_vars + r] = flip * slack
        row[art0 + r] = Fraction(1)
        row[n_cols] = flip * rhs[r]
        T.append(row)

    basis = [art0 + r for r in range(m)]

    def reduced_costs():
        # cost 1 on artificial columns; price vector y with y_r = sum over
        # rows whose basic variable is artificial of T[r][col]
        art_rows = [r for r in range(m) if basis[r] >= art0]
        rc = []
        for j in range(n_cols):
            cj = Fraction(1) if j >= art0 else Fraction(0)
            rc.append(cj - sum(T[r][j] for r in art_rows))
        return rc

    while True:
        rc = reduced_costs()
        enter = None
        for j in range(n_cols):
            if rc[j] < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            if T[r][enter] > 0:
                ratio = T[r][n_cols] / T[r][enter]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave is None:
            raise RuntimeError("phase-1 objective unbounded below; system construction bug")
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for r in range(m):
            if r != leave and T[r][enter] != 0:
                f = T[r][enter]
                T[r] = [T[r][c] - f * T[leave][c] for c in range(n_cols + 1)]
        basis[leave] = enter

    objective = sum(T[r][n_cols] for r in range(m) if basis[r] >= art0)
    if objective == 0:
        x = [Fraction(0)] * num_vars
        vals = {basis[r]: T[r][n_cols] for r in range(m)}
        for k in range(num_vars):
            x[k] = vals.get(k, Fraction(0)) - vals.get(n_u + k, Fraction(0))
        return Feasible(tuple(x))

    # y_r = price of row r = sum over artificial-basic rows of the entry in
    # row r's artificial column; certificate multipliers undo the row flips.
    art_rows = [r for r in range(m) if basis[r] >= art0]
    y = [sum(T[q][art0 + r] for q in art_rows) for r in range(m)]
    lam = tuple(-y[i] * flips[i] for i in range(m_in))
    mu = tuple(-y[m_in + j] * flips[m_in + j] for j in range(m_eq))
    cert = Infeasible(lam, mu)
    _check_certificate(num_vars, ineqs, eqs, cert)
    return cert


def _check_certificate(num_vars, ineqs, eqs, cert: Infeasible):
    combo = [Fraction(0)] * num_vars
    total = Fraction(0)
    for lam_i, (a, b) in zip(cert.lam, ineqs):
        if lam_i < 0:
            raise RuntimeError("negative Farkas multiplier on an inequality")
        for k in range(num_vars):
            combo[k] += lam_i * Fraction(a[k])
        total += lam_i * Fraction(b)
    for mu_j, (e, f) in zip(cert.mu, eqs):
        for k in range(num_vars):
            combo[k] += mu_j * Fraction(e[k])
        total += mu_j * Fraction(f)
    if any(c != 0 for c in combo) or total >= 0:
        raise RuntimeError("extracted Farkas certificate failed verification")
