"""Closed-form invariants of nonsingular complex hypersurfaces in CP^n.

Hodge numbers come from the monomial count: the primitive part of the
middle cohomology has

    h^{n-1-q, q}_prim = #{ a in Z^{n+1} : 0 <= a_k <= d-2, sum a_k = (q+1)d - (n+1) }

with one ambient class added on each diagonal entry h^{p,p}, 0 <= p <= n-1.
Everything else is derived from the Euler characteristic:

    chi_d^n   = ((1-d)^{n+1} - 1)/d + n + 1
    b_d^n     = chi_d^n           (n odd)
              = 2n - chi_d^n      (n even)
    sign_d^n  = sum over all (p,q) of (-1)^q h^{p,q}   (n odd)

The b_d^n rule is the Lefschetz consequence of the hyperplane-section
theorem; it is validated against the full Hodge table in the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


@lru_cache(maxsize=None)
def hodge_numbers(n: int, d: int):
    """Hodge table of a nonsingular degree-d hypersurface in CP^n.

    Returns a dict {(p, q): h^{p,q}} over 0 <= p, q <= n-1 (cohomology of
    the (n-1)-dimensional hypersurface), zeros omitted... kept explicit for
    the middle row and the diagonal.
    """
    if n < 2 or d < 1:
        raise ValueError(f"hodge_numbers needs n >= 2 and d >= 1, got ({n}, {d})")
    m = n - 1  # complex dimension of the hypersurface
    table = {}
    for q in range(m + 1):
        p = m - q
        table[(p, q)] = _primitive_middle(n, d, q)
    for p in range(m + 1):
        table[(p, p)] = table.get((p, p), 0) + 1
    return table


def _primitive_middle(n: int, d: int, q: int) -> int:
    target = (q + 1) * d - (n + 1)
    if target < 0 or target > (n + 1) * (d - 2):
        return 0
    count = 0
    for a in product(range(d - 1), repeat=n + 1):
        if sum(a) == target:
            count += 1
    return count


def hodge_polynomial_coefficient(n: int, d: int, q: int) -> int:
    """Independent oracle: coefficient of x^{(q+1)d-(n+1)} in
    (1 + x + ... + x^{d-2})^{n+1}."""
    target = (q + 1) * d - (n + 1)
    if target < 0 or d < 2:
        return 0
    poly = [1]
    block = [1] * (d - 1)
    for _ in range(n + 1):
        out = [0] * (len(poly) + len(block) - 1)
        for i, c in enumerate(poly):
            if c:
                for j, bb in enumerate(block):
                    out[i + j] += c * bb
        poly = out
    return poly[target] if target < len(poly) else 0


def chi_complex(n: int, d: int) -> int:
    """Euler characteristic of a nonsingular degree-d hypersurface in CP^n."""
    num = (1 - d) ** (n + 1) - 1
    assert num % d == 0
    return num // d + n + 1


def signature_complex(n: int, d: int) -> int:
    """Signature (n odd): the alternating-in-q sum over the Hodge table."""
    if n % 2 == 0:
        raise ValueError("signature is defined for odd n (even-dimensional hypersurface)")
    table = hodge_numbers(n, d)
    return sum((-1) ** q * h for (p, q), h in table.items())


def signature_closed_form_3(d: int) -> int:
    """sign_d^3 = (4 - d^2) d / 3, used as a cross-check for n = 3."""
    num = (4 - d * d) * d
    assert num % 3 == 0
    return num // 3


def betti_total_complex(n: int, d: int) -> int:
    """Total Z/2 Betti number b_d^n of the complex hypersurface.

    Derived from chi via the Lefschetz structure (middle Betti number plus
    one for each even dimension).  The closed form printed in the source
    material disagrees with forced small values (it gives 5 for a plane
    cubic, whose total Betti number is 4), so the Euler-characteristic
    derivation is used instead; the test-suite pins both the discrepancy
    and the Hodge-table cross-check.
    """
    chi = chi_complex(n, d)
    if n % 2 == 1:
        return chi
    return 2 * n - chi


def harnack_bound(d: int) -> int:
    """Maximal number of connected components of a degree-d real curve."""
    return (d - 1) * (d - 2) // 2 + 1


def h11(d: int) -> int:
    """h^{1,1} of a degree-d surface in CP^3 (Comessatti bound)."""
    return hodge_numbers(3, d)[(1, 1)]


@dataclass(frozen=True)
class ComplexInvariants:
    n: int
    d: int
    chi: int
    sign: int | None
    b_total: int
    hodge: dict
    h11: int | None

    def to_json(self):
        out = {
            "n": self.n,
            "d": self.d,
            "chi": self.chi,
            "b": self.b_total,
            "hodge": {f"{p},{q}": h for (p, q), h in sorted(self.hodge.items())},
        }
        if self.sign is not None:
            out["sign"] = self.sign
        if self.h11 is not None:
            out["h11"] = self.h11
        return out


def complex_invariants(n: int, d: int) -> ComplexInvariants:
    table = hodge_numbers(n, d)
    sign = signature_complex(n, d) if n % 2 == 1 else None
    return ComplexInvariants(
        n=n,
        d=d,
        chi=chi_complex(n, d),
        sign=sign,
        b_total=betti_total_complex(n, d),
        hodge=dict(table),
        h11=table[(1, 1)] if n == 3 else None,
    )
