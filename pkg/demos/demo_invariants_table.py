"""Reference invariants of complex hypersurfaces, degrees 1..12.

Prints chi, the total Betti number, the signature (surfaces), h^{1,1}
(Comessatti window) and the Harnack bound (curves).
"""

from patchwork import invariants as inv

print("plane curves (n = 2)")
print(f"{'d':>3} {'chi':>6} {'b_d^2':>6} {'harnack':>8}")
for d in range(1, 13):
    print(f"{d:>3} {inv.chi_complex(2, d):>6} {inv.betti_total_complex(2, d):>6} "
          f"{inv.harnack_bound(d):>8}")

print("\nsurfaces in P^3 (n = 3)")
print(f"{'d':>3} {'chi':>6} {'b_d^3':>6} {'sign':>6} {'h11':>5}  Comessatti window")
for d in range(1, 13):
    h = inv.h11(d)
    print(f"{d:>3} {inv.chi_complex(3, d):>6} {inv.betti_total_complex(3, d):>6} "
          f"{inv.signature_complex(3, d):>6} {h:>5}  [{2 - h}, {h}]")

print("\nK3 check (d = 4): hodge table", {
    f"{p},{q}": h for (p, q), h in sorted(inv.hodge_numbers(3, 4).items())
})
