"""Convexity of subdivisions: witnesses, Farkas certificates, star moves.

The pinwheel triangulation is the classical non-convex example: the exact
LP proves infeasibility and the certificate replays to 0 < 0.  Random
maximal triangulations are then convexified by star moves.
"""

from random import Random

from patchwork import check_regularity, convexify_star_moves, verify_certificate, verify_witness
from patchwork.builders import grid_triangulation_2d, random_maximal_triangulation_2d
from patchwork.lattice import LatticePolytope, LatticeSubdivision, standard_simplex

# a regular triangulation: the degree-2 grid
grid = grid_triangulation_2d(2)
res = check_regularity(grid)
print("grid T_2^2:", "regular" if res.regular else "nonregular")
print("  witness verifies:", verify_witness(grid, res.witness))
print("  heights:", {k: str(v) for k, v in sorted(res.witness.heights.items())})

# the pinwheel: valid but not regular
pin = LatticeSubdivision(
    standard_simplex(2, 4),
    [
        LatticePolytope(c)
        for c in [
            [(0, 0), (4, 0), (2, 1)],
            [(0, 0), (2, 1), (1, 1)],
            [(4, 0), (0, 4), (1, 2)],
            [(4, 0), (1, 2), (2, 1)],
            [(0, 4), (0, 0), (1, 1)],
            [(0, 4), (1, 1), (1, 2)],
            [(1, 1), (2, 1), (1, 2)],
        ]
    ],
)
res = check_regularity(pin)
print("pinwheel:", "regular" if res.regular else "nonregular")
print("  certificate verifies:", verify_certificate(pin, res.certificate))
print("  nonzero multipliers:", len(res.certificate.ineq_coeffs))

# star moves: transform a random maximal triangulation until the star of
# the origin is the whole triangle
rng = Random(1)
t = random_maximal_triangulation_2d(4, rng)
trace = convexify_star_moves(t)
print(f"star moves on a random maximal triangulation of T_4^2: "
      f"{len(trace.moves)} moves")
for mv in trace.moves[:5]:
    print(f"  kind {mv.kind}: -{len(mv.removed)} +{len(mv.inserted)} cells, "
          f"star area -> {mv.star_area_after}")
print("  ... final star area:", trace.moves[-1].star_area_after)
