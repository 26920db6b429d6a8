"""T-surfaces in projective 3-space: quadric tori and a maximal quartic.

Degree 2 on a maximal triangulation always glues into a torus; at degree 4
a single negative sign at the interior point (1,1,1) produces the maximal
surface: a small sphere plus a genus-10 component, b_total = 24, with
chi = -16 satisfying the mod-16 congruence at a = 0.
"""

from patchwork import SignDistribution, analyze, build_complex, signature_complex
from patchwork.builders import staircase_triangulation_3d
from patchwork.render import render_obj

t2 = staircase_triangulation_3d(2)
sigma = SignDistribution({v: 1 for v in t2.vertex_set})
rep = analyze(build_complex(t2, sigma))
print(f"degree-2 T-surface: chi = {rep.chi}, b_total = {rep.b_total} -> a torus")

t4 = staircase_triangulation_3d(4)
sigma = SignDistribution({v: (-1 if v == (1, 1, 1) else 1) for v in t4.vertex_set})
surface = build_complex(t4, sigma)
rep = analyze(surface)
print(f"degree-4 T-surface with sigma(1,1,1) = -1:")
print(f"  components: {rep.num_components}, chi per component: {rep.component_chis}")
print(f"  b_total = {rep.b_total} (maximal: b_4^3 = 24)")
print(f"  chi = {rep.chi}, sign_4^3 = {signature_complex(3, 4)}, "
      f"chi - sign mod 16 = {(rep.chi - signature_complex(3, 4)) % 16}")

obj, sidecar = render_obj(surface)
with open("quartic_msurface.obj", "w") as fh:
    fh.write(obj)
print(f"wrote quartic_msurface.obj ({len(surface.pieces)} pieces, "
      f"{len(sidecar['identifiedVertexPairs'])} identified vertex pairs)")
