"""Build a T-curve step by step and inspect its topology.

Walks the full pipeline on a degree-3 example: triangulate T_3^2, choose
signs, extend them to all four quadrant copies, cut out the midline pieces,
projectivize, and read off components / ovals / nesting.
"""

from patchwork import SignDistribution, analyze, build_complex
from patchwork.builders import grid_triangulation_2d
from patchwork.construction import extend_signs, extract_hypersurface, projectivize

t = grid_triangulation_2d(3)
print(f"triangulation of T_3^2: {len(t.cells)} primitive triangles, "
      f"{len(t.vertex_set)} vertices")

# the all-plus distribution already happens to give the maximal curve
sigma = SignDistribution({v: 1 for v in t.vertex_set})

soc = extend_signs(t, sigma)
print("extended sign at (-1, 0):", soc.sign_at((-1, 0)), " (rule: (-1)^1 * sigma(1,0))")

affine = extract_hypersurface(soc)
print(f"affine model: {len(affine.pieces)} midline segments in |x|+|y| <= 3")

curve = projectivize(affine)
report = analyze(curve)
print(f"projective T-curve: {report.num_components} components "
      f"({report.one_sided_count} one-sided, {report.p_even} even ovals, "
      f"{report.n_odd} odd ovals)")
print("component Euler characteristics:", report.component_chis)
print("complement regions (chi):", [r.chi for r in report.regions])
print("mod-2 degree:", report.mod2_degree)

# flipping one sign can destroy a component
sigma2 = sigma.flip((1, 1))
report2 = analyze(build_complex(t, sigma2))
print(f"after flipping sigma(1,1): {report2.num_components} components")
