"""Render the moment-map chart of a triangle and a T-curve SVG.

The moment map sends the positive orthant onto the interior of the Newton
polytope; its log-uniform samples shade the chart.  The SVG shows the
square model with signs, pieces and the antipodal boundary marks.
"""

import numpy as np

from patchwork import SignDistribution, moment_render, standard_simplex
from patchwork.builders import grid_triangulation_2d
from patchwork.construction import extend_signs, extract_hypersurface, projectivize
from patchwork.render import render_svg

delta = standard_simplex(2, 2)
img = moment_render(delta, grid=25)
samples = np.asarray(img.samples)
print(f"moment map of T_2^2: {len(samples)} samples, all inside: "
      f"{bool((samples.sum(axis=1) < 2).all() and (samples > 0).all())}")
print("sample at the grid center (x = (1,1)):", samples[len(samples) // 2])

t = grid_triangulation_2d(4)
sigma = SignDistribution({v: (-1) ** (v[0] * v[1]) for v in t.vertex_set})
soc = extend_signs(t, sigma)
curve = projectivize(extract_hypersurface(soc))
svg = render_svg(soc, curve)
with open("harnack_d4.svg", "w") as fh:
    fh.write(svg)
print(f"wrote harnack_d4.svg ({len(curve.pieces)} pieces)")
