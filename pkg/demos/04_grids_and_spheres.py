"""Emit farthest-distance colormaps and Bregman-sphere polylines.

Writes CSV grids (and PPM previews) of the farthest-distance function for
the segment family at a few parameter values, plus sphere boundary
samples, into ./demo_out.  These are the data files behind the usual
center-and-sphere pictures; any plotting tool can render them.
"""

import pathlib

from bregcheb import cli

out = pathlib.Path("demo_out")
out.mkdir(exist_ok=True)

for gen in ("energy", "negentropy", "neglog"):
    for a in (4, 32):
        target = out / f"map_{gen}_a{a}.csv"
        cli.main([
            "colormap", "--gen", gen, "--segment", str(a),
            "--samples", "101", "--res", "64", "--ppm", "--out", str(target),
        ])
        print("wrote", target, "and", target.with_suffix(".ppm"))

# spheres around (1,1): for the Itakura-Saito distance the farthest point
# of the a=6 segment from (1,1) is the segment midpoint
for r in (0.5, 2.0, 8.0):
    target = out / f"sphere_neglog_r{r:g}.csv"
    cli.main([
        "sphere", "--gen", "neglog", "--center", "1,1", "--radius", str(r),
        "--res", "128", "--out", str(target),
    ])
    print("wrote", target)

print("done; load the CSV files with numpy.loadtxt(..., skiprows=1, delimiter=',')")
