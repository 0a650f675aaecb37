"""
A hat tiling from two numbers
=============================

Pick two rational offsets, build the tiling of a window, check that every
interior kite is covered once, and write two SVG pictures.
"""

from hatgrid import FibParams, generate, verify
from hatgrid.assemble import metatile_counts
from hatgrid.render import to_svg

p = FibParams.from_pair("1/5", "1/7")
t = generate(p, radius=14)

report = verify(t)
print("clean:", report.clean)
print(report.counts)

# every flipped hat sits among exactly three lightblue ones
print(metatile_counts(t))

with open("hats_by_type.svg", "w") as f:
    f.write(to_svg(t, "by_type"))

# hats turned by a half turn share a colour
with open("hats_by_orientation.svg", "w") as f:
    f.write(to_svg(t, "by_orientation"))

# the mirrored tiling keeps lightblue and isolated white hats in place
m = generate(p, radius=14, roles="mirrored")
same = {x.vertex for x in t.tiles if x.type.value == "lightblue"} == \
       {x.vertex for x in m.tiles if x.type.value == "lightblue"}
print("lightblue unchanged under mirroring:", same)
