"""
The 10-kite tile and its centre lines
=====================================

The same vertex data also builds a tiling by a 10-kite tile.  Lines running
midway between neighbouring lines of the unit grid pass through centre
triangles of one chirality only, and every tile carries the same pattern of
own and other lines.
"""

from collections import Counter

from hatgrid import FibParams, generate, verify
from hatgrid.assemble import decoration_signatures
from hatgrid.render import to_svg

p = FibParams.from_pair("1/3", "1/11")
t = generate(p, radius=12, mode="tenkite")
print("clean:", verify(t).clean)

sig = decoration_signatures(t)
patterns = Counter()
for (chirality, deco), n in sig.items():
    patterns[deco] += n
    print(chirality, n)
print("distinct decorations:", len(patterns))

with open("ten_kites.svg", "w") as f:
    f.write(to_svg(t, "by_type", decoration=True))
