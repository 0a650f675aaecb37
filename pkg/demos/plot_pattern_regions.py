"""
Hat types on the pattern triangle
=================================

Each vertex of the dual grid reduces to a point ``g`` on the triangle
``g0 + g1 + g2 = 1``.  The region containing ``g`` fixes the hat type.
This script scatters a window of vertices coloured by type (needs
matplotlib).
"""

from collections import Counter

import matplotlib.pyplot as plt

from hatgrid import FibParams
from hatgrid.classify import locate, pattern_point, region_pieces
from hatgrid.trigrid import enumerate_window

p = FibParams.from_pair("1/5", "1/7")
colours = {"lightblue": "#6bb8e0", "grey": "#888888", "white_pair": "#e0a030",
           "white_isolated": "#c03030"}

xs, ys, cs = [], [], []
kinds = Counter()
for v in enumerate_window(40):
    pt = pattern_point(v, p)
    kind, _ = locate(pt)
    kinds[kind.value] += 1
    g0, g1 = float(pt.g[0]), float(pt.g[1])
    # skew the (g0, g1) chart into an equilateral triangle
    xs.append(g1 + 0.5 * g0)
    ys.append(0.8660254 * g0)
    cs.append(colours[kind.value])
print(kinds)

fig, ax = plt.subplots(figsize=(6, 5.5))
for piece in region_pieces():
    poly = [(float(b) + 0.5 * float(a), 0.8660254 * float(a)) for a, b in piece.poly]
    ax.fill(*zip(*poly), facecolor="none", edgecolor="k", lw=0.5)
ax.scatter(xs, ys, c=cs, s=3)
ax.set_aspect("equal")
ax.axis("off")
plt.savefig("pattern_regions.png", dpi=120, bbox_inches="tight")
