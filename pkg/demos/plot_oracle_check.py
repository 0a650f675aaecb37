"""
Orientations two ways
=====================

The fast resolver iterates a few affine maps of the pattern triangle.  The
slow one lays down the symmetric six-kite cores of every hat and lets
exact-cover propagation force the rest.  They should never disagree.
"""

from collections import Counter

from hatgrid import FibParams
from hatgrid.classify import locate, pattern_point
from hatgrid.orient import fractal_colour, oracle_window
from hatgrid.trigrid import enumerate_window

p = FibParams.from_pair("2/7", "-3/13")

diff = oracle_window(p, 15, max_factor=2)
print("window radius", diff.result.window_radius)
print("compared", diff.compared, "mismatches", len(diff.mismatches))
print("still open near the centre:", len(diff.unresolved_in_target))

# grey hats are forced first, in two rounds
rounds = Counter()
for v, r in diff.result.rounds.items():
    rounds[locate(pattern_point(v, p))[0].value, min(r, 4)] += 1
for key in sorted(rounds):
    print(key, rounds[key])

# the resolver usually needs only a handful of maps
steps = Counter(fractal_colour(pattern_point(v, p).g)[1] for v in enumerate_window(30))
print(sorted(steps.items()))
