"""
Fibonacci labelling of one line family
======================================

Every line ``n`` of a family gets ``a = floor(phi*n + d)``.  Where ``a``
stands still the gap is short, and the lines on both sides of a short gap
are drawn blue.
"""

from collections import Counter

from hatgrid.exactnum import PHI_BIG, make
from hatgrid.fibline import fib_index, fib_word, line_colour, substitute, word_string

d = make("1/5")

# the first few index pairs (a, b) with a + b = n
for n in range(-3, 7):
    print(n, fib_index(n, d), line_colour(n, d))

# the gap word starting at line 0
word = fib_word(0, 40, d)
print(word_string(word))

# long words never contain SS or LLL, and L outnumbers S by the golden ratio
long = fib_word(0, 100_000, d)
c = Counter(long)
print("L/S =", c["L"] / c["S"], " Phi =", float(PHI_BIG))

# one substitution step maps S to L and L to S L
print(word_string(substitute(word[:10])))
