"""
Census of small islands
=======================

Every island of width up to 8, its period and the lexicographically smallest
member of its orbit.
"""

from collections import Counter

from filterca.cli import census_rows
from filterca.invariants import nonconservation_witness

rows = census_rows(8)
print("fixed points:", [str(s) for s, period, _, _ in rows if period == 1])
print("periods:", sorted(Counter(period for _, period, _, _ in rows).items()))

# f1 and f3 at k1 are not integrals: the smallest counterexample
before, after = nonconservation_witness()
print(before, "->", after)
