"""
Jost polynomials of a state
===========================

The Jost solution x_m(z) is 1 to the right of the support and is built up
site by site to the left.  Three independent routes give the same integer
polynomial.
"""

from filterca import jost_closed, jost_product, jost_sweep, parse_state
from filterca.jost import f_measures, jost_mod2_island, reflection_relation_check

s = parse_state("0:101")
table = jost_sweep(s, -3)
for m in range(-3, 3):
    print(m, table[m])

# closed form from the support gaps, and the product over defect measures
print(jost_closed(s, -1), "|", jost_product(s, -1))
print(f_measures(s, -1))

# coefficients are palindromic, and for one island x mod 2 is (1+z)^a (1+z+z^2)^b
print(jost_closed(s, -1).is_palindrome(s.kN + 1))
print(jost_mod2_island(s, -1).to_bitstring())
print(reflection_relation_check(s, -1))
