"""
The Lax pair over F2
====================

L is the tridiagonal operator with spectral parameter w and A couples each
site to the one two steps right.  L(t+1) A - A L(t) vanishes mod 2 away from
the window edges, though not over the integers.
"""

from filterca import parse_state, verify_lax
from filterca.lax import build_A, build_L, jost_transport_check, window_for
from filterca.evolution import step

s = parse_state("0:10011")
lo, hi = window_for(s, 2)
L, A = build_L(s, lo, hi), build_A(s, step(s), lo, hi)
print(len(L), "entries in L;", {rc: v for rc, v in A.entries.items() if rc[0] != rc[1]})

report = verify_lax(s)
print("mod 2 residual vanishes:", report.passed)
print("integer residual entries:", report.exact_nonzero)

# the Jost solutions at t and t+1 are linked through A
print(jost_transport_check(s))
