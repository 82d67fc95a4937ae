"""
Evolving states and watching islands
====================================

A state is a finite set of occupied sites.  One time step sweeps left to
right, each new value using the already updated values to its left.
"""

from filterca import RuleForm, evolve, islands, parse_state, reverse_step, step
from filterca.cli import render_rows

# a state is written as <offset>:<bits>
s = parse_state("0:1101")
print(step(s), step(step(s)))

# the rule has a polynomial form over F2 and an exact integer form; they agree
print(step(s, RuleForm.EXACT) == step(s))

# units closer than four sites belong to the same island; islands keep their borders
two = parse_state("0:1100000010011")
print([(i.k1, i.kN) for i in islands(two)])
traj = evolve(two, 6)
for row in render_rows(traj.states):
    print(row)

# every step can be undone
print(reverse_step(step(two)) == two)
