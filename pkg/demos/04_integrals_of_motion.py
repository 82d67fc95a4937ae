"""
Integrals of motion
===================

Per island the borders and the number of isolated zeros are conserved
exactly, while N and the Jost polynomial at k1 are conserved only mod 2.
"""

from filterca import check_trajectory, evolve, invariant_record, jost_closed, parse_state

traj = evolve(parse_state("0:10011"), 6)
for state in traj:
    rec, = invariant_record(state)
    print(state, rec, "| x_k1 over Z:", jost_closed(state, state.k1))

report = check_trajectory(traj)
print("conserved:", report.passed)
print("x_k1 exactly conserved:", report.x_k1_exactly_conserved)
