"""Time stepping of the filter automaton.

The update at site m reads already-updated values at m-1 and m-2, so each step
is a left-to-right sweep.  Two algebraically different forms of the rule are
provided: the mod-2 rule

    qh[m] = q[m] + qh[m-2] q[m+1] + qh[m-1] q[m+2]   (mod 2)

and the exact integer rule

    qh[m] = q[m] - |qh[m-1] q[m+2] - qh[m-2] q[m+1]| (2 q[m] - 1)

which never leaves {0, 1} and needs no modular reduction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .lattice import CaState, concat, format_state, islands, parse_state, reflect

__all__ = [
    "RuleForm",
    "Trajectory",
    "sweep",
    "step",
    "evolve",
    "reverse_step",
    "read_trajectory",
]


class RuleForm(enum.Enum):
    MOD2 = "mod2"
    EXACT = "exact"


def sweep(cells: tuple[int, ...], form: RuleForm = RuleForm.MOD2) -> tuple[int, ...]:
    """Update one run of cells, with zeros assumed on both sides.

    Updated values left of the run are seeded with 0, which is what border
    conservation demands.
    """
    n = len(cells)
    q = list(cells) + [0, 0]
    qh = [0, 0] + [0] * n  # qh[i + 2] is the new value at position i
    for i in range(n):
        u = qh[i + 1] * q[i + 2]  # qh[m-1] q[m+2]
        v = qh[i] * q[i + 1]  # qh[m-2] q[m+1]
        if form is RuleForm.MOD2:
            new = (q[i] + u + v) % 2
        else:
            new = q[i] - abs(u - v) * (2 * q[i] - 1)
            if new not in (0, 1):
                raise ArithmeticError(f"exact rule left {{0,1}} at position {i}: {new}")
        qh[i + 2] = new
    return tuple(qh[2:])


def step(state: CaState, form: RuleForm = RuleForm.MOD2) -> CaState:
    """Advance ``state`` by one time step, island by island."""
    parts = [CaState(isl.k1, sweep(isl.state.cells, form)) for isl in islands(state)]
    return concat(parts)


@dataclass(frozen=True)
class Trajectory:
    """States at t = 0, 1, ..., T."""

    states: tuple[CaState, ...]
    form: RuleForm = RuleForm.MOD2

    @property
    def initial(self) -> CaState:
        return self.states[0]

    @property
    def steps(self) -> int:
        return len(self.states) - 1

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, t: int) -> CaState:
        return self.states[t]

    def to_text(self) -> str:
        return "".join(format_state(s) + "\n" for s in self.states)


def evolve(state: CaState, steps: int, form: RuleForm = RuleForm.MOD2) -> Trajectory:
    if steps < 0:
        raise ValueError("steps must be non-negative")
    states = [state]
    for _ in range(steps):
        states.append(step(states[-1], form))
    return Trajectory(tuple(states), form)


def read_trajectory(lines: Iterable[str], form: RuleForm = RuleForm.MOD2) -> Trajectory:
    """Inverse of :meth:`Trajectory.to_text`; blank lines are skipped."""
    states = tuple(parse_state(line) for line in lines if line.strip())
    return Trajectory(states, form)


def reverse_step(state: CaState) -> CaState:
    """Undo one step, using invariance under q[n, t] -> q[-n, 1 - t]."""
    return reflect(step(reflect(state)))
