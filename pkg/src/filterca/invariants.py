"""Integrals of motion and their conservation along trajectories.

Per island the borders k1, kN and the number of isolated zeros f_2(k1) are
exact integrals.  N mod 2 and x_{k1}(z) mod 2 (equivalently a(z), b(z) mod 2)
are conserved mod 2.  f_2(k1) is counted straight from the bit pattern, so the
conservation check does not go through the Jost polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .evolution import Trajectory, step
from .jost import (
    PreconditionError,
    f2_profile,
    f_measure,
    jost_closed,
    jost_mod2_island,
    reconstruct_potential,
)
from .lattice import CaState, islands, support
from .polyring import ONE_PLUS_Z, ONE_PLUS_Z_PLUS_Z2, F2Poly, IntPoly

__all__ = [
    "InvariantRecord",
    "TrajectoryReport",
    "isolated_zeros",
    "invariant_record",
    "check_trajectory",
    "f2_transport_check",
    "single_islands",
    "nonconservation_witness",
]


def isolated_zeros(state: CaState) -> int:
    """Number of 1,0,1 patterns, i.e. f_2(k1)."""
    c = state.cells
    return sum(1 for i in range(len(c) - 2) if c[i] and not c[i + 1] and c[i + 2])


@dataclass(frozen=True)
class InvariantRecord:
    k1: int
    kN: int
    f2_k1: int
    n_parity: int
    x_k1_mod2: F2Poly

    def __str__(self) -> str:
        return (
            f"island [{self.k1},{self.kN}]: f2={self.f2_k1} "
            f"parity={self.n_parity} xk1={self.x_k1_mod2.to_bitstring()}"
        )


def _island_record(s: CaState) -> tuple[InvariantRecord, IntPoly]:
    k1, kN = s.k1, s.kN
    f2 = isolated_zeros(s)
    parity = (kN - k1 + 1 + f2) % 2
    if parity != len(support(s)) % 2:
        raise ArithmeticError(f"parity formula disagrees with N for {s}")
    x_exact = jost_closed(s, k1)
    x_mod2 = ONE_PLUS_Z ** (kN - k1 - 2 * f2) * ONE_PLUS_Z_PLUS_Z2**f2
    if x_mod2 != x_exact.mod2() or x_mod2 != jost_mod2_island(s, k1):
        raise ArithmeticError(f"x_k1 mod 2 formula disagrees with the Jost solution for {s}")
    return InvariantRecord(k1, kN, f2, parity, x_mod2), x_exact


def invariant_record(state: CaState) -> list[InvariantRecord]:
    return [_island_record(isl.state)[0] for isl in islands(state)]


@dataclass
class TrajectoryReport:
    steps: int
    first_violation: str | None = None
    # per step, per island: (f1(k1), f3(k1)); diagnostics only
    f1_f3: list[list[tuple[int, int]]] = field(default_factory=list)
    x_k1_exact: list[list[IntPoly]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.first_violation is None

    @property
    def x_k1_exactly_conserved(self) -> bool:
        return all(row == self.x_k1_exact[0] for row in self.x_k1_exact)

    @property
    def f1_f3_varies(self) -> bool:
        return any(row != self.f1_f3[0] for row in self.f1_f3)


def check_trajectory(traj: Trajectory) -> TrajectoryReport:
    """Compare each step's invariant records with those at t = 0."""
    report = TrajectoryReport(traj.steps)
    reference = None
    for t, state in enumerate(traj):
        if t and state != step(traj[t - 1], traj.form):
            report.first_violation = f"t={t}: state is not step of t={t - 1}"
            return report
        pieces = [isl.state for isl in islands(state)]
        recs, exact = [], []
        for s in pieces:
            rec, x = _island_record(s)
            recs.append(rec)
            exact.append(x)
        report.f1_f3.append([(f_measure(s, s.k1, 1), f_measure(s, s.k1, 3)) for s in pieces])
        report.x_k1_exact.append(exact)
        if reference is None:
            reference = recs
            continue
        if len(recs) != len(reference):
            report.first_violation = f"t={t}: island count {len(reference)} -> {len(recs)}"
            return report
        for idx, (r0, r) in enumerate(zip(reference, recs)):
            for name in ("k1", "kN", "f2_k1", "n_parity", "x_k1_mod2"):
                before, after = getattr(r0, name), getattr(r, name)
                if before != after:
                    report.first_violation = f"t={t}, island {idx}: {name} {before} -> {after}"
                    return report
    return report


def f2_transport_check(state: CaState) -> bool:
    """f2_hat(m) = f2(m) + qh[m-1] q[m+2] (2 q[m+1] - 1) on [k1 - 2, kN].

    Also checks that consecutive f2_hat differ by at most 1 and that the
    evolved island is recovered from f2_hat alone.
    """
    if len(islands(state)) != 1:
        raise PreconditionError("f2 transport needs a single island")
    evolved = step(state)
    k1, kN = state.k1, state.kN
    before = f2_profile(state, k1 - 3, kN)
    after = f2_profile(evolved, k1 - 3, kN)
    for m in range(k1 - 2, kN + 1):
        predicted = before[m] + evolved[m - 1] * state[m + 2] * (2 * state[m + 1] - 1)
        if after[m] != predicted:
            return False
        if abs(after[m - 1] - after[m]) > 1:
            return False
    return reconstruct_potential(after, k1 - 2, kN) == evolved


def single_islands(width: int) -> Iterator[CaState]:
    """All islands of exactly ``width`` sites starting at 0, in lexicographic order."""
    if width == 1:
        yield CaState(0, (1,))
        return
    for mid in itertools.product((0, 1), repeat=width - 2):
        cells = (1, *mid, 1)
        if "000" not in "".join(map(str, cells)):
            yield CaState(0, cells)


def nonconservation_witness(max_width: int = 8) -> tuple[CaState, CaState] | None:
    """First island whose f_1(k1) or f_3(k1) changes in one step."""
    for width in range(1, max_width + 1):
        for s in single_islands(width):
            nxt = step(s)
            if any(f_measure(s, 0, i) != f_measure(nxt, 0, i) for i in (1, 3)):
                return s, nxt
    return None
