"""Windowed Lax matrices and mod-2 spectral checks.

L is the tridiagonal Schrödinger operator in the spectral parameter w,

    L[m, m-1] = 1,  L[m, m] = -(w + 1/w),  L[m, m+1] = 1 + q[m],

and A couples each site to the one two steps to the right,

    A[m, m] = 1,  A[m, m+2] = -qh[m-1] q[m+2].

The pair satisfies  L(t+1) A = A L(t)  over F2 only; the integer residual is
kept so it can be inspected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .evolution import step
from .jost import PreconditionError, JostTable, jost_sweep
from .lattice import CaState
from .polyring import IntPoly, LaurentInt

__all__ = [
    "OperatorWindow",
    "LaxReport",
    "build_L",
    "build_A",
    "window_for",
    "verify_lax",
    "schrodinger_residual_mod2",
    "psi",
    "spectral_residual_mod2",
    "jost_transport_check",
]

Entry = Union[int, LaurentInt]

W_PLUS_INV = LaurentInt(-1, (1, 0, 1), "w")  # w + 1/w


@dataclass(frozen=True, eq=False)
class OperatorWindow:
    lo: int
    hi: int
    entries: dict[tuple[int, int], Entry] = field(repr=False)

    def __getitem__(self, rc: tuple[int, int]) -> Entry:
        return self.entries.get(rc, 0)

    def __len__(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "OperatorWindow") -> "OperatorWindow":
        if (self.lo, self.hi) != (other.lo, other.hi):
            raise ValueError("windows differ")
        rows: dict[int, list[tuple[int, Entry]]] = {}
        for (k, n), v in other.entries.items():
            rows.setdefault(k, []).append((n, v))
        out: dict[tuple[int, int], Entry] = {}
        for (m, k), u in self.entries.items():
            for n, v in rows.get(k, ()):
                out[m, n] = out.get((m, n), 0) + u * v
        return OperatorWindow(self.lo, self.hi, out)

    def __sub__(self, other: "OperatorWindow") -> "OperatorWindow":
        out = dict(self.entries)
        for rc, v in other.entries.items():
            out[rc] = out.get(rc, 0) - v
        return OperatorWindow(self.lo, self.hi, out)


def _check_window(state: CaState, lo: int, hi: int) -> None:
    if lo > hi:
        raise PreconditionError("empty window")
    if state and (lo > state.k1 - 2 or hi < state.kN + 2):
        raise PreconditionError(
            f"window [{lo}, {hi}] must cover [{state.k1 - 2}, {state.kN + 2}]"
        )


def build_L(state: CaState, lo: int, hi: int) -> OperatorWindow:
    _check_window(state, lo, hi)
    entries: dict[tuple[int, int], Entry] = {}
    for m in range(lo, hi + 1):
        if m > lo:
            entries[m, m - 1] = 1
        entries[m, m] = -W_PLUS_INV
        if m < hi:
            entries[m, m + 1] = 1 + state[m]
    return OperatorWindow(lo, hi, entries)


def build_A(state: CaState, evolved: CaState, lo: int, hi: int) -> OperatorWindow:
    if evolved != step(state):
        raise ValueError("evolved state is not step(state)")
    _check_window(state, lo, hi)
    entries: dict[tuple[int, int], Entry] = {(m, m): 1 for m in range(lo, hi + 1)}
    for m in range(lo, hi - 1):
        c = evolved[m - 1] * state[m + 2]
        if c:
            entries[m, m + 2] = -c
    return OperatorWindow(lo, hi, entries)


def window_for(state: CaState, margin: int) -> tuple[int, int]:
    if not state:
        return -2 - margin, 2 + margin
    return state.k1 - 2 - margin, state.kN + 2 + margin


def _is_zero_mod2(v: Entry) -> bool:
    if isinstance(v, int):
        return v % 2 == 0
    return not v.mod2()


@dataclass
class LaxReport:
    lo: int
    hi: int
    margin: int
    violations: list[tuple[int, int, Entry]]
    exact_nonzero: int  # entries of the integer residual that are nonzero

    @property
    def passed(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        return [f"({r},{c}): {v}" for r, c, v in self.violations]


def verify_lax(state: CaState, margin: int = 2) -> LaxReport:
    """Check L(t+1) A - A L(t) = 0 mod 2 away from the window edges."""
    if margin < 2:
        raise PreconditionError("margin must be at least 2")
    evolved = step(state)
    lo, hi = window_for(state, margin)
    L0 = build_L(state, lo, hi)
    L1 = build_L(evolved, lo, hi)
    A = build_A(state, evolved, lo, hi)
    R = L1 @ A - A @ L0
    inner = range(lo + margin, hi - margin + 1)
    violations = []
    exact_nonzero = 0
    for (r, c), v in sorted(R.entries.items()):
        if v:
            exact_nonzero += 1
        if r in inner and c in inner and not _is_zero_mod2(v):
            violations.append((r, c, v))
    return LaxReport(lo, hi, margin, violations, exact_nonzero)


def schrodinger_residual_mod2(state: CaState, table: JostTable) -> bool:
    """x[m-1] + (1+z) x[m] + z (1+q[m]) x[m+1] = 0 mod 2 for m_min < m <= kN."""
    if not state:
        return True
    one_plus = IntPoly((1, 1))
    z = IntPoly.monomial(1)
    for m in range(table.m_min + 1, state.kN + 1):
        r = table[m - 1] + one_plus * table[m] + z * table[m + 1] * (1 + state[m])
        if r.mod2():
            return False
    return True


def psi(table: JostTable, m: int) -> LaurentInt:
    """psi[m](w) = w**-m x[m](w**-2)."""
    x = table[m]
    if not x:
        return LaurentInt(var="w")
    d = x.degree
    coeffs = [0] * (2 * d + 1)
    for k, c in enumerate(x.coeffs):
        coeffs[2 * (d - k)] = c
    return LaurentInt(-2 * d - m, coeffs, "w")


def spectral_residual_mod2(state: CaState, table: JostTable) -> bool:
    """Rows of L applied to psi vanish mod 2 on the table interior."""
    if not state:
        return True
    lo, hi = table.m_min, state.kN + 2
    L = build_L(state, min(lo, state.k1 - 2), hi)
    for m in range(lo + 1, state.kN + 2):
        r = LaurentInt(var="w")
        for n in (m - 1, m, m + 1):
            coeff = L[m, n]
            r = r + coeff * psi(table, n)
        if r.mod2():
            return False
    return True


def jost_transport_check(state: CaState, depth: int = 4) -> bool:
    """mod 2: xh[m] = x[m] + z qh[m-1] q[m+2] x[m+2] on [k1 - depth, kN + 1]."""
    if not state:
        raise ValueError("transport check needs a nonzero state")
    evolved = step(state)
    m_min = state.k1 - depth
    x = jost_sweep(state, m_min)
    xh = jost_sweep(evolved, m_min)
    z = IntPoly.monomial(1)
    for m in range(m_min, state.kN + 2):
        rhs = x[m] + z * x[m + 2] * (evolved[m - 1] * state[m + 2])
        if xh[m].mod2() != rhs.mod2():
            return False
    return True
