"""Jost solutions of the gauge-transformed discrete Schrödinger recursion.

With x[m] = w**m psi[m] and z = w**-2 the spectral problem becomes

    x[m-1] - (1 + z) x[m] + z (1 - q[m]) x[m+1] = 0,

and the Jost solution is fixed by x[m] = 1 for m >= kN.  It is a polynomial in
z with non-negative integer coefficients.  Three independent routes compute it:

* :func:`jost_sweep` runs the recursion downward from kN (the oracle);
* :func:`jost_closed` multiplies geometric factors built from support gaps;
* :func:`jost_product` multiplies geometric factors weighted by the defect
  measures f_i(m).

The module also holds the defect measures, the mod-2 single-island form, the
potential reconstruction from f_2, and the monodromy data a(z), b(z).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Mapping

from .lattice import CaState, islands, support
from .polyring import (
    ONE_PLUS_Z,
    ONE_PLUS_Z_PLUS_Z2,
    F2Poly,
    IntPoly,
    LaurentInt,
    div_exact_one_minus_z,
    geometric,
    substitute_inverse,
)

__all__ = [
    "PreconditionError",
    "JostTable",
    "MeasureVector",
    "MonodromyRecord",
    "jost_sweep",
    "jost_closed",
    "jost_product",
    "jost_integral",
    "recursion_residual",
    "default_i_max",
    "f_measure",
    "f_measures",
    "f2_profile",
    "trivial_solution",
    "trivial_kernel",
    "homogeneous_residual",
    "linear_system_residuals",
    "monodromy_coefficients",
    "reflection_relation_check",
    "jost_mod2_island",
    "reconstruct_potential",
    "asymptotic_tail_sum",
    "sum_rules_check",
    "monodromy",
]

ONE = IntPoly.const(1)
Z = IntPoly.monomial(1)
ONE_PLUS = IntPoly((1, 1))


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class JostTable:
    """Values x_m(z) for m >= m_min; every m >= kN maps to 1."""

    support: tuple[int, ...]
    m_min: int
    values: Mapping[int, IntPoly] = field(repr=False)

    @property
    def top(self) -> int | None:
        return self.support[-1] if self.support else None

    def __getitem__(self, m: int) -> IntPoly:
        if m < self.m_min:
            raise KeyError(f"site {m} below table start {self.m_min}")
        if self.top is None or m >= self.top:
            return ONE
        return self.values[m]

    def sites(self) -> range:
        """Sites from m_min through kN + 1."""
        top = self.m_min + 1 if self.top is None else self.top + 1
        return range(self.m_min, top + 1)


def recursion_residual(state: CaState, x_prev: IntPoly, x: IntPoly, x_next: IntPoly, m: int) -> IntPoly:
    """x[m-1] - (1+z) x[m] + z (1 - q[m]) x[m+1]."""
    return x_prev - ONE_PLUS * x + (Z * x_next) * (1 - state[m])


def jost_sweep(state: CaState, m_min: int) -> JostTable:
    """Jost solution by downward recursion from x[kN] = x[kN+1] = 1."""
    if not state:
        return JostTable((), m_min, {})
    kN = state.kN
    if m_min > kN + 1:
        raise ValueError(f"m_min={m_min} exceeds kN + 1 = {kN + 1}")
    values = {kN + 1: ONE, kN: ONE}
    for m in range(kN, m_min, -1):
        values[m - 1] = ONE_PLUS * values[m] - (Z * values[m + 1]) * (1 - state[m])
    for m in range(m_min + 1, kN + 2):
        res = recursion_residual(state, values[m - 1], values[m], values.get(m + 1, ONE), m)
        if res:
            raise ArithmeticError(f"recursion residual {res} at m={m}")
    return JostTable(tuple(support(state)), m_min, values)


def jost_closed(state: CaState, m: int) -> IntPoly:
    """Product of geometric factors over the support gaps to the right of m."""
    sites = support(state)
    if not sites or m >= sites[-1]:
        return ONE
    j = bisect_left(sites, m)
    x = geometric(sites[j] - m + 1)
    for a, b in zip(sites[j:], sites[j + 1:]):
        x = x * geometric(b - a + 1)
    return x


def jost_integral(state: CaState, m_min: int) -> dict[int, IntPoly]:
    """Jost values from the integral equation, evaluated for m = kN down to m_min.

    x[m] = 1 + z * sum_{k >= m, q[k] = 1} (1 + ... + z**(k-m-1)) x[k+1]
    """
    sites = support(state)
    if not sites:
        return {m: ONE for m in range(m_min, m_min + 2)}
    kN = sites[-1]
    x = {kN + 1: ONE}
    for m in range(kN, m_min - 1, -1):
        acc = IntPoly()
        for k in sites[bisect_left(sites, m):]:
            acc = acc + geometric(k - m) * x[k + 1]
        x[m] = ONE + Z * acc
    return x


def _pattern(state: CaState, n: int, i: int) -> int:
    """prod_{j=1}^{i-1} (1 - q[n+j]) * q[n+i]."""
    if not state[n + i]:
        return 0
    for j in range(1, i):
        if state[n + j]:
            return 0
    return 1


def f_measure(state: CaState, m: int, i: int) -> int:
    """f_i(m): (i-1)-defects starting right of m, plus the leading-gap term."""
    if i < 1:
        raise ValueError("measure index starts at 1")
    if not state:
        return 0
    total = _pattern(state, m, i)
    for n in range(max(m + 1, state.k1), state.kN + 1):
        if state[n]:
            total += _pattern(state, n, i)
    return total


def default_i_max(state: CaState, m: int) -> int:
    """Smallest cutoff beyond which every f_i(m) vanishes, never below kN - k1 + 2."""
    if not state:
        return 1
    return max(state.kN - state.k1 + 2, state.kN - m, 1)


@dataclass(frozen=True)
class MeasureVector:
    """f_1(m), f_2(m), ..., f_{i_max}(m)."""

    site: int
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise IndexError(f"measure f_{i} not computed (i_max={len(self.values)})")
        return self.values[i - 1]

    @property
    def i_max(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return " ".join(f"f{i}={v}" for i, v in enumerate(self.values, 1))


def f_measures(state: CaState, m: int, i_max: int | None = None) -> MeasureVector:
    """All f_i(m) for i <= i_max, counted from the support gaps right of m.

    f_i(m) is the number of gaps of length i between consecutive units beyond
    m, plus one if the first unit beyond m sits at m + i.  :func:`f_measure`
    evaluates the defining sum directly and serves as a cross-check.
    """
    if i_max is None:
        i_max = default_i_max(state, m)
    if i_max < 1:
        raise ValueError("i_max must be at least 1")
    values = [0] * (i_max + 1)
    sites = support(state)
    j = bisect_left(sites, m + 1)
    if j < len(sites) and sites[j] - m <= i_max:
        values[sites[j] - m] += 1
    for a, b in zip(sites[j:], sites[j + 1:]):
        if b - a <= i_max:
            values[b - a] += 1
    return MeasureVector(m, tuple(values[1:]))


def f2_profile(state: CaState, lo: int, hi: int) -> dict[int, int]:
    return {m: f_measure(state, m, 2) for m in range(lo, hi + 1)}


def jost_product(state: CaState, m: int) -> IntPoly:
    """prod_k ((1 - z**(k+1)) / (1 - z)) ** f_k(m).

    The measures come from the defining sums, not from the support gaps.
    """
    x = ONE
    for k in range(1, default_i_max(state, m) + 1):
        f = f_measure(state, m, k)
        if f:
            x = x * geometric(k + 1) ** f
    return x


def trivial_kernel(d: int) -> LaurentInt:
    """(1 - z**-d) / (1 - 1/z) = 1 + z**-1 + ... + z**-(d-1), for d >= 0."""
    if d < 0:
        raise ValueError("kernel defined for d >= 0")
    return LaurentInt(1 - d, (1,) * d) if d else LaurentInt()


def trivial_solution(kN: int, m: int) -> LaurentInt:
    """The solution vanishing for m <= kN."""
    if m <= kN:
        return LaurentInt()
    return trivial_kernel(m - kN)


def homogeneous_residual(state: CaState, l: int) -> LaurentInt:
    """x0[l] - sum_{k <= l} q[k] (1 - z**(k-l))/(1 - 1/z) x0[k+1] for the trivial solution."""
    kN = state.kN
    rhs = LaurentInt()
    for k in support(state):
        if k > l:
            break
        rhs = rhs + trivial_kernel(l - k) * trivial_solution(kN, k + 1)
    return trivial_solution(kN, l) - rhs


def linear_system_residuals(state: CaState, table: JostTable) -> list[IntPoly]:
    """Left side minus 1 of the linear system for the values x[k_j + 1].

    Row l reads sum_{j >= l} (z**(k_j - k_l) - z)/(1 - z) x[k_j + 1] = 1; the
    kernel is 1 on the diagonal and -z (1 + ... + z**(d-2)) for d = k_j - k_l > 0.
    """
    sites = support(state)
    out = []
    for l, kl in enumerate(sites):
        acc = table[kl + 1]
        for kj in sites[l + 1:]:
            acc = acc - Z * geometric(kj - kl - 1) * table[kj + 1]
        out.append(acc - ONE)
    return out


def monodromy_coefficients(state: CaState, table: JostTable) -> list[tuple[IntPoly, LaurentInt]]:
    """((1 - z) a_l, (1 - z) b_l) for l = 1..N, from the values x[k_j + 1]."""
    sites = support(state)
    out = []
    for l in range(len(sites)):
        tail = sites[l:]
        a = (ONE - Z) + Z * sum((table[k + 1] for k in tail), IntPoly())
        b = -sum((table[k + 1].to_laurent().shift(k + 1) for k in tail), LaurentInt())
        out.append((a, b))
    return out


def reflection_relation_check(state: CaState, m: int) -> bool:
    """x[m] - z**kN x~[m] == theta(m >= kN) (1 - 1/z) x0[m], with x~[m] = z**-m x[m](1/z)."""
    if not state:
        raise ValueError("relation needs a nonzero state")
    kN = state.kN
    x = jost_closed(state, m).to_laurent()
    lhs = x - substitute_inverse(x, -m).shift(kN)
    rhs = LaurentInt()
    if m >= kN:
        rhs = (LaurentInt.const(1) - LaurentInt.monomial(-1)) * trivial_solution(kN, m)
    return lhs == rhs


def _single_island(state: CaState) -> None:
    if len(islands(state)) != 1:
        raise PreconditionError("a single island is required (consecutive units at most 3 sites apart)")


def jost_mod2_island(state: CaState, m: int) -> F2Poly:
    """(1+z)**(kN - m - 2 f_2(m)) (1+z+z^2)**f_2(m) over F2, for k1 - 2 <= m <= kN."""
    _single_island(state)
    k1, kN = state.k1, state.kN
    if not k1 - 2 <= m <= kN:
        raise PreconditionError(f"site {m} outside the single-island window [{k1 - 2}, {kN}]")
    f = f_measures(state, m, max(3, default_i_max(state, m)))
    e = kN - m - 2 * f[2]
    if e != f[1] + 3 * f[3] or e < 0:
        raise ArithmeticError(f"exponent {e} disagrees with f1 + 3 f3 = {f[1] + 3 * f[3]}")
    if any(f.values[3:]):
        raise ArithmeticError("higher measures nonzero on a single island")
    return ONE_PLUS_Z**e * ONE_PLUS_Z_PLUS_Z2 ** f[2]


def reconstruct_potential(profile: Mapping[int, int], lo: int, hi: int) -> CaState:
    """q[m] = 1 - |f_2(m) - f_2(m-1)| for m in [lo, hi]; needs f_2 on [lo-1, hi]."""
    cells = []
    for m in range(lo, hi + 1):
        try:
            d = abs(profile[m] - profile[m - 1])
        except KeyError as exc:
            raise PreconditionError(f"profile lacks site {exc.args[0]}") from None
        if d > 1:
            raise PreconditionError(f"f_2 jumps by {d} between {m - 1} and {m}")
        cells.append(1 - d)
    return CaState(lo, tuple(cells))


def asymptotic_tail_sum(state: CaState, m: int) -> int:
    """Coefficient of z in x[m], which counts the units right of m."""
    return jost_closed(state, m)[1]


def sum_rules_check(state: CaState, m: int) -> bool:
    """sum_i f_i(m) = sum_{n > m} q[n]  and  sum_i i f_i(m) = max(kN - m, 0)."""
    f = f_measures(state, m)
    tail = sum(1 for k in support(state) if k > m)
    weighted = sum(i * v for i, v in enumerate(f.values, 1))
    span = max(state.kN - m, 0) if state else 0
    return sum(f.values) == tail and weighted == span


@dataclass(frozen=True)
class MonodromyRecord:
    """a(z), b(z) encoded through x_{k1}(z): (1-z) a = x_{k1}, b = -z**(k1+1) a."""

    k1: int
    x_k1: IntPoly

    @property
    def a_times_one_minus_z(self) -> IntPoly:
        return self.x_k1

    @property
    def b_times_one_minus_z(self) -> LaurentInt:
        return -self.x_k1.to_laurent().shift(self.k1 + 1)

    def a_series(self, order: int) -> list[int]:
        """Taylor coefficients of a(z) = x_{k1}(z)/(1 - z) up to z**order."""
        out, acc = [], 0
        for k in range(order + 1):
            acc += self.x_k1[k]
            out.append(acc)
        return out

    def mod2(self) -> F2Poly:
        return self.x_k1.mod2()


def monodromy(state: CaState) -> MonodromyRecord:
    if not state:
        raise ValueError("zero state has no monodromy data")
    k1 = state.k1
    x_k1 = jost_closed(state, k1)
    for m in (k1, k1 - 1, k1 - 2):
        expected = div_exact_one_minus_z(x_k1 * (ONE - IntPoly.monomial(k1 - m + 1)))
        if jost_closed(state, m) != expected:
            raise ArithmeticError(f"x[{m}] is not a1 (1 - z**{k1 - m + 1})")
    return MonodromyRecord(k1, x_k1)
