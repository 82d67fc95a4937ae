"""Exact polynomials over Z and F2, and Laurent polynomials over Z.

Coefficients are Python ints, so nothing overflows.  ``IntPoly`` and
``LaurentInt`` store dense coefficient tuples, lowest power first.
``F2Poly`` stores its coefficients as the bits of an int (bit i is the
coefficient of z**i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

__all__ = [
    "IntPoly",
    "F2Poly",
    "LaurentInt",
    "NotDivisibleError",
    "geometric",
    "div_exact_one_minus_z",
    "substitute_inverse",
    "ONE_PLUS_Z",
    "ONE_PLUS_Z_PLUS_Z2",
]


class NotDivisibleError(ArithmeticError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _term(c: int, k: int, var: str, first: bool) -> str:
    mag = abs(c)
    if k == 0:
        body = str(mag)
    else:
        power = var if k == 1 else f"{var}^{k}"
        body = power if mag == 1 else f"{mag}*{power}"
    if first:
        return body if c > 0 else "-" + body
    return (" + " if c > 0 else " - ") + body


def _format(terms: Iterable[tuple[int, int]], var: str) -> str:
    out = []
    for k, c in terms:
        if c:
            out.append(_term(c, k, var, not out))
    return "".join(out) if out else "0"


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class IntPoly:
    """Polynomial in z with integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(_convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def shift(self, k: int) -> "IntPoly":
        """Multiply by z**k (k >= 0)."""
        if k < 0:
            raise ValueError("use LaurentInt for negative shifts")
        return IntPoly((0,) * k + self.coeffs) if self.coeffs else self

    def mod2(self) -> "F2Poly":
        return F2Poly(sum(1 << i for i, c in enumerate(self.coeffs) if c % 2))

    def is_palindrome(self, degree: int) -> bool:
        """True if the coefficients read the same both ways over z^0..z^degree."""
        if self.degree > degree:
            return False
        full = [self[i] for i in range(degree + 1)]
        return full == full[::-1]

    def to_laurent(self, var: str = "z") -> "LaurentInt":
        return LaurentInt(0, self.coeffs, var)

    def __str__(self):
        return _format(enumerate(self.coeffs), "z")

    def __repr__(self):
        return f"IntPoly({str(self)!r})"


@dataclass(frozen=True)
class F2Poly:
    """Polynomial in z over F2, packed into the bits of an int."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("bit pattern must be non-negative")

    @classmethod
    def from_bitstring(cls, s: str) -> "F2Poly":
        """Read a lowest-power-first bitstring such as ``"1001"``."""
        return cls(sum(1 << i for i, ch in enumerate(s) if ch == "1"))

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def __getitem__(self, k: int) -> int:
        return (self.bits >> k) & 1

    def __bool__(self):
        return self.bits != 0

    def __add__(self, other: "F2Poly") -> "F2Poly":
        return F2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "F2Poly") -> "F2Poly":
        a, b, c = self.bits, other.bits, 0
        while b:
            if b & 1:
                c ^= a
            a <<= 1
            b >>= 1
        return F2Poly(c)

    def __pow__(self, e: int) -> "F2Poly":
        if e < 0:
            raise ValueError("negative power")
        result, base = F2Poly(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "F2Poly":
        return F2Poly(self.bits << k)

    def to_bitstring(self) -> str:
        if not self.bits:
            return "0"
        return format(self.bits, "b")[::-1]

    def lift(self) -> IntPoly:
        """The 0/1 integer polynomial with the same coefficients."""
        return IntPoly(self[i] for i in range(self.degree + 1))

    def __str__(self):
        return self.to_bitstring()

    def __repr__(self):
        return f"F2Poly({self.to_bitstring()!r})"


ONE_PLUS_Z = F2Poly(0b11)
ONE_PLUS_Z_PLUS_Z2 = F2Poly(0b111)


@dataclass(frozen=True)
class LaurentInt:
    """Laurent polynomial sum_k coeffs[k - low] * var**k with integer coefficients."""

    low: int = 0
    coeffs: tuple[int, ...] = ()
    var: str = "z"

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        low = int(self.low)
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        c = list(_trim(c[start:]))
        object.__setattr__(self, "low", low + start if c else 0)
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1, var: str = "z") -> "LaurentInt":
        return cls(k, (c,), var)

    @classmethod
    def const(cls, c: int, var: str = "z") -> "LaurentInt":
        return cls(0, (c,), var)

    @property
    def high(self) -> int:
        """Top exponent; meaningless for the zero polynomial."""
        return self.low + len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        i = k - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def items(self):
        return ((self.low + i, c) for i, c in enumerate(self.coeffs) if c)

    def _coerce(self, other) -> "LaurentInt":
        if isinstance(other, LaurentInt):
            if other.var != self.var and other and self:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return LaurentInt.const(other, self.var)
        if isinstance(other, IntPoly):
            return other.to_laurent(self.var)
        return NotImplemented

    def _var(self, other: "LaurentInt") -> str:
        return self.var if self else other.var

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            return self
        if not self:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        return LaurentInt(lo, [self[k] + other[k] for k in range(lo, hi + 1)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentInt(self.low, [-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentInt(self.low + other.low, _convolve(self.coeffs, other.coeffs), self._var(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = self._coerce(other)
        if isinstance(other, LaurentInt):
            if not self and not other:
                return True
            return (self.low, self.coeffs, self.var) == (other.low, other.coeffs, other.var)
        return NotImplemented

    def __hash__(self):
        if not self:
            return hash(("LaurentInt", 0))
        return hash(("LaurentInt", self.low, self.coeffs, self.var))

    def shift(self, k: int) -> "LaurentInt":
        """Multiply by var**k."""
        return LaurentInt(self.low + k, self.coeffs, self.var)

    def mod2(self) -> "LaurentInt":
        return LaurentInt(self.low, [c % 2 for c in self.coeffs], self.var)

    def to_intpoly(self) -> IntPoly:
        if self and self.low < 0:
            raise ValueError("negative powers present")
        return IntPoly((0,) * self.low + self.coeffs) if self else IntPoly()

    def __str__(self):
        return _format(self.items(), self.var)

    def __repr__(self):
        return f"LaurentInt({str(self)!r})"


Poly = Union[IntPoly, LaurentInt]


def geometric(d: int) -> IntPoly:
    """1 + z + ... + z**(d-1), i.e. (1 - z**d)/(1 - z); zero for d = 0."""
    if d < 0:
        raise ValueError("length must be non-negative")
    return IntPoly((1,) * d)


def div_exact_one_minus_z(p: IntPoly) -> IntPoly:
    """Exact quotient p / (1 - z); raises NotDivisibleError if p(1) != 0."""
    quotient = []
    acc = 0
    for c in p.coeffs[:-1]:
        acc += c
        quotient.append(acc)
    if p and acc + p.coeffs[-1] != 0:
        raise NotDivisibleError(f"{p} is not divisible by 1 - z")
    return IntPoly(quotient)


def substitute_inverse(p: Poly, pivot: int) -> LaurentInt:
    """var**pivot * p(1/var)."""
    if isinstance(p, IntPoly):
        p = p.to_laurent()
    if not p:
        return p
    rev = p.coeffs[::-1]
    return LaurentInt(pivot - p.high, rev, p.var)
