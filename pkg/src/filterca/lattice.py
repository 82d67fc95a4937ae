"""Finitely supported 0/1 states on the integer lattice.

A state is stored as an offset plus a run of bits; every site outside the run
holds 0. States are always kept in normal form: the run is either empty or
starts and ends with a 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "CaState",
    "Island",
    "StateParseError",
    "ISLAND_GAP",
    "parse_state",
    "format_state",
    "support",
    "islands",
    "reflect",
    "concat",
]

# Consecutive support sites further apart than this belong to different islands
# (three or more zeros in between).
ISLAND_GAP = 3

_OFFSET = re.compile(r"[+-]?[0-9]+")


class StateParseError(ValueError):
    """Raised for malformed state text; ``position`` is the offending byte."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at byte {position})")
        self.position = position


@dataclass(frozen=True)
class CaState:
    offset: int
    cells: tuple[int, ...]

    def __post_init__(self):
        cells = tuple(int(c) for c in self.cells)
        if any(c not in (0, 1) for c in cells):
            raise ValueError("cells must be 0 or 1")
        lo = 0
        while lo < len(cells) and cells[lo] == 0:
            lo += 1
        if lo == len(cells):
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "cells", ())
            return
        hi = len(cells)
        while cells[hi - 1] == 0:
            hi -= 1
        object.__setattr__(self, "offset", int(self.offset) + lo)
        object.__setattr__(self, "cells", cells[lo:hi])

    @classmethod
    def zero(cls) -> "CaState":
        return cls(0, ())

    @classmethod
    def from_sites(cls, sites: Iterable[int]) -> "CaState":
        """Build the state whose support is exactly ``sites``."""
        sites = sorted(set(sites))
        if not sites:
            return cls.zero()
        k1 = sites[0]
        cells = [0] * (sites[-1] - k1 + 1)
        for k in sites:
            cells[k - k1] = 1
        return cls(k1, tuple(cells))

    def __getitem__(self, n: int) -> int:
        i = n - self.offset
        if 0 <= i < len(self.cells):
            return self.cells[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self.cells)

    def __str__(self) -> str:
        return format_state(self)

    @property
    def k1(self) -> int:
        if not self.cells:
            raise ValueError("zero state has no support")
        return self.offset

    @property
    def kN(self) -> int:
        if not self.cells:
            raise ValueError("zero state has no support")
        return self.offset + len(self.cells) - 1

    @property
    def width(self) -> int:
        return len(self.cells)

    def window(self, lo: int, hi: int) -> list[int]:
        """Values q_lo, ..., q_hi (inclusive) as a list."""
        return [self[n] for n in range(lo, hi + 1)]

    def shift(self, k: int) -> "CaState":
        return CaState(self.offset + k, self.cells)


@dataclass(frozen=True)
class Island:
    """One island of a state, kept at its original position."""

    state: CaState

    @property
    def k1(self) -> int:
        return self.state.k1

    @property
    def kN(self) -> int:
        return self.state.kN


def parse_state(text: str) -> CaState:
    """Parse ``<offset>:<bits>`` or a bare ``<bits>`` string (offset 0)."""
    line = text.rstrip("\r\n")
    if ":" in line:
        head, _, bits = line.partition(":")
        if not _OFFSET.fullmatch(head):
            raise StateParseError(f"malformed offset {head!r}", 0)
        offset = int(head)
        start = len(head) + 1
    else:
        offset, bits, start = 0, line, 0
    for i, ch in enumerate(bits):
        if ch not in "01":
            raise StateParseError(f"unexpected character {ch!r}", start + i)
    return CaState(offset, tuple(int(ch) for ch in bits))


def format_state(state: CaState) -> str:
    if not state.cells:
        return "0:0"
    return f"{state.offset}:{''.join(map(str, state.cells))}"


def support(state: CaState) -> list[int]:
    """Sites carrying a 1, ascending."""
    return [state.offset + i for i, c in enumerate(state.cells) if c]


def _split_support(sites: Sequence[int]) -> Iterator[list[int]]:
    run: list[int] = []
    for k in sites:
        if run and k - run[-1] > ISLAND_GAP:
            yield run
            run = []
        run.append(k)
    if run:
        yield run


def islands(state: CaState) -> list[Island]:
    """Split the support into maximal runs whose internal gaps are at most 3."""
    return [Island(CaState.from_sites(run)) for run in _split_support(support(state))]


def concat(parts: Iterable[CaState]) -> CaState:
    """Superpose states with disjoint supports."""
    sites: list[int] = []
    for part in parts:
        sites.extend(support(part))
    if len(sites) != len(set(sites)):
        raise ValueError("parts overlap")
    return CaState.from_sites(sites)


def reflect(state: CaState) -> CaState:
    """Spatial reflection n -> -n."""
    if not state.cells:
        return state
    return CaState(-state.kN, state.cells[::-1])
