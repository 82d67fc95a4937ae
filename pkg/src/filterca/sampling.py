"""Seeded random states for property checks."""

from __future__ import annotations

import random

from .lattice import ISLAND_GAP, CaState, concat

__all__ = ["random_island", "random_support", "random_multi_island", "all_states"]


def random_island(rng: random.Random, max_width: int, offset_range: int = 5) -> CaState:
    """Uniform over single islands for a width drawn uniformly from 1..max_width."""
    width = rng.randint(1, max_width)
    k1 = rng.randint(-offset_range, offset_range)
    if width == 1:
        return CaState(k1, (1,))
    while True:
        cells = (1, *(rng.randint(0, 1) for _ in range(width - 2)), 1)
        if "000" not in "".join(map(str, cells)):
            return CaState(k1, cells)


def random_support(rng: random.Random, max_points: int = 10, max_gap: int = 6, offset_range: int = 5) -> CaState:
    """N units at uniformly random gaps 1..max_gap; may span several islands."""
    n = rng.randint(1, max_points)
    k = rng.randint(-offset_range, offset_range)
    sites = [k]
    for _ in range(n - 1):
        k += rng.randint(1, max_gap)
        sites.append(k)
    return CaState.from_sites(sites)


def random_multi_island(rng: random.Random, max_width: int, count: int = 2, max_extra_gap: int = 4) -> CaState:
    """``count`` islands separated by support gaps of at least 4."""
    parts = []
    pos = rng.randint(-5, 5)
    for _ in range(count):
        isl = random_island(rng, max_width, offset_range=0)
        parts.append(isl.shift(pos))
        pos += isl.width + ISLAND_GAP + rng.randint(0, max_extra_gap)
    return concat(parts)


def all_states(width: int):
    """Every state whose support lies in [0, width - 1]."""
    for bits in range(1 << width):
        yield CaState(0, tuple((bits >> i) & 1 for i in range(width)))
