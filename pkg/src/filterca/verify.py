"""Property suites behind ``filterca verify``.

Each suite checks a family of identities on seeded random (or exhaustive)
states and returns one :class:`PropertyResult` per identity.  The first
failing state is kept as a counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import invariants, jost, lax
from .evolution import RuleForm, evolve, reverse_step, step, sweep
from .lattice import CaState, islands, support
from .sampling import all_states, random_island, random_multi_island, random_support

__all__ = ["PropertyResult", "SUITES", "run_suite", "run"]


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failed: int = 0
    counterexample: CaState | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, state: CaState, ok: bool, detail: str = "") -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = state
                self.detail = detail

    def line(self) -> str:
        status = "pass" if self.passed else f"FAIL ({self.failed} failing)"
        return f"{self.name}: {self.checked} checked, {status}"


def _check(result: PropertyResult, state: CaState, fn: Callable[[], bool]) -> None:
    try:
        ok = bool(fn())
        detail = ""
    except ArithmeticError as exc:
        ok, detail = False, str(exc)
    result.record(state, ok, detail)


def _borders(state: CaState) -> list[tuple[int, int]]:
    return [(i.k1, i.kN) for i in islands(state)]


def evolution_suite(rng: random.Random, cases: int, max_width: int) -> list[PropertyResult]:
    equiv = PropertyResult("rule forms agree")
    borders = PropertyResult("island borders conserved")
    rev = PropertyResult("reverse_step inverts step")
    indep = PropertyResult("islands evolve independently")
    for s in all_states(max_width):
        nxt = step(s)
        _check(equiv, s, lambda: nxt == step(s, RuleForm.EXACT))
        _check(borders, s, lambda: _borders(nxt) == _borders(s))
        _check(rev, s, lambda: reverse_step(nxt) == s and step(reverse_step(s)) == s)
        _check(indep, s, lambda: nxt == CaState(s.offset, sweep(s.cells)))
    for _ in range(cases):
        s = random_multi_island(rng, max_width, count=rng.randint(2, 3))
        _check(indep, s, lambda: step(s) == CaState(s.offset, sweep(s.cells)))
    return [equiv, borders, rev, indep]


def jost_suite(rng: random.Random, cases: int, max_width: int) -> list[PropertyResult]:
    triple = PropertyResult("sweep = closed form = product")
    integral = PropertyResult("integral equation")
    residual = PropertyResult("recursion residual exact and mod 2")
    asym = PropertyResult("z-coefficient counts units")
    sums = PropertyResult("measure sum rules")
    recip = PropertyResult("self-reciprocity")
    for _ in range(cases):
        s = random_support(rng)
        lo, hi = s.k1 - 5, s.kN + 2
        table = jost.jost_sweep(s, lo)
        ints = jost.jost_integral(s, lo)
        ms = range(lo, hi + 1)
        _check(triple, s, lambda: all(table[m] == jost.jost_closed(s, m) == jost.jost_product(s, m) for m in ms))
        _check(integral, s, lambda: all(ints[m] == table[m] for m in range(lo, s.kN + 1)))
        _check(residual, s, lambda: lax.schrodinger_residual_mod2(s, table) and all(
            not jost.recursion_residual(s, table[m - 1], table[m], table[m + 1], m) for m in range(lo + 1, hi + 1)))
        _check(asym, s, lambda: all(
            table[m][1] == sum(1 for k in support(s) if k > m)
            and (table[m - 1] - table[m])[1] == s[m] for m in range(lo + 1, hi + 1)))
        _check(sums, s, lambda: all(jost.sum_rules_check(s, m) for m in ms))
        _check(recip, s, lambda: all(table[m].is_palindrome(s.kN - m) for m in range(lo, s.kN + 1)))
    return [triple, integral, residual, asym, sums, recip]


def lax_suite(rng: random.Random, cases: int, max_width: int) -> list[PropertyResult]:
    ident = PropertyResult("Lax identity mod 2")
    transport = PropertyResult("Jost transport mod 2")
    spectral = PropertyResult("L psi = 0 mod 2")
    for _ in range(cases):
        s = random_island(rng, max_width)
        _check(ident, s, lambda: lax.verify_lax(s).passed)
        _check(transport, s, lambda: lax.jost_transport_check(s))
        _check(spectral, s, lambda: lax.spectral_residual_mod2(s, jost.jost_sweep(s, s.k1 - 4)))
    return [ident, transport, spectral]


def invariants_suite(rng: random.Random, cases: int, max_width: int, steps: int = 20) -> list[PropertyResult]:
    conserved = PropertyResult("integrals conserved")
    f2t = PropertyResult("f2 transport")
    mod2 = PropertyResult("single-island mod 2 form")
    recon = PropertyResult("potential from f2")
    for _ in range(cases):
        s = random_island(rng, max_width)
        _check(conserved, s, lambda: invariants.check_trajectory(evolve(s, steps)).passed)
        _check(f2t, s, lambda: invariants.f2_transport_check(s))
        window = range(s.k1 - 2, s.kN + 1)
        _check(mod2, s, lambda: all(jost.jost_mod2_island(s, m) == jost.jost_closed(s, m).mod2() for m in window))
        _check(recon, s, lambda: jost.reconstruct_potential(
            jost.f2_profile(s, s.k1 - 3, s.kN), s.k1 - 2, s.kN) == s)
    return [conserved, f2t, mod2, recon]


SUITES = {
    "evolution": evolution_suite,
    "jost": jost_suite,
    "lax": lax_suite,
    "invariants": invariants_suite,
}


def run_suite(name: str, seed: int, cases: int, max_width: int) -> list[PropertyResult]:
    rng = random.Random(f"{name}:{seed}")
    return SUITES[name](rng, cases, max_width)


def run(names: Iterable[str], seed: int, cases: int, max_width: int) -> list[tuple[str, PropertyResult]]:
    out = []
    for name in names:
        out.extend((name, r) for r in run_suite(name, seed, cases, max_width))
    return out
