"""Command-line front end.

Subcommands: evolve, render, verify, census, jost.  Exit codes are 0 on
success, 1 when a check fails and 2 for usage, parse or I/O errors.

Every subcommand accepts ``--manifest FILE`` with ``key=value`` lines that
supply option values (flags given on the command line win) and
``--save-manifest FILE`` to record the effective parameters of a run.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from . import verify as verify_mod
from .evolution import RuleForm, evolve, step
from .invariants import InvariantRecord, invariant_record, single_islands
from .jost import PreconditionError, f_measures, jost_closed, jost_mod2_island, jost_product, jost_sweep
from .lattice import CaState, StateParseError, parse_state, support

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CENSUS_MAX_WIDTH = 24


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    """Parameters of one run as ``key=value`` pairs."""

    params: dict[str, str]

    @classmethod
    def parse(cls, text: str, allowed: Sequence[str]) -> "RunManifest":
        params = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if not sep:
                raise UsageError(f"manifest line {lineno}: expected key=value")
            if key not in allowed:
                raise UsageError(f"manifest line {lineno}: unknown key {key!r}")
            params[key] = value.strip()
        return cls(params)

    def format(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in sorted(self.params.items()))


# --- helpers -----------------------------------------------------------------


def _read_state(path: str) -> CaState:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="ascii") as fh:
                text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    for line in text.splitlines():
        if line.strip():
            try:
                return parse_state(line)
            except StateParseError as exc:
                raise UsageError(f"{path}: {exc}") from None
    raise UsageError(f"{path}: no state line found")


def _open_out(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    try:
        return open(path, "w", encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def render_rows(states: Sequence[CaState], glyphs: str = ".#", margin: int = 3) -> list[str]:
    """One text row per state over a common column range; time runs downward."""
    sites = [k for s in states for k in support(s)]
    lo, hi = (min(sites), max(sites)) if sites else (0, 0)
    cols = range(lo - margin, hi + margin + 1)
    return ["".join(glyphs[s[n]] for n in cols) for s in states]


def census_rows(max_width: int) -> list[tuple[CaState, int, str, InvariantRecord]]:
    """(island, period, orbit label, invariants) for every island up to max_width."""
    rows = []
    for width in range(1, max_width + 1):
        bound = max(1, 2 ** max(width - 2, 0))
        for s in single_islands(width):
            orbit = [s]
            cur = step(s)
            while cur != s:
                orbit.append(cur)
                if len(orbit) > bound:
                    raise ArithmeticError(f"orbit of {s} did not close within {bound} steps")
                cur = step(cur)
            recs = [invariant_record(o)[0] for o in orbit]
            key = (recs[0].k1, recs[0].kN, recs[0].f2_k1)
            if any((r.k1, r.kN, r.f2_k1) != key for r in recs):
                raise ArithmeticError(f"orbit of {s} mixes invariant classes")
            label = min("".join(map(str, o.cells)) for o in orbit)
            rows.append((s, len(orbit), label, recs[0]))
    rows.sort(key=lambda r: (r[0].width, "".join(map(str, r[0].cells))))
    return rows


# --- commands ----------------------------------------------------------------


def cmd_evolve(args) -> int:
    state = _read_state(args.input)
    traj = evolve(state, args.steps, RuleForm(args.form))
    out = _open_out(args.output)
    try:
        out.write(traj.to_text())
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_render(args) -> int:
    if len(args.glyphs) != 2:
        raise UsageError("--glyphs needs exactly two characters (zero, one)")
    state = _read_state(args.input)
    traj = evolve(state, args.steps)
    for row in render_rows(traj.states, args.glyphs):
        print(row)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.cases < 1 or args.max_width < 1:
        raise UsageError("--cases and --max-width must be at least 1")
    names = list(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    results = verify_mod.run(names, args.seed, args.cases, args.max_width)
    failed = None
    for suite, res in results:
        print(f"{suite}/{res.line()}")
        if not res.passed and failed is None:
            failed = res
    if failed is not None:
        print(f"counterexample ({failed.name}): {failed.counterexample}")
        if failed.detail:
            print(f"detail: {failed.detail}")
        return EXIT_FAIL
    print("all properties pass")
    return EXIT_OK


def cmd_census(args) -> int:
    if not 1 <= args.max_width <= CENSUS_MAX_WIDTH:
        raise UsageError(f"--max-width must lie in 1..{CENSUS_MAX_WIDTH}")
    print("pattern width period f2 parity xk1 orbit")
    for s, period, label, rec in census_rows(args.max_width):
        bits = "".join(map(str, s.cells))
        print(f"{bits} {s.width} {period} {rec.f2_k1} {rec.n_parity} {rec.x_k1_mod2} {label}")
    return EXIT_OK


def cmd_jost(args) -> int:
    state = _read_state(args.input)
    m = args.site
    x = jost_closed(state, m)
    sweep_value = jost_sweep(state, min(m, state.kN + 1) if state else m)[m]
    if x != sweep_value or x != jost_product(state, m):
        print(f"closed form {x} disagrees with sweep {sweep_value}", file=sys.stderr)
        return EXIT_FAIL
    lines = [str(x)]
    if args.mod2:
        try:
            lines.append(str(jost_mod2_island(state, m)))
        except PreconditionError as exc:
            raise UsageError(f"--mod2: {exc}") from None
    if args.measures:
        lines.append(str(f_measures(state, m)))
    print("\n".join(lines))
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="filterca", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--manifest", help="key=value file supplying option values")
        p.add_argument("--save-manifest", help="write the effective parameters here")
        return p

    p = add("evolve", cmd_evolve, "write the trajectory, one state per line")
    p.add_argument("input", nargs="?", help="state file ('-' for stdin)")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--form", choices=[f.value for f in RuleForm], default="mod2")
    p.add_argument("--output")

    p = add("render", cmd_render, "draw the trajectory as a text grid")
    p.add_argument("input", nargs="?")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--glyphs", default=".#")

    p = add("verify", cmd_verify, "run property suites")
    p.add_argument("--suite", choices=["all", *verify_mod.SUITES], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-width", type=int, default=12)

    p = add("census", cmd_census, "orbit periods of all islands up to a width")
    p.add_argument("--max-width", type=int, default=8)

    p = add("jost", cmd_jost, "print the Jost solution at a site")
    p.add_argument("input", nargs="?")
    p.add_argument("--site", type=int, required=False)
    p.add_argument("--mod2", action="store_true")
    p.add_argument("--measures", action="store_true")
    return parser


_INTERNAL = {"func", "command", "manifest", "save_manifest", "help"}


def _option_actions(parser: argparse.ArgumentParser, command: str):
    subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    sp = subparsers.choices[command]
    return {a.dest: a for a in sp._actions if a.dest not in _INTERNAL}, sp


def _apply_manifest(parser, args, argv) -> argparse.Namespace:
    actions, sp = _option_actions(parser, args.command)
    with open(args.manifest, encoding="utf-8") as fh:
        manifest = RunManifest.parse(fh.read(), list(actions))
    defaults = {}
    for key, value in manifest.params.items():
        action = actions[key]
        if isinstance(action, argparse._StoreTrueAction):
            defaults[key] = value.lower() in ("1", "true", "yes")
        elif action.type is not None:
            try:
                defaults[key] = action.type(value)
            except ValueError:
                raise UsageError(f"manifest: bad value for {key}: {value!r}") from None
        else:
            defaults[key] = value
    sp.set_defaults(**defaults)
    return parser.parse_args(argv)


def _effective_manifest(parser, args) -> RunManifest:
    actions, _ = _option_actions(parser, args.command)
    params = {}
    for dest in actions:
        value = getattr(args, dest)
        if value is not None:
            params[dest] = str(value).lower() if isinstance(value, bool) else str(value)
    return RunManifest(params)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.manifest:
            args = _apply_manifest(parser, args, argv)
        if getattr(args, "input", "") is None:
            raise UsageError("an input state file is required")
        if args.command == "jost" and args.site is None:
            raise UsageError("--site is required")
        if args.save_manifest:
            with open(args.save_manifest, "w", encoding="utf-8") as fh:
                fh.write(_effective_manifest(parser, args).format())
        return args.func(args)
    except UsageError as exc:
        print(f"filterca {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"filterca {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"filterca {args.command}: check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
