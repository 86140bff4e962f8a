"""Command-line interface.

Exit codes: 0 when a solution is found (or a check passes), 1 for
NO-SOLUTION (or a failed check), 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import io as cio
from .coloring import MODES
from .core import ConsCheckError, Problem, is_consistent
from .oracle import DEFAULT_MAX_CANDIDATES, OracleBudget, oracle_solve
from .pacsim import simulate
from .reductions import (
    SetCoverInstance,
    parse_dimacs,
    reduce_is_to_conscheck_is,
    reduce_sat_to_2col,
    reduce_setcover_to_is,
    reduce_setcover_to_matching,
    reduce_setcover_to_path,
)
from .solvers import SOLVER_NAMES, solve

BENCH_HEADER = ["problem", "n", "t", "tneg", "k", "d", "solver", "us", "verdict"]
RANDOMIZED = {Problem.MATCHING, Problem.PATH, Problem.INDEPENDENT_SET_DEG}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _read(path: str) -> str:
    with open(path, encoding="utf-8", newline="") as fh:
        return fh.read()


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _edge_list(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        u, sep, v = tok.partition("-")
        if not sep:
            raise argparse.ArgumentTypeError(f"edge {tok!r} is not of the form u-v")
        out.append((int(u), int(v)))
    return out


def _solver_config(problem: Problem, mode: str, seed: int) -> str:
    name = SOLVER_NAMES[problem]
    return f"{name}:{mode}:seed={seed}" if problem in RANDOMIZED else name


def cmd_solve(args) -> int:
    inst = cio.parse_instance(_read(args.file))
    verdict = solve(inst, args.mode, args.seed, args.trials)
    sys.stdout.write(cio.serialize_verdict(verdict))
    return cio.exit_code(verdict)


def cmd_oracle(args) -> int:
    inst = cio.parse_instance(_read(args.file))
    verdict = oracle_solve(inst, OracleBudget(args.budget))
    sys.stdout.write(cio.serialize_verdict(verdict))
    return cio.exit_code(verdict)


def cmd_check(args) -> int:
    inst = cio.parse_instance(_read(args.file))
    verdict = cio.parse_verdict(_read(args.verdict))
    if verdict is None:
        print("consistent: n/a (NO-SOLUTION)")
        return 1
    ok = is_consistent(inst, verdict)
    print(f"consistent: {'true' if ok else 'false'}")
    return 0 if ok else 1


def _set_cover(args) -> SetCoverInstance:
    return SetCoverInstance(args.universe, tuple(frozenset(_int_list(s)) for s in args.set), args.k)


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "sat2col":
        inst = reduce_sat_to_2col(parse_dimacs(_read(args.dimacs)))
    elif kind == "sc2match":
        inst = reduce_setcover_to_matching(_set_cover(args))
    elif kind == "sc2path":
        inst = reduce_setcover_to_path(_set_cover(args), anchor_endpoints=not args.no_anchor)
    elif kind == "sc2is":
        inst = reduce_setcover_to_is(_set_cover(args))
    else:
        inst = reduce_is_to_conscheck_is(_edge_list(args.edges), args.n, args.k)
    _emit(cio.serialize_instance(inst), args.output)
    return 0


def cmd_pac(args) -> int:
    path = Path(args.scenario)
    if path.exists():
        scenario = cio.parse_scenario(_read(args.scenario))
    else:
        scenario = cio.load_bundled_scenario(args.scenario)
    report = simulate(scenario, args.eps, args.delta, args.runs, args.seed)
    _emit(report.to_csv(), args.csv)
    if args.csv:
        print(f"fraction_err_le_eps={report.fraction_within:.4f}", file=sys.stderr)
    return 0


def cmd_bench(args) -> int:
    files = sorted(Path(args.dir).glob("*.cc"), key=lambda p: p.name)
    if not files:
        print(f"no .cc files in {args.dir}", file=sys.stderr)
    rows = []
    for f in files:
        inst = cio.parse_instance(_read(str(f)))
        start = time.perf_counter_ns()
        verdict = solve(inst, args.mode, args.seed, args.trials)
        us = (time.perf_counter_ns() - start) // 1000
        rows.append([
            inst.problem.value, inst.n, inst.t, inst.t_minus,
            "" if inst.k is None else inst.k, "" if inst.d is None else inst.d,
            _solver_config(inst.problem, args.mode, args.seed), us,
            "found" if verdict is not None else "no-solution",
        ])
    out = open(args.csv, "w", newline="", encoding="utf-8") if args.csv else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(BENCH_HEADER)
        w.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="conscheck", description="Consistency checking for graph problems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_cc_opts(sp):
        sp.add_argument("--mode", choices=MODES, default="random")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=None)

    sp = sub.add_parser("solve", help="solve an instance file")
    sp.add_argument("file")
    add_cc_opts(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("oracle", help="solve by exhaustive enumeration")
    sp.add_argument("file")
    sp.add_argument("--budget", type=int, default=DEFAULT_MAX_CANDIDATES)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("check", help="verify a verdict file against an instance")
    sp.add_argument("file")
    sp.add_argument("verdict")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("gen", help="generate an instance by reduction")
    sp.add_argument("kind", choices=["sat2col", "sc2match", "sc2path", "sc2is", "is2is"])
    sp.add_argument("--dimacs", help="CNF file (sat2col)")
    sp.add_argument("--universe", type=int, help="universe size (sc2*)")
    sp.add_argument("--set", action="append", default=[], help="comma-separated subset, repeatable (sc2*)")
    sp.add_argument("--no-anchor", action="store_true", help="sc2path: omit the two endpoint-anchoring negatives")
    sp.add_argument("--n", type=int, help="vertex count (is2is)")
    sp.add_argument("--edges", default="", help="comma-separated u-v list (is2is)")
    sp.add_argument("--k", type=int, help="budget / solution size")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("pac", help="run the PAC simulation on a scenario")
    sp.add_argument("scenario", help="scenario file or bundled scenario name")
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--delta", type=float, required=True)
    sp.add_argument("--runs", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--csv", help="write the report here instead of stdout")
    sp.set_defaults(func=cmd_pac)

    sp = sub.add_parser("bench", help="time the solver on every .cc file in a directory")
    sp.add_argument("dir")
    sp.add_argument("--csv")
    add_cc_opts(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def _validate_gen(args, parser):
    need = {
        "sat2col": ["dimacs"],
        "sc2match": ["universe", "k"],
        "sc2path": ["universe", "k"],
        "sc2is": ["universe", "k"],
        "is2is": ["n", "k"],
    }[args.kind]
    missing = [f"--{x}" for x in need if getattr(args, x) is None]
    if missing:
        parser.error(f"gen {args.kind} requires {', '.join(missing)}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "gen":
            _validate_gen(args, parser)
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ConsCheckError, ValueError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
