"""Command-line front end.

Subcommands::

    tokenslide solve      --class auto --in inst.txt [--out moves.txt]
    tokenslide verify     --in inst.txt --seq moves.txt
    tokenslide oracle     --in inst.txt [--budget N]
    tokenslide gen        --class caterpillar --n 12 --k 3 --seed 7
    tokenslide crosscheck --class proper --n 6 [--count N] [--jobs J]

Exit codes: 0 for YES or success, 1 for NO or any mismatch, 2 for usage,
parse, or input errors.  Identical invocations produce identical bytes;
the only randomness is the explicit seed.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext

from .crosscheck import CLASSES, crosscheck
from .caterpillar import solve_caterpillar
from .generate import GenerationError, gen_instance
from .graphs import ReconfigSequence, validate_sequence
from .instances import (
    Instance,
    InstanceFormatError,
    parse_instance,
    parse_sequence,
    serialize_instance,
    serialize_sequence,
)
from .intervals import GraphClass
from .oracle import DEFAULT_STATE_CAP, bfs
from .proper import solve_proper_components
from .results import SolveResult, SolverInputError
from .trivially_perfect import solve_tp


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _open_out(path: str | None):
    if path is None or path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def _fail(message: str) -> int:
    print(message, file=sys.stderr)
    return 2


def _pick_class(inst: Instance, requested: str) -> str:
    """Resolve --class auto by the cheapest structural checks first."""
    if requested != "auto":
        return requested
    if inst.rep is not None:
        shape = inst.rep.classify()
        if shape is GraphClass.PROPER:
            return "proper"
        if shape is GraphClass.TRIVIALLY_PERFECT:
            return "tp"
    return "caterpillar"


def _run_class_solver(cls: str, inst: Instance, auto: bool) -> SolveResult:
    if cls in ("proper", "tp"):
        if inst.rep is None:
            raise SolverInputError(
                "UNSUPPORTED_CLASS",
                f"the {cls} solver needs an interval representation, "
                "not a bare edge list",
            )
        if cls == "proper":
            return solve_proper_components(inst.rep, inst.blue, inst.red)
        return solve_tp(inst.rep, inst.blue, inst.red)
    try:
        return solve_caterpillar(inst.graph, inst.blue, inst.red)
    except SolverInputError as err:
        if auto and err.kind in ("NOT_CATERPILLAR", "CYCLIC"):
            raise SolverInputError(
                "UNSUPPORTED_CLASS",
                "instance fits none of: proper interval, trivially "
                "perfect, caterpillar",
            ) from err
        raise


def _print_no(res: SolveResult, out: TextIO) -> None:
    tail = "".join(f" {w}" for w in res.witness)
    print(f"NO {res.reason}{tail}", file=out)


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        inst = parse_instance(_read(args.inp))
    except InstanceFormatError as err:
        return _fail(f"ERROR PARSE: {err}")
    cls = _pick_class(inst, args.cls)
    try:
        res = _run_class_solver(cls, inst, args.cls == "auto")
    except SolverInputError as err:
        return _fail(f"ERROR {err.kind}: {err}")
    with _open_out(args.out) as out:
        if res.yes:
            print("YES", file=out)
            seq = ReconfigSequence(tuple(sorted(inst.blue)), res.moves)
            out.write(serialize_sequence(seq))
            return 0
        _print_no(res, out)
    return 1


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        inst = parse_instance(_read(args.inp))
        text = _read(args.seq)
        # tolerate sequences saved straight from `solve` output
        lines = text.splitlines()
        if lines and lines[0].strip() == "YES":
            text = "\n".join(lines[1:])
        seq = parse_sequence(text, inst.blue)
    except InstanceFormatError as err:
        return _fail(f"ERROR PARSE: {err}")
    check = validate_sequence(inst.graph, inst.blue, inst.red, seq)
    with _open_out(args.out) as out:
        if check.ok:
            print("OK", file=out)
            return 0
        print(f"INVALID step={check.step} reason={check.reason}", file=out)
    return 1


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        inst = parse_instance(_read(args.inp))
    except InstanceFormatError as err:
        return _fail(f"ERROR PARSE: {err}")
    try:
        res = bfs(inst.graph, inst.blue, inst.red, cap=args.budget)
    except ValueError as err:
        return _fail(f"ERROR INPUT: {err}")
    with _open_out(args.out) as out:
        if res.status == "REACHABLE":
            print("YES", file=out)
            out.write(serialize_sequence(res.sequence))
            print(f"STATES {res.states_explored}", file=out)
            return 0
        if res.status == "UNREACHABLE":
            print("NO", file=out)
            print(f"STATES {res.states_explored}", file=out)
            return 1
        print("CAP_EXCEEDED", file=out)
        print(f"STATES {res.states_explored}", file=out)
    return 2


def cmd_gen(args: argparse.Namespace) -> int:
    if args.cls == "auto":
        return _fail("ERROR USAGE: gen needs a concrete --class")
    try:
        inst = gen_instance(args.cls, args.n, args.k, seed=args.seed)
    except GenerationError as err:
        return _fail(f"ERROR {err}")
    with _open_out(args.out) as out:
        out.write(serialize_instance(inst))
    return 0


def cmd_crosscheck(args: argparse.Namespace) -> int:
    if args.cls == "auto":
        return _fail("ERROR USAGE: crosscheck needs a concrete --class")
    report = crosscheck(
        args.cls,
        args.n,
        count=args.count,
        seed=args.seed,
        k_max=args.k,
        jobs=args.jobs,
        cap=args.budget,
    )
    with _open_out(args.out) as out:
        out.write(report.render())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokenslide",
        description="shortest sliding-token reconfiguration solvers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--in", dest="inp", metavar="PATH", default=None,
                       help="instance file (default stdin)")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="output file (default stdout)")

    p = sub.add_parser("solve", help="run the class solver")
    common(p)
    p.add_argument("--class", dest="cls", choices=("auto",) + CLASSES,
                   default="auto")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", help="replay a move sequence")
    common(p)
    p.add_argument("--seq", metavar="PATH", required=True,
                   help="sequence file to check")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle", help="breadth-first search baseline")
    common(p)
    p.add_argument("--budget", type=int, default=DEFAULT_STATE_CAP,
                   metavar="N", help="state exploration cap")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("gen", help="generate a random instance")
    common(p)
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--k", type=int, required=True, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("crosscheck", help="sweep solver against the oracle")
    common(p)
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--n", type=int, required=True, metavar="N",
                   help="largest vertex count")
    p.add_argument("--k", type=int, default=3, metavar="K",
                   help="largest token count")
    p.add_argument("--count", type=int, default=None, metavar="N",
                   help="random instances to draw (default: exhaustive)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_STATE_CAP,
                   metavar="N", help="oracle state cap per instance")
    p.set_defaults(fn=cmd_crosscheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
