"""Command-line interface: ``ufc witness | op | semigroup | atoms | ocfp | verify``.

Exit status is 0 when everything checked passes, 1 when an asserted check
fails, and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from io import StringIO

from . import atoms, io, ops, transforms, verify
from .errors import AutomatonError
from .fa import Dfa, complexity, is_minimal, minimize
from .witness import make_witness, ocfp_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, ...]:
    """``"3..6"``, ``"3-6"`` or ``"4"`` to a tuple of integers."""
    for sep in ("..", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            break
    else:
        lo = hi = text
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if lo < 3 or hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 3 <= low <= high")
    return tuple(range(lo, hi + 1))


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default=argparse.SUPPRESS,
                        help="report format (default md)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the result here")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress summary lines")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="ufc", parents=[common],
                                     description="State complexity laboratory for "
                                                 "deterministic union-free languages.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", parents=[common], help="write a witness DFA D_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dialect", default="a,b,c,d")

    p = sub.add_parser("op", parents=[common], help="apply an operation to automaton files")
    p.add_argument("name", choices=("reverse", "star", "concat", "union", "intersect",
                                    "diff", "symdiff"))
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--in2", dest="input2")
    p.add_argument("--mode", choices=(ops.RESTRICTED, ops.UNRESTRICTED), default=ops.RESTRICTED)

    p = sub.add_parser("semigroup", parents=[common], help="syntactic semigroup size")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--cap", type=int)

    p = sub.add_parser("atoms", parents=[common], help="atoms and their complexities")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--set", dest="subset",
                   help="comma-separated states S; prints the minimal DFA of A_S")
    p.add_argument("--max-n", type=int, default=atoms.DEFAULT_MAX_N)

    p = sub.add_parser("ocfp", parents=[common], help="one-cycle-free-path check")
    p.add_argument("--in", dest="input", required=True)

    p = sub.add_parser("verify", parents=[common], help="run the bound-checking grid")
    p.add_argument("--m", type=parse_range, default=(3, 4, 5, 6), help="m range, e.g. 3..6")
    p.add_argument("--n", type=parse_range, default=(3, 4, 5, 6), help="n range, e.g. 3..6")
    p.add_argument("--items", default=",".join(verify.ITEMS),
                   help="comma-separated items from 1-7")
    p.add_argument("--max-semigroup-n", type=int, default=7)
    p.add_argument("--max-atoms-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include elapsed_ms per cell")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "md")
    args.out = getattr(args, "out", None)
    args.quiet = getattr(args, "quiet", False)
    try:
        return COMMANDS[args.command](args)
    except (AutomatonError, UsageError, ValueError, OSError) as exc:
        print(f"ufc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _say(args, text: str) -> None:
    # summaries go to stderr when stdout carries the payload
    if not args.quiet:
        print(text, file=sys.stdout if args.out else sys.stderr)


def _load_dfa(path) -> Dfa:
    a = io.load(path)
    if not isinstance(a, Dfa):
        raise UsageError(f"{path}: expected a DFA, got an NFA")
    return a


def cmd_witness(args) -> int:
    d = make_witness(args.n, args.dialect)
    _emit(args, io.dumps(d))
    minimal = is_minimal(d)
    check = ocfp_check(d)
    if args.format == "json":
        _say(args, json.dumps({"n": args.n, "dialect": args.dialect, "states": d.state_count,
                               "alphabet": list(d.alphabet), "minimal": minimal,
                               "ocfp": check.ok}))
    else:
        _say(args, f"D_{args.n}({args.dialect}): {d.state_count} states, alphabet "
                   f"{{{','.join(d.alphabet)}}}, complexity {complexity(d)}, "
                   f"minimal: {'yes' if minimal else 'no'}, ocfp: {check}")
    return EXIT_OK


def cmd_op(args) -> int:
    d1 = _load_dfa(args.input)
    if args.name in ("reverse", "star"):
        if args.input2:
            raise UsageError(f"{args.name} takes a single input")
        result = ops.reverse(d1) if args.name == "reverse" else ops.star(d1)
    else:
        if not args.input2:
            raise UsageError(f"{args.name} needs --in2")
        d2 = _load_dfa(args.input2)
        if args.name == "concat":
            result = ops.concat(d1, d2, args.mode)
        else:
            result = ops.boolean(d1, d2, ops.BOOL_OPS[args.name], args.mode)
    if args.out:
        io.save(result.result, args.out)
    if args.format == "json":
        line = json.dumps({"operation": result.construction, "complexity": result.complexity,
                           "raw": result.raw_states, "bound": result.bound,
                           "within_bound": result.within_bound})
    else:
        line = f"complexity {result.complexity} (raw {result.raw_states})"
    if not args.quiet:
        print(line)
    return EXIT_OK


def cmd_semigroup(args) -> int:
    d = minimize(_load_dfa(args.input))
    report = transforms.transition_semigroup_size(d, args.cap)
    if args.format == "json":
        text = json.dumps(report.to_dict()) + "\n"
    elif report.exceeded:
        text = f"exceeded cap {report.cap} (at least {report.size})\n"
    else:
        text = f"{report.size}\n"
    _emit(args, text)
    return EXIT_OK


def cmd_atoms(args) -> int:
    d = _load_dfa(args.input)
    if not is_minimal(d):
        raise UsageError("atoms need a minimal complete DFA; minimize the input first")
    if args.subset is not None:
        states = [int(x) for x in args.subset.split(",") if x.strip()]
        result = atoms.atom(d, states)
        if result is None:
            _say(args, f"A_{{{','.join(map(str, states))}}} is empty")
            return EXIT_OK
        if args.out:
            io.save(result, args.out)
        print(json.dumps({"S": states, "complexity": result.state_count})
              if args.format == "json" else f"complexity {result.state_count}")
        return EXIT_OK
    report = atoms.atoms_report(d, max_n=args.max_n)
    _emit(args, render_atoms(report, args.format))
    return EXIT_OK


def render_atoms(report: atoms.AtomReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    header = ("S", "nonempty", "complexity", "formula", "match")
    records = [("{" + " ".join(map(str, row.states)) + "}", str(row.nonempty).lower(),
                "-" if row.complexity is None else str(row.complexity), str(row.formula),
                "yes" if row.meets_formula else "no") for row in report.rows]
    if fmt == "csv":
        buf = StringIO()
        csv.writer(buf, lineterminator="\n").writerows([header, *records])
        return buf.getvalue()
    lines = ["| " + " | ".join(header) + " |", "|---" * len(header) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in records]
    lines += ["", f"atoms: {report.atom_count}"]
    return "\n".join(lines) + "\n"


def cmd_ocfp(args) -> int:
    result = ocfp_check(_load_dfa(args.input))
    if args.format == "json":
        print(json.dumps({"ok": result.ok, "violations": list(result.violations)}))
    else:
        print(result)
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    items = frozenset(x.strip() for x in args.items.split(",") if x.strip())
    grid = verify.GridSpec(args.m, args.n, items, args.max_semigroup_n, args.max_atoms_n)
    rows = verify.run(grid, jobs=args.jobs)
    _emit(args, verify.render(rows, args.format, timings=args.timings))
    failed = verify.failures(rows)
    if failed and not args.quiet:
        for row in failed:
            print(f"FAIL item {row.item} {row.operation} m={row.m} n={row.n}: "
                  f"measured {row.measured}, expected {row.expected}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "witness": cmd_witness,
    "op": cmd_op,
    "semigroup": cmd_semigroup,
    "atoms": cmd_atoms,
    "ocfp": cmd_ocfp,
    "verify": cmd_verify,
}


if __name__ == "__main__":
    sys.exit(main())
