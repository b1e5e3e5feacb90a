"""Command-line interface: ``trapbit {gen,analyze,matching,counterexample,verify,bench}``.

Exit codes: 0 success, 1 bad input (parse, validation, I/O, usage),
2 verification mismatch, 3 size limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import campaign, diagram, matching
from .diagram import DiagramError
from .oracle import SizeLimitError
from .report import analyze

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2
EXIT_SIZE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _pairs(m: matching.Matching) -> str:
    return " ".join(f"{u}-{v}" for u, v in m.edges)


def cmd_gen(args) -> int:
    if args.n < 1:
        raise DiagramError(f"n must be at least 1, got {args.n}")
    d = diagram.random_diagram(args.n, args.seed)
    diagram.validate(d)
    _emit(diagram.serialize(d), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    d = diagram.read_diagram(args.path)
    report = analyze(d, polynomial=args.polynomial, witness=args.witness)
    sys.stdout.write(report.format())
    return EXIT_OK


def cmd_matching(args) -> int:
    d = diagram.read_diagram(args.path)
    greedy = matching.ghosh_pal_matching(d)
    lines = [f"greedy_cardinality: {greedy.cardinality}", f"greedy_pairs: {_pairs(greedy)}"]
    if args.audit:
        exact = matching.exact_matching(d)
        lines += [
            f"exact_cardinality: {exact.cardinality}",
            f"exact_pairs: {_pairs(exact)}",
            f"gap: {exact.cardinality - greedy.cardinality}",
        ]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_counterexample(args) -> int:
    if args.k < 0:
        raise DiagramError(f"k must be non-negative, got {args.k}")
    _emit(diagram.serialize(matching.counterexample(args.k)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    summary = campaign.verify(args.trials, args.max_n, args.seed, _fault=args.inject_fault)
    for bad in sorted(summary.mismatches, key=lambda m: m.seed):
        print(f"MISMATCH n={bad.n} seed={bad.seed}")
        for problem in bad.problems:
            print(f"  {problem}")
        print("  diagram:")
        for line in diagram.serialize(bad.diagram).splitlines():
            print(f"    {line}")
        print(f"  reproduce: trapbit gen {bad.n} --seed {bad.seed} --out case.trap"
              " && trapbit analyze case.trap --polynomial")
    status = "PASS" if summary.ok else "FAIL"
    print(f"{status}: {summary.trials} trials, {len(summary.mismatches)} mismatches"
          f" (max-n {args.max_n}, seed {args.seed})")
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def cmd_bench(args) -> int:
    rows = campaign.bench(args.sizes, args.algo, args.repeats, args.engine, args.seed)
    print("size\talgo\tmedian_seconds\talpha")
    for r in rows:
        print(f"{r.size}\t{r.algo}\t{r.median_seconds:.6f}\t{r.alpha}")
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    sizes = [int(x) for x in text.replace(",", " ").split()]
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trapbit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a random diagram")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="independent-set and vertex-cover report")
    p.add_argument("path")
    p.add_argument("--polynomial", action="store_true")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("matching", help="greedy matching, optionally audited")
    p.add_argument("path")
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=cmd_matching)

    p = sub.add_parser("counterexample", help="write a greedy-matching counterexample")
    p.add_argument("k", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("verify", help="random diagrams against brute force")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="sweep vs quadratic timing table")
    p.add_argument("--sizes", type=_sizes, default=[2**k for k in range(10, 15)],
                   help="comma separated sizes")
    p.add_argument("--algo", choices=("sweep", "quadratic", "both"), default="both")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--engine", choices=("compiled", "python"), default="compiled")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except (DiagramError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE


if __name__ == "__main__":
    sys.exit(main())
