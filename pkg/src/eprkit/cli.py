"""Command-line verifier.

Five subcommands: ``verify`` (run the whole suite, emit a canonical JSON or
Markdown report, exit 0/1 on pass/fail), ``expect`` (exact singlet mean and
both probability conventions for an expression), ``triples`` (deterministic
listing of the basic sets, optionally diffed against the published list),
``peres`` (the 16-row classical assignment table), and ``eval`` (canonical
form of an expression).  Exit code 2 signals a usage or internal error.
"""

from __future__ import annotations

import argparse
import sys

from .epr import classical_assignment_search, constraint_flags, all_assignments, \
    run_full_report
from .exprparse import ExprError, parse_expr, to_element
from .singlet import NotAnInvolutionError, build_singlet
from .triples import diff_with_paper_list, enumerate_basic_triples


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eprkit",
        description="Exact verifier for the two-site singlet identity suite.",
        epilog="Division is not part of the expression grammar; to divide by "
               "i, multiply by -i (for example E13*E01*-i).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run every check and report")
    p_verify.add_argument("--format", choices=("json", "md"), default="json")
    p_verify.add_argument("--out", metavar="PATH",
                          help="write the report here instead of stdout")
    p_verify.add_argument("--inject-fault", action="store_true",
                          help="corrupt the singlet construction first "
                               "(self-test of the failure path)")

    p_expect = sub.add_parser(
        "expect", help="exact singlet mean and outcome probabilities")
    p_expect.add_argument("expr")
    p_expect.add_argument("--projector", action="store_true",
                          help="make the psi symbol denote -psi")

    p_triples = sub.add_parser("triples", help="list the basic sets")
    p_triples.add_argument("--diff-paper", action="store_true",
                           help="append the diff against the published list")

    sub.add_parser("peres", help="print the 16-case assignment table")

    p_eval = sub.add_parser("eval", help="print the canonical element")
    p_eval.add_argument("expr")
    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_full_report(fault="corrupt-singlet" if args.inject_fault else None)
    text = report.to_json() if args.format == "json" else report.to_markdown()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report.overall == "pass":
        return 0
    print("failed checks: " + "; ".join(report.failing_names() or ["(structural)"]),
          file=sys.stderr)
    return 1


def _cmd_expect(args: argparse.Namespace) -> int:
    s = build_singlet()
    tree = parse_expr(args.expr)
    el = to_element(tree, psi=s.projector if args.projector else s.psi)
    if el.arity != 2:
        print("expect needs a two-site expression", file=sys.stderr)
        return 2
    print(f"mean: {s.expectation(el)}")
    try:
        born = s.outcome_probabilities(el)
        literal = s.half_plus_mean_probabilities(el)
        print(f"p(+1) = {born[0]}, p(-1) = {born[1]}   [born]")
        print(f"p(+1) = {literal[0]}, p(-1) = {literal[1]}   [half-plus-mean]")
    except NotAnInvolutionError:
        print("probabilities: undefined (expression squared is not the identity)")
    return 0


def _cmd_triples(args: argparse.Namespace) -> int:
    found = enumerate_basic_triples()
    for t in found:
        cyc = ", ".join(w.name for w in t.cyclic)
        print(f"{t}  cycle ({cyc})")
    if args.diff_paper:
        diff = diff_with_paper_list(found)
        print()
        print(f"enumerated: {diff.found_count}")
        print("found but not in the published list:")
        for t in diff.missing_from_paper:
            print(f"  {t}")
        print("listed but not found:")
        if diff.extra_in_paper:
            for ws in diff.extra_in_paper:
                print("  (" + ", ".join(w.name for w in ws) + ")")
        else:
            print("  none")
    return 0


def _cmd_peres(_: argparse.Namespace) -> int:
    print("m(E01) m(E10) m(E02) m(E20) | opposite_x opposite_y opposite_products | all")
    satisfying = 0
    for a in all_assignments():
        flags = constraint_flags(a)
        good = all(flags.values())
        satisfying += good
        print(f"{a.m01:+6d} {a.m10:+6d} {a.m02:+6d} {a.m20:+6d} |"
              f" {str(flags['opposite_x']):10} {str(flags['opposite_y']):10}"
              f" {str(flags['opposite_products']):17} | {'yes' if good else 'no'}")
    relaxed = len(classical_assignment_search(("opposite_x", "opposite_y")))
    print()
    print(f"satisfying all constraints: {satisfying} of 16")
    print(f"satisfying all but the product constraint: {relaxed} of 16")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    tree = parse_expr(args.expr)
    needs_psi = "psi" in args.expr
    psi = build_singlet().psi if needs_psi else None
    print(to_element(tree, psi=psi))
    return 0


_HANDLERS = {
    "verify": _cmd_verify,
    "expect": _cmd_expect,
    "triples": _cmd_triples,
    "peres": _cmd_peres,
    "eval": _cmd_eval,
}


def _separate_expression(argv: list[str]) -> list[str]:
    """Let expressions beginning with '-' reach the expr positional.

    Without this, argparse reads "-i*E13*E01" as an option.  Flags of the
    two expression commands are hoisted in front of a '--' separator.
    """
    if not argv or argv[0] not in ("eval", "expect") or "--" in argv:
        return argv
    known_flags = {"--projector", "-h", "--help"}
    rest = argv[1:]
    flags = [a for a in rest if a in known_flags]
    positionals = [a for a in rest if a not in known_flags]
    return [argv[0], *flags, "--", *positionals]


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_separate_expression(
        list(sys.argv[1:]) if argv is None else list(argv)))
    try:
        return _HANDLERS[args.command](args)
    except ExprError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - exit code 2 contract
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
