"""Command-line front end.

Exit codes: 0 ok (or property holds), 1 property violated (verify only),
2 parse error, 3 invalid fingerprint, 4 k out of range, 5 resource limit.
Data goes to stdout, diagnostics to stderr. Resource caps default to the
values in :mod:`palfp.config` (environment overrides apply) and can be set
per run with ``--max-string-n``, ``--max-verify-n`` and ``--max-vertices``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from itertools import product

from palfp import constraints, extremal, reconstruct, structure
from palfp.config import Limits
from palfp.errors import (
    DuplicateCenter,
    DuplicatePair,
    FingerprintSyntaxError,
    InvalidCharacter,
    InvalidFingerprint,
    OutOfRange,
    RangeError,
    ResourceLimit,
)
from palfp.strings import (
    Fingerprint,
    fingerprint_of,
    parse_fingerprint,
    parse_text,
    serialize_fingerprint,
    serialize_text,
)

EXIT_OK, EXIT_VIOLATED, EXIT_PARSE, EXIT_INVALID, EXIT_RANGE, EXIT_RESOURCE = range(6)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit_text(text, mode: str, out) -> None:
    if mode == "auto" and not text.fits_letters():
        print("# alphabet exceeds 26 symbols; writing int-tokens", file=sys.stderr)
    out.write(serialize_text(text, mode) + "\n")


def _fingerprint_arg(args) -> Fingerprint:
    return parse_fingerprint(_read(args.input))


def cmd_fingerprint(args, out) -> int:
    text = parse_text(_read(args.input), args.text_format)
    out.write(serialize_fingerprint(fingerprint_of(text)))
    return EXIT_OK


def cmd_reconstruct(args, out) -> int:
    f = _fingerprint_arg(args)
    if args.k is None:
        text = reconstruct.greedy_reconstruct(f)
    else:
        text = reconstruct.reconstruct_exact_k(f, args.k)
    print(f"# symbols: {text.alphabet_size}", file=sys.stderr)
    _emit_text(text, args.output, out)
    return EXIT_OK


def cmd_validate(args, out) -> int:
    report = reconstruct.validate(_fingerprint_arg(args))
    out.write(report.describe() + "\n")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_sigma(args, out) -> int:
    out.write(f"{reconstruct.sigma(_fingerprint_arg(args))}\n")
    return EXIT_OK


def cmd_graph(args, out) -> int:
    f = _fingerprint_arg(args)
    g = constraints.build_restriction_graph(f)
    coloring = None
    if args.color:
        if g.self_loop is not None:
            raise InvalidFingerprint(reconstruct.validate(f))
        coloring = reconstruct.greedy_coloring(g)
    elif g.self_loop is not None:
        print(f"# self-loop witness {g.self_loop.positions}", file=sys.stderr)
    out.write(constraints.export_dot(g, coloring))
    return EXIT_OK


def cmd_islands(args, out) -> int:
    f = _fingerprint_arg(args)
    for isl in structure.islands(f):
        out.write(f"{isl}\n")
    return EXIT_OK


def cmd_crossing(args, out) -> int:
    f = _fingerprint_arg(args)
    for (s1, e1), (s2, e2) in structure.crossing_pairs(f):
        out.write(f"({s1},{e1}) x ({s2},{e2})\n")
    return EXIT_OK


def cmd_optimal(args, out) -> int:
    _emit_text(extremal.optimal_string(args.k, args.limits), args.output, out)
    return EXIT_OK


def cmd_zimin(args, out) -> int:
    _emit_text(extremal.zimin(args.k, args.limits), args.output, out)
    return EXIT_OK


def _distinct_center_subsets(n: int):
    by_center: dict[int, list[tuple[int, int]]] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            by_center.setdefault(i + j, []).append((i, j))
    choices = [[None] + pairs for _, pairs in sorted(by_center.items())]
    for pick in product(*choices):
        yield Fingerprint(n, tuple(p for p in pick if p is not None))


def _verify_ipf(n_max, limits, out) -> bool:
    report = extremal.verify_ipf(n_max, limits)
    out.write(report.table())
    out.write(report.machine_lines())
    for k, first, formula in report.checks():
        shown = "-" if first is None else first
        out.write(f"k={k} first_n={shown} ipf={formula}\n")
    return report.holds


def _verify_uniqueness(n_max, limits, out) -> bool:
    ok = True
    k = 3
    while extremal.ipf(k) <= n_max:
        held, witnesses = extremal.verify_uniqueness(k, limits)
        out.write(f"k={k} n={extremal.ipf(k)} unique={held} witnesses={[str(w) for w in witnesses]}\n")
        ok &= held
        k += 1
    return ok


def _verify_clique(k_max, limits, out) -> bool:
    ok = True
    for k in range(3, k_max + 1):
        held = extremal.verify_clique(k, limits)
        out.write(f"k={k} clique={held}\n")
        ok &= held
    return ok


def _verify_logbound(n_max, limits, out) -> bool:
    held = extremal.verify_log_bound(n_max, limits)
    out.write(f"log bound n=2..{n_max}: {held}\n")
    return held


def _verify_selfloop_iff(n_max, limits, out) -> bool:
    ok = True
    for n in range(2, n_max + 1):
        realizable = extremal.enumerate_fingerprints(n, limits)
        disagree = checked = 0
        for f in _distinct_center_subsets(n):
            loop_free = constraints.build_restriction_graph(f).self_loop is None
            disagree += loop_free != (f in realizable)
            checked += 1
        out.write(f"n={n} checked={checked} disagreements={disagree}\n")
        ok &= disagree == 0
    return ok


def _verify_greedy_min(n_max, limits, out) -> bool:
    ok = True
    for n in range(1, n_max + 1):
        mismatches = 0
        for f in extremal.enumerate_fingerprints(n, limits):
            g = constraints.build_restriction_graph(f)
            if reconstruct.sigma(f) != extremal.chromatic_number_exact(g, limits):
                mismatches += 1
        out.write(f"n={n} mismatches={mismatches}\n")
        ok &= mismatches == 0
    return ok


VERIFIERS = {
    "ipf": _verify_ipf,
    "uniqueness": _verify_uniqueness,
    "clique": _verify_clique,
    "logbound": _verify_logbound,
    "selfloop-iff": _verify_selfloop_iff,
    "greedy-min": _verify_greedy_min,
}

VERIFY_DEFAULT_MAX = {
    "ipf": 9, "uniqueness": 9, "clique": 7, "logbound": 9, "selfloop-iff": 6, "greedy-min": 9,
}


def cmd_verify(args, out) -> int:
    n_max = args.max if args.max is not None else VERIFY_DEFAULT_MAX[args.property]
    if args.property in ("selfloop-iff", "greedy-min") and n_max > args.limits.max_verify_n:
        raise ResourceLimit(f"--max {n_max} exceeds verification cap {args.limits.max_verify_n}")
    held = VERIFIERS[args.property](n_max, args.limits, out)
    out.write(f"{args.property}: {'holds' if held else 'VIOLATED'}\n")
    return EXIT_OK if held else EXIT_VIOLATED


def _positive(value: str) -> int:
    n = int(value)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palfp", description="Palindromic fingerprint toolkit.", allow_abbrev=False
    )
    parser.add_argument("--max-string-n", type=_positive, help="cap for canonical-string enumeration")
    parser.add_argument("--max-verify-n", type=_positive, help="cap for verify sweeps")
    parser.add_argument("--max-vertices", type=_positive, help="cap for the exact chromatic oracle")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, fprint=True):
        p = sub.add_parser(name, help=help_text)
        if fprint:
            p.add_argument("input", nargs="?", default="-", help="FPRINT v1 file or '-' for stdin")
        p.set_defaults(func=func)
        return p

    p = add("fingerprint", cmd_fingerprint, "fingerprint a text", fprint=False)
    p.add_argument("input", nargs="?", default="-", help="text file or '-' for stdin")
    p.add_argument("--text-format", choices=("letters", "int-tokens"), default="letters")

    p = add("reconstruct", cmd_reconstruct, "rebuild a preimage")
    p.add_argument("--k", type=_positive, help="use exactly k symbols")
    p.add_argument("--output", choices=("letters", "int-tokens", "auto"), default="auto")

    add("validate", cmd_validate, "decide whether a fingerprint has a preimage")
    add("sigma", cmd_sigma, "minimum alphabet size")
    p = add("graph", cmd_graph, "restriction graph as DOT")
    p.add_argument("--color", action="store_true", help="fill vertices by the greedy coloring")
    add("islands", cmd_islands, "palindromic islands")
    add("crossing", cmd_crossing, "crossing palindrome pairs")

    for name, func in (("optimal", cmd_optimal), ("zimin", cmd_zimin)):
        p = add(name, func, f"print the {name} string of order k", fprint=False)
        p.add_argument("--k", type=_positive, required=True)
        p.add_argument("--output", choices=("letters", "int-tokens", "auto"), default="auto")

    p = add("verify", cmd_verify, "exhaustively check a property", fprint=False)
    p.add_argument("property", choices=sorted(VERIFIERS))
    p.add_argument("--max", type=_positive, help="largest n (or k for clique) to check")
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    limits = Limits.from_env()
    overrides = {
        name: getattr(args, name)
        for name in ("max_string_n", "max_verify_n", "max_vertices")
        if getattr(args, name) is not None
    }
    args.limits = replace(limits, **overrides)
    try:
        return args.func(args, out)
    except (InvalidCharacter, FingerprintSyntaxError, RangeError, DuplicatePair) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DuplicateCenter as exc:
        print(f"invalid fingerprint: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvalidFingerprint as exc:
        print(f"invalid fingerprint: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OutOfRange as exc:
        print(f"out of range: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
