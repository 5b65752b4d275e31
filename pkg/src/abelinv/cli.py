"""Command line interface.

Subcommands: dim (single dimensions), series (generating series), cayley
(tables, permanents, determinants, supports, counts), check (consistency
checkers), oracle (enumeration oracles).  Global flags: --json for
machine-readable output, --threads as an accepted worker cap (execution is
serial).  Exit codes: 0 success / checks pass, 1 check failures, 2 usage
errors, 3 resource guard refusals.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO

from . import cayley, molien
from .errors import GuardExceeded
from .groups import (
    FiniteAbelianGroup,
    abelian_groups_up_to,
    parse_group,
    parse_order_profile,
    subset_sum_zero_count,
)
from .report import CheckReport

CONJECTURE_GRID = tuple(
    [(2, l) for l in range(2, 10)]
    + [(3, l) for l in range(3, 9)]
    + [(4, l) for l in range(4, 8)]
)

MAX_WITNESS_LINES = 10


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="abelinv",
        description="Isotypic dimensions, Molien-style series and symbolic Cayley-table "
        "permanents/determinants for finite abelian groups.",
    )
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="K",
        help="worker cap; accepted for interface stability, execution is serial",
    )
    sub = p.add_subparsers(dest="command", required=True)

    dim = sub.add_parser("dim", help="single isotypic dimensions (cyclic groups)")
    dim.add_argument("kind", choices=["a", "b", "sw"],
                     help="a: symmetric power, b: exterior power, sw: mixed S^p (x) Lambda^m")
    dim.add_argument("--group", required=True, help="cyclic group, e.g. C6")
    dim.add_argument("--p", type=int, default=0, help="symmetric degree (sw only)")
    dim.add_argument("--m", type=int, required=True, help="power degree")
    dim.add_argument("--i", type=int, default=0, help="weight (character index)")

    ser = sub.add_parser("series", help="generating series")
    ser.add_argument("kind", choices=["sym", "ext", "bigraded"])
    ser.add_argument("--group", help="group spec, e.g. C4 or C2xC2")
    ser.add_argument("--profile", help="JSON file holding an order profile (ext/sym, invariants)")
    ser.add_argument("--i", type=int, default=0, help="weight (character index)")
    ser.add_argument("--order", type=int, help="truncation order (required for sym/bigraded)")

    cay = sub.add_parser("cayley", help="Cayley tables and their permanents/determinants")
    cay.add_argument("op", choices=["table", "per", "det", "support", "counts"])
    cay.add_argument("--group", required=True)
    cay.add_argument("--variant", choices=list(cayley.VARIANTS), default="plain")
    cay.add_argument("--l", type=int, help="table size (toeplitz only)")
    cay.add_argument("--alg", choices=["auto", "leibniz", "ryser", "factored"], default="auto")

    chk = sub.add_parser("check", help="consistency checkers")
    chk.add_argument(
        "which",
        choices=["reciprocity", "identity", "hall", "invariance", "actions",
                 "lehmer", "extended", "conjecture", "all"],
    )
    chk.add_argument("--group", help="restrict a group-parameterized check to one group")
    chk.add_argument("--max-total", type=int, default=10, help="reciprocity sweep bound")
    chk.add_argument("--fredman-total", type=int, default=16, help="two-parameter swap sweep bound")
    chk.add_argument("--identity", choices=["A", "B", "log2var", "log3var", "all"], default="all")
    chk.add_argument("--order", type=int, help="truncation override for identity checks")
    chk.add_argument("--max-order", type=int, default=6, help="largest group order in sweeps")
    chk.add_argument("--max-order-ext", type=int, default=5,
                     help="largest group order for extended-table support")
    chk.add_argument("--samples", type=int,
                     help="sampled mode for the action identities (default exhaustive)")
    chk.add_argument("--p", type=int, help="single prime for the congruence check")
    chk.add_argument("--n", type=int, help="cyclic order for a single conjecture case")
    chk.add_argument("--l", type=int, help="table size for a single conjecture case")

    orc = sub.add_parser("oracle", help="independent enumeration oracles")
    orc.add_argument("which", choices=["a", "dims", "subsets"])
    orc.add_argument("--group", help="group spec (subsets)")
    orc.add_argument("--n", type=int, help="cyclic order (a, dims)")
    orc.add_argument("--p", type=int, default=0, help="symmetric degree (dims)")
    orc.add_argument("--m", type=int, help="power degree (a, dims)")
    orc.add_argument("--i", type=int, default=0, help="weight (a, dims)")

    return p


def _require_cyclic(group: FiniteAbelianGroup, context: str) -> int:
    if not group.is_cyclic_presentation:
        raise ValueError(
            f"{context} needs a single-factor cyclic group (e.g. C6), got {group}"
        )
    return group.order


def _load_profile(path: str) -> dict[int, int]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_order_profile(json.load(fh))


def _emit(out: IO[str], args: argparse.Namespace, human: str, payload: dict | list) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False), file=out)
    else:
        print(human, file=out)


def _cmd_dim(args: argparse.Namespace, out: IO[str]) -> int:
    group = parse_group(args.group)
    n = _require_cyclic(group, "dim")
    if args.kind == "a":
        value = molien.sym_dim(n, args.m, args.i)
    elif args.kind == "b":
        value = molien.ext_dim(n, args.m, args.i)
    else:
        value = molien.sym_ext_dim(n, args.p, args.m, args.i)
    payload = {"kind": args.kind, "group": group.spec_string, "n": n,
               "m": args.m, "i": args.i, "value": value}
    if args.kind == "sw":
        payload["p"] = args.p
    _emit(out, args, str(value), payload)
    return 0


def _cmd_series(args: argparse.Namespace, out: IO[str]) -> int:
    if (args.group is None) == (args.profile is None):
        raise ValueError("series needs exactly one of --group or --profile")
    if args.kind == "bigraded":
        if args.profile is not None:
            raise ValueError("bigraded series are defined for cyclic groups, not profiles")
        group = parse_group(args.group)
        n = _require_cyclic(group, "series bigraded")
        if args.order is None:
            raise ValueError("series bigraded needs --order")
        s2 = molien.bigraded_series(n, args.i, args.order, min(args.order, n))
        payload = {"kind": "bigraded", "group": group.spec_string, "i": args.i,
                   "series": s2.to_json_obj()}
        _emit(out, args, str(s2), payload)
        return 0

    if args.profile is not None:
        source: molien.SeriesSource = _load_profile(args.profile)
        label = {"profile": {str(d): c for d, c in source.items()}}
    else:
        source = parse_group(args.group)
        label = {"group": source.spec_string}
    if args.kind == "sym":
        if args.order is None:
            raise ValueError("series sym needs --order")
        s1 = molien.sym_series(source, args.i, args.order)
    else:
        s1 = molien.ext_series(source, args.i, args.order)
    payload = {"kind": args.kind, **label, "i": args.i, "series": s1.to_json_obj()}
    _emit(out, args, str(s1), payload)
    return 0


def _cmd_cayley(args: argparse.Namespace, out: IO[str]) -> int:
    group = parse_group(args.group)
    if args.op == "counts":
        pc = cayley.permanent_term_count(group)
        dc = cayley.determinant_term_count(group)
        payload = {"group": group.spec_string, "permanent_terms": pc, "determinant_terms": dc}
        _emit(out, args, f"permanent_terms {pc}\ndeterminant_terms {dc}", payload)
        return 0

    matrix = cayley.build_table(group, args.variant, size=args.l)
    if args.op == "table":
        _emit(out, args, matrix.format_table(), matrix.to_json_obj())
        return 0
    if args.op == "per":
        if args.alg == "factored":
            raise ValueError("factored applies to determinants only")
        poly = cayley.permanent(matrix, args.alg)
        payload = {**matrix.to_json_obj(), "operation": "permanent",
                   "terms": poly.to_json_obj()}
        del payload["grid"]
        _emit(out, args, str(poly), payload)
        return 0
    if args.op == "det":
        if args.alg == "ryser":
            raise ValueError("ryser applies to permanents only")
        poly = cayley.determinant(matrix, args.alg)
        payload = {**matrix.to_json_obj(), "operation": "determinant",
                   "terms": poly.to_json_obj()}
        del payload["grid"]
        _emit(out, args, str(poly), payload)
        return 0

    # support: the zero-sum monomial prediction at the variant's natural degree
    n = group.order
    degree = {"plain": n, "hat": n, "extended": n + 1, "block2n": 2 * n,
              "toeplitz": matrix.size}[args.variant]
    support = sorted(cayley.hall_support(group, degree))
    human = "\n".join([f"degree {degree} count {len(support)}"]
                      + [" ".join(map(str, exp)) for exp in support])
    payload = {"group": group.spec_string, "variant": args.variant, "degree": degree,
               "count": len(support), "exponents": [list(e) for e in support]}
    _emit(out, args, human, payload)
    return 0


def _standard_action_reports(samples_order6: int = 500) -> list[CheckReport]:
    reports = []
    for spec in ("C3", "C4", "C2xC2"):
        reports.append(cayley.check_action_identities(parse_group(spec)))
    for spec in ("C6", "C2xC3"):
        reports.append(cayley.check_action_identities(parse_group(spec), samples=samples_order6))
    return reports


def _conjecture_grid_reports() -> list[CheckReport]:
    # a failing cell halts the grid: a single counterexample is the headline
    reports = []
    for n, l in CONJECTURE_GRID:
        rep = cayley.check_toeplitz_conjecture(n, l)
        reports.append(rep)
        if not rep.ok:
            break
    return reports


def _identity_reports(selection: str, order: int | None) -> list[CheckReport]:
    names = ["A", "B", "log2var", "log3var"] if selection == "all" else [selection]
    return [molien.check_identity(name, order) for name in names]


def _cmd_check(args: argparse.Namespace, out: IO[str]) -> int:
    reports: list[CheckReport] = []
    which = args.which
    if which == "reciprocity":
        reports.append(molien.check_reciprocity(args.max_total, args.fredman_total))
    elif which == "identity":
        reports.extend(_identity_reports(args.identity, args.order))
    elif which == "hall":
        reports.append(cayley.check_hall(args.max_order, args.max_order_ext))
    elif which == "invariance":
        groups = [parse_group(args.group)] if args.group else abelian_groups_up_to(args.max_order)
        reports.extend(cayley.check_invariance(g) for g in groups)
    elif which == "actions":
        if args.group:
            reports.append(cayley.check_action_identities(parse_group(args.group), samples=args.samples))
        else:
            reports.extend(_standard_action_reports(args.samples or 500))
    elif which == "lehmer":
        primes = [args.p] if args.p else list(cayley.LEHMER_PRIMES)
        reports.extend(cayley.check_lehmer_congruence(p) for p in primes)
    elif which == "extended":
        groups = [parse_group(args.group)] if args.group else abelian_groups_up_to(min(args.max_order, 4))
        reports.extend(cayley.check_extended_counts(g) for g in groups)
    elif which == "conjecture":
        if args.n is not None or args.l is not None:
            if args.n is None or args.l is None:
                raise ValueError("a single conjecture case needs both --n and --l")
            reports.append(cayley.check_toeplitz_conjecture(args.n, args.l))
        else:
            reports.extend(_conjecture_grid_reports())
    else:  # all
        reports.append(molien.check_reciprocity(args.max_total, args.fredman_total))
        reports.extend(_identity_reports("all", None))
        reports.append(cayley.check_hall(min(args.max_order, 6), min(args.max_order_ext, 5)))
        reports.extend(cayley.check_invariance(g) for g in abelian_groups_up_to(args.max_order))
        reports.extend(_standard_action_reports())
        reports.extend(cayley.check_lehmer_congruence(p) for p in cayley.LEHMER_PRIMES)
        reports.extend(cayley.check_extended_counts(g) for g in abelian_groups_up_to(min(args.max_order, 4)))
        reports.extend(_conjecture_grid_reports())

    if args.json:
        payload = reports[0].to_json_obj() if len(reports) == 1 else [r.to_json_obj() for r in reports]
        print(json.dumps(payload, indent=2, sort_keys=False), file=out)
    else:
        for rep in reports:
            print(rep.summary_line(), file=out)
            # the conjecture check reports its full monomial symmetric difference
            cap = len(rep.failures) if rep.check == "toeplitz-conjecture" else MAX_WITNESS_LINES
            for witness in rep.failures[:cap]:
                print(f"  witness: {json.dumps(witness, sort_keys=False)}", file=out)
            if len(rep.failures) > cap:
                print(f"  ... {len(rep.failures) - cap} more", file=out)
    return 0 if all(r.ok for r in reports) else 1


def _cmd_oracle(args: argparse.Namespace, out: IO[str]) -> int:
    if args.which == "subsets":
        if not args.group:
            raise ValueError("oracle subsets needs --group")
        group = parse_group(args.group)
        value = subset_sum_zero_count(group)
        payload = {"oracle": "subsets", "group": group.spec_string, "value": value}
    elif args.which == "a":
        if args.n is None or args.m is None:
            raise ValueError("oracle a needs --n and --m")
        value = molien.sym_dim_oracle(args.n, args.m, args.i)
        payload = {"oracle": "a", "n": args.n, "m": args.m, "i": args.i, "value": value}
    else:
        if args.n is None or args.m is None:
            raise ValueError("oracle dims needs --n and --m (and optionally --p)")
        value = molien.sym_ext_dim_oracle(args.n, args.p, args.m, args.i)
        payload = {"oracle": "dims", "n": args.n, "p": args.p, "m": args.m,
                   "i": args.i, "value": value}
    _emit(out, args, str(value), payload)
    return 0


def run(argv: list[str] | None = None, out: IO[str] | None = None) -> int:
    """Parse and execute; returns the process exit code."""
    if out is None:
        out = sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code) if ex.code else 0
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    handlers = {
        "dim": _cmd_dim,
        "series": _cmd_series,
        "cayley": _cmd_cayley,
        "check": _cmd_check,
        "oracle": _cmd_oracle,
    }
    try:
        return handlers[args.command](args, out)
    except GuardExceeded as ex:
        print(f"refused: {ex}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
