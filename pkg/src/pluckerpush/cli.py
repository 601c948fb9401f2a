"""Command-line surface: pushforward, degree, degree-classical, syt, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
invariant violation.  All stdout is deterministic for a given invocation and
seed; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .chowring import BundleModel, FormalBundle, SplitBundle, render_terms
from .oracles import run_suites
from .partitions import Partition, add_rectangle, enumerate_partitions, parse_partition
from .pushforward import (
    degree_grassmann_bundle_terms,
    degree_grassmannian_classical,
    pushforward_plucker_power,
)
from .tableaux import syt_count_hook, syt_count_product, syt_enumerate

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def render_schur_terms(terms: list[tuple[str, str]]) -> str:
    """Render (shape text, coefficient text) pairs like ``2*Delta(2,1)``."""
    return render_terms([(f"Delta{shape}", coeff) for shape, coeff in terms])


def _parse_twists(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t.strip()) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad twists {text!r}: {exc}") from None


def _build_model(args: argparse.Namespace, r: int) -> BundleModel:
    has_formal = args.base_dim is not None
    has_split = args.pm is not None or args.twists is not None
    if has_formal == has_split:
        raise UsageError("choose exactly one model: --base-dim, or --pm with --twists")
    if has_formal:
        if args.base_dim < 0:
            raise UsageError("--base-dim must be nonnegative")
        return FormalBundle(base_dim=args.base_dim, rank=r)
    if args.pm is None or args.twists is None:
        raise UsageError("the split model needs both --pm and --twists")
    twists = _parse_twists(args.twists)
    if len(twists) != r:
        raise UsageError(f"--twists lists {len(twists)} values, expected r={r}")
    return SplitBundle(base_dim=args.pm, twists=twists)


def _model_json(model: BundleModel) -> dict[str, object]:
    if isinstance(model, FormalBundle):
        return {"type": "formal", "base_dim": model.base_dim, "rank": model.rank}
    return {"type": "split", "base_dim": model.base_dim, "twists": list(model.twists)}


def _schur_pairs(N: int, d: int, r: int) -> list[tuple[Partition, int]]:
    fiber_dim = d * (r - d)
    if N < fiber_dim:
        return []
    return [
        (lam, syt_count_hook(add_rectangle(lam, d, r - d)))
        for lam in enumerate_partitions(N - fiber_dim, d)
    ]


def cmd_pushforward(args: argparse.Namespace) -> int:
    if args.d > args.r:
        raise UsageError(f"need d <= r, got d={args.d}, r={args.r}")
    model = _build_model(args, args.r)
    image = pushforward_plucker_power(args.N, args.d, args.r, model)
    schur_pairs = _schur_pairs(args.N, args.d, args.r)
    schur_terms = [(str(lam), str(coeff)) for lam, coeff in schur_pairs]
    class_terms = image.terms()
    data = {
        "schema": SCHEMA_VERSION,
        "command": "pushforward",
        "N": args.N,
        "d": args.d,
        "r": args.r,
        "model": _model_json(model),
        "schur_terms": [{"shape": s, "coefficient": c} for s, c in schur_terms],
        "class_terms": [{"monomial": m, "coefficient": c} for m, c in class_terms],
        "class_text": render_terms(class_terms),
    }
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(f"schur form: {render_schur_terms(schur_terms)}")
        print(f"class: {data['class_text']}")
    return EXIT_OK


def cmd_degree(args: argparse.Namespace) -> int:
    twists = _parse_twists(args.twists)
    if args.d > len(twists):
        raise UsageError(f"need d <= r, got d={args.d} with {len(twists)} twists")
    if args.pm < 0:
        raise UsageError("--pm must be nonnegative")
    model = SplitBundle(base_dim=args.pm, twists=twists)
    rows = degree_grassmann_bundle_terms(args.d, model)
    degree = sum((count * integral for _, count, integral in rows), Fraction(0))
    if degree.denominator != 1:
        print(f"internal error: degree {degree} is not an integer", file=sys.stderr)
        return EXIT_INTERNAL
    data = {
        "schema": SCHEMA_VERSION,
        "command": "degree",
        "d": args.d,
        "model": _model_json(model),
        "degree": str(degree.numerator),
        "table": [
            {"shape": str(lam), "syt_count": str(count), "integral": str(integral)}
            for lam, count, integral in rows
        ],
    }
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(f"degree: {degree.numerator}")
        for lam, count, integral in rows:
            print(f"{lam}: f={count} integral={integral}")
    return EXIT_OK


def cmd_degree_classical(args: argparse.Namespace) -> int:
    if not 1 <= args.d <= args.r:
        raise UsageError(f"need 1 <= d <= r, got d={args.d}, r={args.r}")
    print(degree_grassmannian_classical(args.d, args.r))
    return EXIT_OK


def cmd_syt(args: argparse.Namespace) -> int:
    try:
        shape = parse_partition(args.shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.method == "hook":
        count = syt_count_hook(shape)
    elif args.method == "enumerate":
        try:
            count = syt_enumerate(shape)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:  # product interprets the shape as the unshifted partition
        if args.d is None or args.r is None:
            raise UsageError("--method product needs --d and --r")
        try:
            count = syt_count_product(shape, args.d, args.r)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    print(count)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.monotonic()
    kwargs: dict[str, object] = {"seed": args.seed, "trials": args.trials}
    if args.max_d is not None:
        kwargs["max_d"] = args.max_d
    if args.max_r is not None:
        kwargs["max_r"] = args.max_r
    if args.extra_N is not None:
        kwargs["extra_powers"] = args.extra_N
    reports = run_suites(args.suite, **kwargs)
    failures = sum(rep.failures for rep in reports)
    if args.json:
        data = {
            "schema": SCHEMA_VERSION,
            "command": "verify",
            "reports": [rep.to_json_dict(verbose=args.verbose) for rep in reports],
            "failures": failures,
            "passed": failures == 0,
        }
        print(json.dumps(data, indent=2))
    else:
        print("\n\n".join(rep.to_text(verbose=args.verbose) for rep in reports))
        if len(reports) > 1:
            print(f"\noverall: {'PASS' if failures == 0 else 'FAIL'}")
    elapsed = time.monotonic() - started
    print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pluckerpush",
        description="Exact push-forwards of Pluecker-class powers on Grassmann "
        "bundles, degree formulas, and their brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pushforward", help="push a power of the Pluecker class to the base")
    p.add_argument("--N", type=int, required=True, help="power of the Pluecker class")
    p.add_argument("--d", type=int, required=True, help="rank of the universal quotient")
    p.add_argument("--r", type=int, required=True, help="rank of the bundle")
    p.add_argument("--base-dim", type=int, default=None, help="formal base dimension")
    p.add_argument("--pm", type=int, default=None, help="split model: dimension of P^m")
    p.add_argument("--twists", type=str, default=None, help="split model: comma-separated twists")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pushforward)

    p = sub.add_parser("degree", help="degree of the Grassmann bundle of a split bundle")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--pm", type=int, required=True)
    p.add_argument("--twists", type=str, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("degree-classical", help="Pluecker degree of a Grassmann variety")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_degree_classical)

    p = sub.add_parser("syt", help="count standard Young tableaux of a shape")
    p.add_argument("--shape", type=str, required=True, help='shape such as "(2,1)"')
    p.add_argument("--method", choices=("hook", "product", "enumerate"), default="hook")
    p.add_argument("--d", type=int, default=None, help="rows, for --method product")
    p.add_argument("--r", type=int, default=None, help="bundle rank, for --method product")
    p.set_defaults(func=cmd_syt)

    p = sub.add_parser("verify", help="run the oracle cross-check suites")
    p.add_argument("--suite", choices=("theorem", "remark", "degrees", "all"), required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-d", type=int, default=None)
    p.add_argument("--max-r", type=int, default=None)
    p.add_argument("--extra-N", type=int, default=None)
    p.add_argument("--verbose", action="store_true", help="include per-trial lines")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
