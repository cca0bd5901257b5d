"""Command line interface: ``quotring hnf | bench | selftest``.

Exit codes: 0 success, 1 self-test failure, 2 unreadable or malformed input,
3 rank-deficient module, 4 sampling budget exhausted, 5 verification failed.
The default seed comes from the ``QUOTRING_SEED`` environment variable.
"""

import argparse
import json
import os
import sys

from . import io as qio
from .bench import DISTRIBUTIONS, BenchConfig, VerificationError, run_bench, to_csv
from .errors import (
    InvalidRingError, NotIntegralError, RankDeficientError, SamplingBudgetExhausted,
)
from .pseudo import pseudo_hnf, span_zlattice
from .selftest import run_selftest

EXIT_OK, EXIT_SELFTEST, EXIT_PARSE, EXIT_RANK, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3, 4, 5


def default_seed():
    raw = os.environ.get("QUOTRING_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"QUOTRING_SEED must be an integer, got {raw!r}") from None


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_hnf(args):
    try:
        doc = _load_json(args.input)
        ring = qio.parse_ring(args.ring) if args.ring else None
        P = qio.parse_pseudomatrix(doc, ring)
        modulus = None
        if args.modulus != "auto":
            m = qio.parse_ideal(P.ring, _load_json(args.modulus))
            if m.den != 1:
                raise qio.FormatError("modulus must be an integral ideal")
            modulus = m.num
    except (OSError, json.JSONDecodeError, qio.FormatError, InvalidRingError) as exc:
        print(f"error: cannot parse input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        H = pseudo_hnf(P, modulus=modulus, zsplit=args.zsplit == "on", seed=args.seed)
    except RankDeficientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANK
    except SamplingBudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotIntegralError as exc:
        print(f"error: input module is not contained in O^k: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out = qio.pseudo_hnf_to_json(H, seed=args.seed)
    if args.verify:
        ok = H.is_triangular_unit() and span_zlattice(P) == span_zlattice(H.as_pseudomatrix())
        if not ok:
            print("error: verification failed: spans differ", file=sys.stderr)
            return EXIT_VERIFY
        print("verify: ok", file=sys.stderr)
    _write(args.output, qio.dumps(out))
    return EXIT_OK


def cmd_bench(args):
    rows = []
    try:
        for n in args.n:
            for bits in args.bits:
                for dist in args.dist:
                    cfg = BenchConfig(args.ring, n, bits, dist, args.trials, args.seed,
                                      args.zsplit == "on")
                    rows.extend(run_bench(cfg))
    except (ValueError, InvalidRingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RankDeficientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANK
    except SamplingBudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    _write(args.output, to_csv(rows))
    return EXIT_OK


def cmd_selftest(args):
    return run_selftest(args.suite, seed=args.seed)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quotring",
        description="Pseudo-Hermite normal forms over rings of integers via Euclidean residue rings. "
        "The ring given by structure constants is trusted to be a maximal order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    seed = default_seed()

    p = sub.add_parser("hnf", help="pseudo-HNF of a pseudomatrix file")
    p.add_argument("--ring", help="preset name, overrides the ring in the input file")
    p.add_argument("--input", required=True, help="pseudomatrix JSON file")
    p.add_argument("--output", help="output file (default: stdout)")
    p.add_argument("--modulus", default="auto", help="'auto' or an ideal JSON file")
    p.add_argument("--zsplit", choices=["on", "off"], default="on")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--verify", action="store_true", help="check the result with the lattice oracle")
    p.set_defaults(func=cmd_hnf)

    p = sub.add_parser("bench", help="randomized benchmark, CSV on stdout")
    p.add_argument("--ring", default="Zsqrt10")
    p.add_argument("--n", type=int, nargs="+", default=[10])
    p.add_argument("--bits", "-B", type=int, nargs="+", default=[10])
    p.add_argument("--dist", nargs="+", choices=DISTRIBUTIONS, default=["uniform"])
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--zsplit", choices=["on", "off"], default="on")
    p.add_argument("--output", help="CSV file (default: stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="run the built-in invariant suites")
    p.add_argument("--suite", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which matches the parse code
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
