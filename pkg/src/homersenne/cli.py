"""Command-line front end: ``homersenne {gen,verify,transform,genfun,matrix,tridiag}``.

Exit status is 0 on success, 1 when a verification or cross-check fails and
2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import genfun, identities, matrix, transforms
from .bfile import format_bfile
from .sequences import hom_closed, hom_stream
from .verify import IDENTITIES, VerifyConfig, run_verification

FORMATS = ("table", "json", "csv", "bfile")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def render_terms(terms: Sequence[int], k: int, name: str, fmt: str, label: str) -> str:
    if fmt == "bfile":
        return format_bfile(terms)
    if fmt == "csv":
        return "".join(f"{i},{v}\n" for i, v in enumerate(terms))
    if fmt == "json":
        return json.dumps({"k": k, "name": name, "terms": [str(v) for v in terms]}) + "\n"
    width_n = max(len("n"), len(str(len(terms) - 1)))
    values = [str(v) for v in terms]
    width_v = max([len(label)] + [len(v) for v in values])
    lines = [f"{'n':>{width_n}}  {label:>{width_v}}"]
    lines += [f"{i:>{width_n}}  {v:>{width_v}}" for i, v in enumerate(values)]
    return "\n".join(lines) + "\n"


def cmd_gen(args) -> int:
    terms = hom_stream(args.k, args.count)
    sys.stdout.write(
        render_terms(terms, args.k, "higher_order_mersenne", args.format, f"M_n^({args.k})")
    )
    return 0


def cmd_verify(args) -> int:
    try:
        config = VerifyConfig(
            identity_set=tuple(args.identity) if args.identity else tuple(IDENTITIES),
            k_max=args.k_max,
            n_max=args.n_max,
            fail_fast=args.fail_fast,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = sys.stdout
    out.write(f"grid: 1 <= k <= {config.k_max}, n <= {config.n_max}\n")
    if "vajda" in config.identity_set:
        conv = identities.resolve_vajda_convention()
        rows = identities.vajda_oracle()
        printed_ok = sum(row[identities.PRINTED_VAJDA.key][2] for row in rows)
        out.write(
            f"vajda convention: {conv.key} "
            f"(M_(n+m) M_(n+r) - M_n M_(n+m+r) = (2^k)^n M_m M_r; "
            f"printed form {identities.PRINTED_VAJDA.key} holds on {printed_ok}/{len(rows)} "
            f"oracle cells k<=3, n,m,r<=4)\n"
        )
    tallies = run_verification(config)
    width = max(len(t.name) for t in tallies)
    for t in tallies:
        status = "PASS" if t.ok else "FAIL"
        out.write(f"{t.name:<{width}}  {status}  {t.passed}/{t.total}\n")
        for report in t.failures:
            out.write(f"  counterexample: {report}\n")
    ok = all(t.ok for t in tallies)
    out.write("all identities hold\n" if ok else "verification FAILED\n")
    return 0 if ok else 1


def cmd_transform(args) -> int:
    k, count = args.k, args.count
    rec = list(transforms.bt_recurrence(k, count))
    for n, value in enumerate(rec):
        by_def, by_closed = transforms.bt_definition(k, n), transforms.bt_closed(k, n)
        if not value == by_def == by_closed:
            print(
                f"error: b_({k},{n}) paths disagree: recurrence={value} "
                f"definition={by_def} closed={by_closed}",
                file=sys.stderr,
            )
            return 1
    sys.stdout.write(render_terms(rec, k, "binomial_transform", args.format, f"b_({k},n)"))
    return 0


def cmd_genfun(args) -> int:
    f = genfun.hom_ogf(args.k) if args.which == "base" else genfun.bt_ogf(args.k)
    coeffs = genfun.expand_rational(f, args.count)
    sys.stdout.write(
        f"numerator: {list(f.numerator)}\n"
        f"denominator: {list(f.denominator)}\n"
        f"coefficients: {' '.join(str(c) for c in coeffs)}\n"
    )
    return 0


def cmd_matrix(args) -> int:
    k, n = args.k, args.n
    p = matrix.mat_power(matrix.mat_u(k), n)
    det_expected, trace_expected = 1 << (k * n), 1 + (1 << (k * n))
    sys.stdout.write(
        f"U^{n} for k={k}\n"
        f"a11 = -2^k M_{n - 1}^({k}) = {p.a11}\n"
        f"a12 = M_{n}^({k}) = {p.a12}\n"
        f"a21 = -2^k M_{n}^({k}) = {p.a21}\n"
        f"a22 = M_{n + 1}^({k}) = {p.a22}\n"
        f"det = {p.det()} (2^(kn) = {det_expected})\n"
        f"trace = {p.trace()} (1 + 2^(kn) = {trace_expected})\n"
    )
    return 0 if (p.det(), p.trace()) == (det_expected, trace_expected) else 1


def cmd_tridiag(args) -> int:
    spec = matrix.TridiagonalSpec(args.k, args.n)
    minors = matrix.tridiag_minors(spec)
    ok = True
    for j, d in enumerate(minors, 1):
        sys.stdout.write(f"det(V_{j}) = {d}\n")
        ok &= d == hom_closed(args.k, j + 1)
    trace, expected = spec.trace(), args.n * ((1 << args.k) + 1)
    sys.stdout.write(f"trace(V_{args.n}) = {trace} (n(2^k+1) = {expected})\n")
    return 0 if ok and trace == expected else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homersenne",
        description="Higher-order Mersenne numbers, binomial transforms and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print M_0^(k) .. M_{count-1}^(k)")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="sweep identity checks over a (k, n) grid")
    p.add_argument(
        "--identity", action="append", choices=sorted(IDENTITIES), help="repeatable; default all"
    )
    p.add_argument("--k-max", type=_positive, default=8)
    p.add_argument("--n-max", type=_positive, default=64)
    p.add_argument("--fail-fast", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="print b_(k,0) .. b_(k,count-1), cross-checked")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("genfun", help="expand an ordinary generating function")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--which", choices=("base", "transform"), default="base")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("matrix", help="print U^n with its determinant and trace")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("tridiag", help="print the continuant chain det(V_1) .. det(V_n)")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_tridiag)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
