"""Command-line front end.

Data goes to stdout, one datum per line in text mode; diagnostics go to
stderr so output can be piped.  Exit codes: 0 success, 1 usage error,
2 domain error (no primitive roots, bad lift input, ceiling exceeded, ...),
3 negative answer from `check`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import construct, hensel, oracle, orders
from .errors import DomainError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NOT_A_ROOT = 3

ORACLE_CEILING_ENV = "PRIMROOTS_ORACLE_CEILING"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Route argparse's own failures through the usage exit code instead of
    # its default SystemExit(2).
    def error(self, message):
        raise _UsageError(message)


def _natural(text: str) -> int:
    text = text.strip()
    if not (text.isascii() and text.isdigit()):
        raise argparse.ArgumentTypeError(
            f"expected a nonnegative decimal integer, got {text!r}"
        )
    return int(text)


def _poly(text: str) -> hensel.Polynomial:
    try:
        return hensel.Polynomial.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integer coefficients (constant term "
            f"first), got {text!r}"
        )


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _emit_scalar(value: int, fmt: str) -> None:
    if fmt == "json":
        _print_json({"value": str(value)})
    else:
        print(value)


def _emit_root_list(modulus: int, roots, fmt: str, limit: int | None) -> None:
    roots = list(roots)
    truncated = limit is not None and len(roots) > limit
    if truncated:
        roots = roots[:limit]
    if fmt == "json":
        _print_json(construct.PrimitiveRootSet(modulus, tuple(roots)).to_json())
    else:
        for r in roots:
            print(r)
    if truncated:
        print(f"output truncated after {limit} roots", file=sys.stderr)


def _oracle_ceiling() -> int:
    raw = os.environ.get(ORACLE_CEILING_ENV)
    if raw is None:
        return oracle.DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(
            f"{ORACLE_CEILING_ENV} must be an integer, got {raw!r}"
        )


def _cmd_list(args) -> int:
    if args.stream or args.no_sort:
        if args.fmt == "json":
            raise _UsageError("--stream and --no-sort produce text only")
        if args.stream:
            emitted = 0
            for root in construct.iter_primitive_roots(args.n):
                if args.limit is not None and emitted >= args.limit:
                    print(
                        f"output truncated after {args.limit} roots",
                        file=sys.stderr,
                    )
                    break
                print(root)
                emitted += 1
            return EXIT_OK
        # Chain order but materialized, mainly for diffing against --stream.
        construct.check_root_count(args.n, args.max_roots)
        roots = list(construct.iter_primitive_roots(args.n))
        _emit_root_list(args.n, roots, args.fmt, args.limit)
        return EXIT_OK
    rs = construct.primitive_roots(args.n, max_roots=args.max_roots)
    _emit_root_list(rs.modulus, rs.roots, args.fmt, args.limit)
    return EXIT_OK


def _cmd_count(args) -> int:
    _emit_scalar(orders.count_primitive_roots(args.n), args.fmt)
    return EXIT_OK


def _cmd_check(args) -> int:
    ok = orders.is_primitive_root(args.a, args.n)
    if args.fmt == "json":
        _print_json({"value": ok})
    else:
        print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_NOT_A_ROOT


def _cmd_order(args) -> int:
    _emit_scalar(orders.order(args.a, args.n), args.fmt)
    return EXIT_OK


def _cmd_lift(args) -> int:
    if args.k < 1:
        raise DomainError(f"exponent k must be >= 1, got {args.k}")
    if args.k == 1:
        roots = construct.lift_prime_to_square(args.g, args.p)
    else:
        roots = construct.lift_power(args.g, args.p, args.k)
    _emit_root_list(args.p ** (args.k + 1), roots, args.fmt, None)
    return EXIT_OK


def _cmd_exceptional(args) -> int:
    _emit_scalar(construct.exceptional_t(args.g, args.p), args.fmt)
    return EXIT_OK


def _cmd_twice(args) -> int:
    _emit_scalar(
        construct.to_twice_prime_power(args.g, args.p, args.k), args.fmt
    )
    return EXIT_OK


def _cmd_hensel(args) -> int:
    sols = hensel.solve_prime_power(args.poly, args.prime, args.power)
    if args.fmt == "json":
        _print_json(
            {
                "prime": str(args.prime),
                "power": args.power,
                "solutions": [str(x) for x in sols],
            }
        )
    else:
        for x in sols:
            print(x)
    return EXIT_OK


def _cmd_classify(args) -> int:
    cls = orders.classify_modulus(args.n)
    if args.fmt == "json":
        _print_json(cls.to_json())
    elif cls.p is not None:
        print(f"{cls.kind} p={cls.p} k={cls.k}")
    else:
        print(cls.kind)
    return EXIT_OK


def _cmd_oracle_roots(args) -> int:
    rs = oracle.brute_primitive_roots(args.n, ceiling=_oracle_ceiling())
    _emit_root_list(rs.modulus, rs.roots, args.fmt, args.limit)
    return EXIT_OK


def _cmd_oracle_solve(args) -> int:
    sols = oracle.brute_congruence_solutions(
        args.poly, args.mod, ceiling=_oracle_ceiling()
    )
    if args.fmt == "json":
        _print_json(
            {"modulus": str(args.mod), "solutions": [str(x) for x in sols]}
        )
    else:
        for x in sols:
            print(x)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="primroots",
        description="Construct primitive roots and solve polynomial "
        "congruences modulo prime powers.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name: str, handler, help_: str):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.add_argument(
            "--format",
            dest="fmt",
            choices=("text", "json"),
            default="text",
            help="output format (default: text)",
        )
        sp.set_defaults(handler=handler)
        return sp

    sp = add("list", _cmd_list, "enumerate every primitive root of n")
    sp.add_argument("n", type=_natural)
    sp.add_argument(
        "--stream",
        action="store_true",
        help="emit roots in construction order without materializing the set",
    )
    sp.add_argument(
        "--no-sort",
        action="store_true",
        help="materialize but keep construction order (matches --stream)",
    )
    sp.add_argument(
        "--limit",
        type=_natural,
        default=None,
        metavar="N",
        help="stop after N roots and note the truncation on stderr",
    )
    sp.add_argument(
        "--max-roots",
        type=_natural,
        default=construct.DEFAULT_ROOT_LIMIT,
        metavar="N",
        help="refuse to materialize more than N roots "
        f"(default {construct.DEFAULT_ROOT_LIMIT})",
    )

    sp = add("count", _cmd_count, "number of primitive roots of n")
    sp.add_argument("n", type=_natural)

    sp = add("check", _cmd_check, "is a a primitive root of n? exit 0 yes, 3 no")
    sp.add_argument("a", type=_natural)
    sp.add_argument("n", type=_natural)

    sp = add("order", _cmd_order, "multiplicative order of a mod n")
    sp.add_argument("a", type=_natural)
    sp.add_argument("n", type=_natural)

    sp = add(
        "lift",
        _cmd_lift,
        "lift a primitive root g of p**k to primitive roots of p**(k+1)",
    )
    sp.add_argument("g", type=_natural)
    sp.add_argument("p", type=_natural)
    sp.add_argument("k", type=_natural)

    sp = add(
        "exceptional",
        _cmd_exceptional,
        "the one t in [0, p) for which g + t*p is not a primitive root of p**2",
    )
    sp.add_argument("g", type=_natural)
    sp.add_argument("p", type=_natural)

    sp = add(
        "twice",
        _cmd_twice,
        "the primitive root of 2*p**k induced by a root g of p**k",
    )
    sp.add_argument("g", type=_natural)
    sp.add_argument("p", type=_natural)
    sp.add_argument("k", type=_natural)

    sp = add(
        "hensel",
        _cmd_hensel,
        "solve f(x) = 0 mod p**k by lifting level-one solutions",
    )
    sp.add_argument(
        "--poly",
        type=_poly,
        required=True,
        help="comma-separated coefficients, constant term first (1,0,1 is "
        "x**2 + 1); write --poly=-3,0,1 when the first one is negative",
    )
    sp.add_argument("--prime", type=_natural, required=True)
    sp.add_argument("--power", type=_natural, required=True)

    sp = add("classify", _cmd_classify, "which primitive-root family n belongs to")
    sp.add_argument("n", type=_natural)

    osub_parent = sub.add_parser(
        "oracle", help="brute-force reference scans (slow, ceiling-guarded)"
    )
    osub = osub_parent.add_subparsers(dest="oracle_command", metavar="command")
    osub.required = True

    sp = osub.add_parser("roots", description="primitive roots of n by direct scan")
    sp.add_argument("n", type=_natural)
    sp.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    sp.add_argument("--limit", type=_natural, default=None, metavar="N")
    sp.set_defaults(handler=_cmd_oracle_roots)

    sp = osub.add_parser(
        "solve", description="solutions of f(x) = 0 mod m by direct scan"
    )
    sp.add_argument("--poly", type=_poly, required=True)
    sp.add_argument("--mod", type=_natural, required=True)
    sp.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    sp.set_defaults(handler=_cmd_oracle_solve)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv, dispatch, and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
