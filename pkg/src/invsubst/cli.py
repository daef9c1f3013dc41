"""Command-line front end.

Exit codes: 0 affirmative, 1 negative answer or NONE, 2 bad input, 3 budget
or cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import matrices, nielsen, oracle
from .decompose import decompose, is_simple
from .endo import matrix, parse_endomorphism, parse_substitution
from .errors import NotInvertibleError, ResourceError

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class _InputError(Exception):
    pass


def _budget(default: int) -> int:
    raw = os.environ.get("SUBST_BUDGET")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise _InputError(f"SUBST_BUDGET must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise _InputError(f"SUBST_BUDGET must be a positive integer, got {raw!r}")
    return value


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def _cmd_check(args) -> int:
    sigma = parse_endomorphism(args.sub)
    w = nielsen.find_witness(sigma, budget=_budget(nielsen.DEFAULT_BUDGET))
    payload = {"substitution": str(sigma), "invertible": w is not None}
    text = "invertible" if w is not None else "not invertible"
    if args.witness and w is not None:
        payload["witness"] = w.names()
        text += "\nwitness: " + " ".join(w.names())
    _emit(args, payload, text)
    return EXIT_YES if w is not None else EXIT_NO


def _cmd_invert(args) -> int:
    sigma = parse_endomorphism(args.sub)
    try:
        inv = nielsen.invert(sigma, budget=_budget(nielsen.DEFAULT_BUDGET))
    except NotInvertibleError:
        _emit(args, {"substitution": str(sigma), "inverse": None}, "NOT INVERTIBLE")
        return EXIT_NO
    _emit(args, {"substitution": str(sigma), "inverse": str(inv)}, str(inv))
    return EXIT_YES


def _cmd_decompose(args) -> int:
    sigma = parse_substitution(args.sub)
    try:
        d = decompose(sigma, budget=_budget(nielsen.DEFAULT_BUDGET))
    except NotInvertibleError:
        _emit(args, {"substitution": str(sigma), "error": "not invertible"}, "NOT INVERTIBLE")
        return EXIT_NO
    payload = d.to_expanded_dict() if args.expand else d.to_dict()
    lines = [f"conjugator: {d.conjugator.text or 'ε'}"]
    if args.expand:
        lines += ["factor: " + " o ".join(names) for names in payload["factors"]]
    else:
        lines += [f"factor: {f}" for f in d.factors]
    if args.verify:
        ok = d.recompose() == sigma
        payload["verified"] = ok
        lines.append("verified: recomposes to input" if ok else "verification FAILED")
        if not ok:
            _emit(args, payload, "\n".join(lines))
            return EXIT_NO
    _emit(args, payload, "\n".join(lines))
    return EXIT_YES


def _cmd_simple(args) -> int:
    sigma = parse_substitution(args.sub)
    ok = is_simple(sigma)
    _emit(args, {"substitution": str(sigma), "simple": ok}, "simple" if ok else "not simple")
    return EXIT_YES if ok else EXIT_NO


def _cmd_indecomposable(args) -> int:
    sigma = parse_substitution(args.sub)
    if not nielsen.is_invertible(sigma, budget=_budget(nielsen.DEFAULT_BUDGET)):
        _emit(args, {"substitution": str(sigma), "error": "not invertible"}, "NOT INVERTIBLE")
        return EXIT_NO
    if sigma.is_permutation:
        _emit(args, {"substitution": str(sigma), "indecomposable": None}, "trivial (a permutation)")
        return EXIT_NO
    found, pair = oracle.is_decomposable_bruteforce(sigma, cap=args.cap)
    if not found:
        _emit(args, {"substitution": str(sigma), "indecomposable": True}, "indecomposable")
        return EXIT_YES
    left, right = pair
    _emit(
        args,
        {"substitution": str(sigma), "indecomposable": False, "witness": [str(left), str(right)]},
        f"decomposable: {left} o {right}",
    )
    return EXIT_NO


def _cmd_matrix(args) -> int:
    sigma = parse_endomorphism(args.sub)
    m = matrix(sigma)
    _emit(args, {"substitution": str(sigma), "matrix": m.tolist()},
          "\n".join(" ".join(f"{v:3d}" for v in row) for row in m))
    return EXIT_YES


def _cmd_factor_matrix(args) -> int:
    m = matrices.parse_matrix(args.entries)
    factors = matrices.factor_elementary(m, budget=_budget(matrices.DEFAULT_BUDGET))
    if factors is None:
        _emit(args, {"matrix": m.tolist(), "factors": None}, "NONE")
        return EXIT_NO
    names = matrices.serialize_factors(factors)
    echo = matrices.product(factors)
    _emit(args, {"matrix": m.tolist(), "factors": names, "product": echo.tolist()},
          " ".join(names) if names else "(identity)")
    return EXIT_YES


def _cmd_enumerate(args) -> int:
    source = oracle.iter_simple if args.simple else oracle.iter_invertible
    items = sorted(source(args.max_len, cap=args.cap))
    if args.count:
        _emit(args, {"max_len": args.max_len, "count": len(items)}, str(len(items)))
        return EXIT_YES
    if args.json:
        print(json.dumps([str(s) for s in items]))
    else:
        for s in items:
            print(s)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    p = argparse.ArgumentParser(prog="invsubst", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="is the map an automorphism")
    c.add_argument("sub")
    c.add_argument("--witness", action="store_true")
    c.set_defaults(func=_cmd_check)

    c = sub.add_parser("invert", parents=[common], help="print the inverse")
    c.add_argument("sub")
    c.set_defaults(func=_cmd_invert)

    c = sub.add_parser("decompose", parents=[common], help="conjugator and simple factors")
    c.add_argument("sub")
    c.add_argument("--verify", action="store_true", help="recompose and compare")
    c.add_argument("--expand", action="store_true", help="spell factors in pi1, pi2, phi_l, phi_r")
    c.set_defaults(func=_cmd_decompose)

    c = sub.add_parser("simple", parents=[common], help="is the substitution simple")
    c.add_argument("sub")
    c.set_defaults(func=_cmd_simple)

    c = sub.add_parser("indecomposable", parents=[common], help="brute-force decomposability")
    c.add_argument("sub")
    c.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    c.set_defaults(func=_cmd_indecomposable)

    c = sub.add_parser("matrix", parents=[common], help="substitution matrix")
    c.add_argument("sub")
    c.set_defaults(func=_cmd_matrix)

    c = sub.add_parser("factor-matrix", parents=[common], help="elementary factorization")
    c.add_argument("entries", nargs="+", help="nine integers, row-major")
    c.set_defaults(func=_cmd_factor_matrix)

    c = sub.add_parser("enumerate", parents=[common], help="list substitutions up to a length")
    c.add_argument("--max-len", type=int, required=True)
    kind = c.add_mutually_exclusive_group()
    kind.add_argument("--invertible", action="store_true", default=True)
    kind.add_argument("--simple", action="store_true")
    c.add_argument("--count", action="store_true", help="print only the number found")
    c.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    c.set_defaults(func=_cmd_enumerate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, _InputError) as e:  # ParseError, NegativeEntryError included
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
