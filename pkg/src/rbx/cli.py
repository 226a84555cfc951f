"""Command-line front end: rbx verify|canon|functional|act|transit|orbit|selftest.

File arguments accept ``-`` for stdin.  Exit codes: 0 success, 1 a check
came back false (identity violated, not in orbit, membership check failed),
2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .actions import (
    affine_orbit_word,
    apply_word,
    apply_word_tuple,
    word_from_json,
    word_to_json,
)
from .functionals import (
    coordinate_equation,
    curve_coords,
    elimination_polynomial,
    recover_base_point,
    reduced_equation,
    satisfies_system,
)
from .operators import (
    AnalyticOp,
    Inconsistent,
    NoRationalBasePoint,
    NotMultiplierType,
    TruncOp,
    TruncationTooSmall,
    ZeroMultiplier,
    first_rb_failure,
    operator_to_point,
)
from .poly import Poly, PolyParseError, as_rat, format_rational
from .selftest import DEFAULT_SEED, run_all

_DOMAIN_ERRORS = (
    NotMultiplierType,
    ZeroMultiplier,
    NoRationalBasePoint,
    Inconsistent,
    TruncationTooSmall,
)


class InputError(ValueError):
    """Unreadable or malformed input file."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _read_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def _load_operator(path: str) -> "AnalyticOp | TruncOp":
    data = _read_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected an operator object")
    try:
        if "images" in data:
            return TruncOp.from_json(data)
        return AnalyticOp.from_json(data)
    except (KeyError, ValueError) as exc:
        raise InputError(f"{path}: bad operator payload: {exc}") from exc


def _load_analytic(path: str) -> AnalyticOp:
    data = _read_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a single operator object")
    try:
        return AnalyticOp.from_json(data)
    except (KeyError, ValueError) as exc:
        raise InputError(f"{path}: bad operator payload: {exc}") from exc


def _load_analytic_tuple(path: str) -> list[AnalyticOp]:
    data = _read_json(path)
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list) or not data:
        raise InputError(f"{path}: expected an operator or a non-empty operator array")
    try:
        return [AnalyticOp.from_json(item) for item in data]
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"{path}: bad operator payload: {exc}") from exc


def _parse_rat_flag(text: str, what: str) -> Fraction:
    try:
        return as_rat(text)
    except (ValueError, PolyParseError) as exc:
        raise InputError(f"bad {what} {text!r}") from exc


def _keyvals(pairs: list[str]) -> dict[str, str]:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key or not value:
            raise InputError(f"expected key=value, got {item!r}")
        out[key] = value
    return out


# -- subcommands -------------------------------------------------------------

def _cmd_verify(args: argparse.Namespace) -> int:
    op = _load_operator(args.opfile)
    weight = _parse_rat_flag(args.weight, "weight")
    degree = args.degree
    if isinstance(op, AnalyticOp):
        trunc = op.truncate(2 * degree + op.r.degree + 1)
    else:
        trunc = op
    try:
        failure = first_rb_failure(trunc, weight, degree)
    except TruncationTooSmall as exc:
        raise InputError(f"truncation cannot support degree {degree}: {exc}") from exc
    if failure is None:
        print(json.dumps({"holds": True, "weight": str(weight), "degree": degree}))
        return 0
    print(
        json.dumps(
            {"holds": False, "weight": str(weight), "degree": degree, "first_failure": list(failure)}
        )
    )
    return 1


def _cmd_canon(args: argparse.Namespace) -> int:
    op = _load_operator(args.opfile)
    if isinstance(op, AnalyticOp):
        trunc = op.truncate(op.r.degree + 1)
    else:
        trunc = op
    try:
        point = operator_to_point(trunc)
    except _DOMAIN_ERRORS as exc:
        print(f"canonicalization failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(point.to_json()))
    return 0


def _parse_context(values: dict[str, str]) -> Poly:
    if "r" not in values:
        raise InputError("missing r=<polynomial>")
    r = Poly.from_text(values["r"])
    if r.is_zero():
        raise InputError("context multiplier r must be nonzero")
    return r


def _need_int(values: dict[str, str], key: str) -> int:
    if key not in values:
        raise InputError(f"missing {key}=<int>")
    try:
        return int(values[key])
    except ValueError as exc:
        raise InputError(f"bad integer for {key}: {values[key]!r}") from exc


def _cmd_functional(args: argparse.Namespace) -> int:
    values = _keyvals(args.params)
    r = _parse_context(values)
    if args.subcommand == "system":
        print(coordinate_equation(r, _need_int(values, "n"), _need_int(values, "m")).to_text())
        return 0
    if args.subcommand == "eliminate":
        t = _need_int(values, "t")
        try:
            print(elimination_polynomial(r, t).to_text())
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return 0
    if args.subcommand == "reduce":
        print(reduced_equation(r, _need_int(values, "n"), _need_int(values, "m")).to_text())
        return 0
    # check: sampled curve heads must be members with recoverable base point,
    # off-curve bumps must be rejected (degree-0 contexts have none).
    k = r.degree
    samples = [Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 2), Fraction(-3, 2)]
    ok = True
    for a in samples:
        head = curve_coords(r, a, k + 1).c
        member = satisfies_system(r, head, args.budget)
        recovered = recover_base_point(r, curve_coords(r, a, k + 2).c)
        print(
            json.dumps(
                {
                    "member_Mr": member,
                    "a": format_rational(recovered) if recovered is not None else None,
                }
            )
        )
        ok = ok and member and recovered == a
        if k == 0:
            continue
        for j in range(k + 1):
            bumped = head[:j] + (head[j] + 1,) + head[j + 1 :]
            bumped_member = satisfies_system(r, bumped, args.budget)
            bumped_a = recover_base_point(r, bumped)
            print(
                json.dumps(
                    {
                        "member_Mr": bumped_member,
                        "a": format_rational(bumped_a) if bumped_a is not None else None,
                    }
                )
            )
            ok = ok and not bumped_member
    print("check passed" if ok else "check failed", file=sys.stderr)
    return 0 if ok else 1


def _cmd_act(args: argparse.Namespace) -> int:
    try:
        word = word_from_json(_read_json(args.word))
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"{args.word}: bad word payload: {exc}") from exc
    data = _read_json(args.op)
    if isinstance(data, list):
        ops = _load_analytic_tuple(args.op)
        images = apply_word_tuple(word, ops)
        print(json.dumps([op.to_json() for op in images]))
    else:
        op = _load_analytic(args.op)
        print(json.dumps(apply_word(word, op).to_json()))
    return 0


def _cmd_transit(args: argparse.Namespace) -> int:
    from .transitivity import solve_distinct_tuple, solve_single, solve_tuple_independent

    if args.mode == "single":
        src = _load_analytic(args.src)
        dst = _load_analytic(args.dst)
        word = solve_single(src, dst)
        verified = apply_word(word, src) == dst
    else:
        src_tuple = _load_analytic_tuple(args.src)
        dst_tuple = _load_analytic_tuple(args.dst)
        solver = solve_tuple_independent if args.mode == "independent" else solve_distinct_tuple
        word = solver(src_tuple, dst_tuple)
        verified = apply_word_tuple(word, src_tuple) == dst_tuple
    print(
        json.dumps(
            {"word": word_to_json(word), "word_length": len(word), "verified": verified}
        )
    )
    return 0 if verified else 1


def _cmd_orbit(args: argparse.Namespace) -> int:
    op1 = _load_analytic(args.op1)
    op2 = _load_analytic(args.op2)
    word = affine_orbit_word(op1, op2)
    if word is None:
        print(json.dumps({"in_orbit": False, "word": None}))
        return 1
    print(json.dumps({"in_orbit": True, "word": word_to_json(word)}))
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = run_all(args.seed)
    width = max(len(res.name) for res in results)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"criterion {res.number:>2}  {res.name:<{width}}  {status}  {res.seconds:7.2f}s")
        if not res.passed:
            print(f"    {res.detail}")
    passed = sum(res.passed for res in results)
    print(f"selftest: {passed}/{len(results)} criteria passed (seed {args.seed})")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbx",
        description="Exact computation with integration-type operators on Q[x].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the Rota-Baxter identity on an operator file")
    p.add_argument("opfile", help="operator JSON (moduli point or truncation); - for stdin")
    p.add_argument("--lambda", dest="weight", default="0", help="identity weight (rational)")
    p.add_argument("--degree", type=int, default=8, help="check all monomial pairs up to this degree")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("canon", help="canonicalize a truncated operator to its moduli point")
    p.add_argument("opfile", help="operator JSON; - for stdin")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("functional", help="coordinate system, elimination and membership checks")
    p.add_argument("subcommand", choices=["system", "eliminate", "reduce", "check"])
    p.add_argument("params", nargs="*", help="key=value parameters: r=<poly> n=<int> m=<int> t=<int>")
    p.add_argument("--budget", type=int, default=8, help="membership check degree budget")
    p.set_defaults(func=_cmd_functional)

    p = sub.add_parser("act", help="apply a word of generators to an operator or tuple")
    p.add_argument("--word", required=True, help="word JSON file; - for stdin")
    p.add_argument("--op", required=True, help="operator or operator-array JSON file")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("transit", help="synthesize a verified word between operators or tuples")
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.add_argument("--mode", choices=["single", "independent", "distinct"], default="single")
    p.set_defaults(func=_cmd_transit)

    p = sub.add_parser("orbit", help="decide conjugation orbits of operators")
    p.add_argument("--aut", action="store_true", required=True, help="affine-substitution orbit")
    p.add_argument("op1")
    p.add_argument("op2")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("selftest", help="run the full acceptance suite")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        # argument-contract violations of any flavour: malformed files,
        # unparsable polynomials, tuples that break a solver precondition
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
