"""Command-line front end.

Exit codes: 0 ok, 1 oracle check failed, 2 invalid input, 3 horizon or work
budget exceeded, 4 precision exhausted.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from decimal import ROUND_CEILING, ROUND_FLOOR, Context, Decimal
from fractions import Fraction
from pathlib import Path

from . import constructions, language, oracle, theorems
from .errors import BetaShiftError, InvalidInput, InvalidKneading
from .kneading import (
    DEFAULT_PRECISION_BITS,
    KneadingSequence,
    beta_from_json,
    greedy_expansion,
    kneading_from_beta,
    solve_beta,
    validate_kneading,
)
from .report import Status

SEQUENCE_KINDS = {
    "followers": ("follower", theorems.follower_count),
    "predecessors": ("predecessor", theorems.predecessor_count),
    "extenders": ("extender", theorems.extender_count_formula),
}


def _load_json(text: str) -> dict:
    """Inline JSON if it looks like an object, otherwise a file path."""
    try:
        if text.lstrip().startswith("{"):
            return json.loads(text)
        return json.loads(Path(text).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read JSON from {text!r}: {exc}") from exc


def _kneading(args) -> KneadingSequence:
    if not args.kneading:
        raise InvalidInput("--kneading is required")
    d = KneadingSequence.from_json(_load_json(args.kneading))
    if getattr(args, "assert_aperiodic", False) and not d.is_exact:
        d = KneadingSequence.prefix(d.digits, assert_aperiodic=True)
    if args.command != "validate":
        report = validate_kneading(d)
        if not report.valid:
            raise InvalidKneading(f"not a kneading sequence: {report.violations[0][1]}")
    return d


def _beta(args):
    if not args.beta:
        raise InvalidInput("--beta is required")
    return beta_from_json(_load_json(args.beta))


def parse_range(text: str) -> list[int]:
    """``"7"`` or ``"1..10"`` (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise InvalidInput(f"bad --n value {text!r}; expected N or A..B") from None
    if lo < 0 or hi < lo:
        raise InvalidInput(f"bad --n range {text!r}")
    return list(range(lo, hi + 1))


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _emit_rows(header, rows, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _fmt(args, ns) -> str:
    if args.format:
        return args.format
    return "csv" if len(ns) > 1 else "json"


def _flag(value: bool):
    return "true" if value else "false"


def _decimal(x: Fraction, rounding) -> str:
    ctx = Context(prec=30, rounding=rounding)
    return str(ctx.divide(Decimal(x.numerator), Decimal(x.denominator)))


def cmd_expand(args, out):
    digits = greedy_expansion(_beta(args), args.count, args.precision_bits)
    _emit_json({"digits": digits}, out)


def cmd_kneading(args, out):
    d = kneading_from_beta(_beta(args), args.horizon, args.precision_bits)
    _emit_json(d.to_json(), out)


def cmd_solve_beta(args, out):
    lo, hi = solve_beta(_kneading(args), Fraction(args.tolerance))
    _emit_json({"lo": str(lo), "hi": str(hi),
                "lo_decimal": _decimal(lo, ROUND_FLOOR), "hi_decimal": _decimal(hi, ROUND_CEILING)}, out)


def cmd_validate(args, out):
    _emit_json(validate_kneading(_kneading(args)).to_json(), out)


def cmd_admissible(args, out):
    d = _kneading(args)
    w = language.parse_word(args.word)
    result = {"word": list(w), "admissible": language.is_admissible(w, d)}
    if result["admissible"]:
        result["suffix_class"] = language.suffix_class(w, d)
    _emit_json(result, out)


def cmd_language(args, out):
    d = _kneading(args)
    ns = parse_range(args.n)
    if len(ns) != 1:
        raise InvalidInput("language takes a single --n")
    words = language.enumerate_language(d, ns[0])
    if (args.format or "json") == "json":
        _emit_json([list(w) for w in words], out)
    else:
        for w in words:
            out.write(language.word_str(w) + "\n")


def _emit_reports(args, reports, out, extra_header=(), extra=None):
    ns = [r.n for r in reports]
    if _fmt(args, ns) == "csv":
        rows = []
        for i, r in enumerate(reports):
            cells = [_flag(c) if isinstance(c, bool) else c for c in (extra[i] if extra else [])]
            rows.append([r.n, r.value, r.status.value, *cells])
        _emit_rows(["n", "value", "status", *extra_header], rows, out)
    else:
        payload = [r.to_json() for r in reports]
        if extra:
            for p, e in zip(payload, extra):
                p.update(dict(zip(extra_header, e)))
        _emit_json(payload[0] if len(payload) == 1 else payload, out)


def cmd_complexity(args, out):
    d = _kneading(args)
    _emit_reports(args, [language.subword_complexity(d, n) for n in parse_range(args.n)], out)


def cmd_sequence(args, out):
    kind, fn = SEQUENCE_KINDS[args.command]
    d = _kneading(args)
    reports = [fn(d, n) for n in parse_range(args.n)]
    if not args.check_oracle:
        _emit_reports(args, reports, out)
        return 0
    pred = oracle.predicate_from_kneading(d)
    extra = []
    failed = False
    for r in reports:
        res = oracle.stabilized_count(pred, kind, r.n, args.depth, args.work_budget)
        extra.append([res.value, res.stabilized])
        if r.status in (Status.EXACT, Status.UPPER_BOUND) and res.value > r.value:
            failed = True
            sys.stderr.write(f"oracle {res.value} exceeds {r.status.value} formula value {r.value} at n={r.n}\n")
    _emit_reports(args, reports, out, ("oracle", "oracle_stabilized"), extra)
    return 1 if failed else 0


def cmd_bounds(args, out):
    d = _kneading(args)
    ns = parse_range(args.n)
    rows = [(n, *theorems.extender_bounds(d, n)) for n in ns]
    if _fmt(args, ns) == "csv":
        _emit_rows(["n", "low", "high"], rows, out)
    else:
        payload = [{"n": n, "low": lo, "high": hi} for n, lo, hi in rows]
        _emit_json(payload[0] if len(payload) == 1 else payload, out)


def parse_predicate(text: str, args) -> oracle.LegalityPredicate:
    """``even_shift``, ``full:K``, ``forbidden:11,000`` or ``kneading`` (uses --kneading)."""
    name, _, arg = text.partition(":")
    if name == "even_shift":
        return oracle.builtin_predicate("even_shift")
    if name == "full":
        try:
            return oracle.builtin_predicate("full", k=int(arg or 1))
        except ValueError:
            raise InvalidInput(f"bad full shift size {arg!r}") from None
    if name == "forbidden":
        words = [language.parse_word(t) for t in arg.split(",") if t]
        return oracle.builtin_predicate("forbidden_words", words=words)
    if name == "kneading":
        return oracle.predicate_from_kneading(_kneading(args))
    raise InvalidInput(f"unknown predicate {text!r}")


def cmd_oracle(args, out):
    pred = parse_predicate(args.predicate, args)
    ns = parse_range(args.n)
    results = [oracle.stabilized_count(pred, args.kind, n, args.depth, args.work_budget) for n in ns]
    reports = [r.to_report() for r in results]
    if _fmt(args, ns) == "csv":
        _emit_reports(args, reports, out, ("depth", "stabilized"),
                      [[r.depth, r.stabilized] for r in results])
    else:
        _emit_reports(args, reports, out)


def _param_value(text: str):
    try:
        return int(text)
    except ValueError:
        return text


def cmd_construct(args, out):
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidInput(f"--param expects key=value, got {item!r}")
        params[key] = _param_value(value)
    recipe = constructions.named_example(args.name, **params)
    _emit_json(recipe.output.to_json(), out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="betashift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *, kneading=False, beta=False, n=False, fmt=False, check=False):
        p = sub.add_parser(name)
        p.set_defaults(func=func)
        if kneading:
            p.add_argument("--kneading", help="kneading JSON file or inline JSON")
            p.add_argument("--assert-aperiodic", action="store_true",
                           help="treat a prefix sequence as not eventually periodic")
        if beta:
            p.add_argument("--beta", help="beta JSON file or inline JSON")
            p.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS)
        if n:
            p.add_argument("--n", required=True, help="length N or inclusive range A..B")
        if fmt:
            p.add_argument("--format", choices=["csv", "json"])
        if check:
            p.add_argument("--check-oracle", action="store_true")
            p.add_argument("--depth", type=int, default=4)
            p.add_argument("--work-budget", type=int, default=oracle.DEFAULT_WORK_BUDGET)
        return p

    add("expand", cmd_expand, beta=True).add_argument("--count", type=int, default=20)
    add("kneading", cmd_kneading, beta=True).add_argument("--horizon", type=int, default=40)
    add("solve-beta", cmd_solve_beta, kneading=True).add_argument("--tolerance", default="1e-9")
    add("validate", cmd_validate, kneading=True)
    add("admissible", cmd_admissible, kneading=True).add_argument("--word", required=True)
    lang = add("language", cmd_language, kneading=True, n=True)
    lang.add_argument("--format", choices=["json", "lines"])
    add("complexity", cmd_complexity, kneading=True, n=True, fmt=True)
    for name in SEQUENCE_KINDS:
        add(name, cmd_sequence, kneading=True, n=True, fmt=True, check=True)
    add("bounds", cmd_bounds, kneading=True, n=True, fmt=True)
    orc = add("oracle", cmd_oracle, kneading=True, n=True, fmt=True)
    orc.add_argument("--predicate", required=True)
    orc.add_argument("--kind", choices=oracle.KINDS, required=True)
    orc.add_argument("--depth", type=int, default=4)
    orc.add_argument("--work-budget", type=int, default=oracle.DEFAULT_WORK_BUDGET)
    con = sub.add_parser("construct")
    con.set_defaults(func=cmd_construct)
    con.add_argument("name", choices=sorted(constructions.RECIPES))
    con.add_argument("--param", action="append", help="recipe parameter key=value")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out) or 0
    except BetaShiftError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
