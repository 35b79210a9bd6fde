"""Command-line front end.

Exit status: 0 on success, 1 for arithmetic/domain errors (and failed
verifications), 2 for usage errors and malformed literals.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, TextIO

from . import division, metrology, problems, regularity
from .expr import evaluate
from .numeral import ParseError, format_sex, from_floating, from_integer, parse_sex, to_floating
from .rational import rational_to_json, rational_to_sex, sex_to_rational

# library operation -> subcommand that reaches it
OPERATION_COMMANDS = {
    "parse_sex": "parse",
    "format_sex": "parse",
    "to_floating": "parse",
    "from_floating": "parse",
    "from_integer": "divmod",
    "rat_add": "eval",
    "rat_sub": "eval",
    "rat_mul": "eval",
    "rat_div": "eval",
    "sex_to_rational": "parse",
    "rational_to_sex": "eval",
    "smooth_split": "regular",
    "is_regular": "regular",
    "reciprocal": "recip",
    "period_length": "period",
    "prefix_length": "period",
    "regular_numbers_up_to": "regular",
    "reciprocal_table": "table",
    "divmod_int": "divmod",
    "divide_by_regular": "divide",
    "gcd_list": "gcd",
    "factorize": "factor",
    "convert": "convert",
    "render_mixed": "convert",
    "stone_solve": "stone",
    "stone_check": "stone",
    "verify_shuruppak": "verify",
    "verify_ms3956": "verify",
    "verify_ybc4652": "verify",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _sex_json(x) -> dict:
    return {"text": format_sex(x), **x.to_json()}


def _integer(text: str, cfg) -> int:
    if cfg.decimal:
        try:
            return int(text, 10)
        except ValueError:
            raise UsageError(f"expected a decimal integer, got {text!r}") from None
    x = parse_sex(text)
    if not x.is_integer:
        raise UsageError(f"expected an integer, got {text!r}")
    return int(x)


def _positive(text: str, cfg) -> int:
    n = _integer(text, cfg)
    if n < 1:
        raise UsageError(f"expected a positive integer, got {text!r}")
    return n


def _magnitude(text: str) -> Fraction:
    if "/" in text:
        num, _, den = text.partition("/")
        if not (num.isdigit() and den.isdigit()) or int(den) == 0:
            raise UsageError(f"bad fraction {text!r}")
        return Fraction(int(num), int(den))
    return sex_to_rational(parse_sex(text))


# --- commands -----------------------------------------------------------------
# Each returns (text, json_result, exit_status).


def cmd_parse(args, cfg):
    x = parse_sex(args.literal)
    value = sex_to_rational(x)
    text = f"{format_sex(x, cfg.unrolled)}  = {value}"
    result = {"sex": _sex_json(x), "rational": rational_to_json(value)}
    if args.floating:
        f = to_floating(x)
        text += f"  floating={f} e={f.exponent}"
        result["floating"] = {
            "digits": list(f.digits),
            "exponent": f.exponent,
            "sign": f.sign,
            "absolute": format_sex(from_floating(f)),
        }
    return text, result, 0


def cmd_eval(args, cfg):
    value = evaluate(" ".join(args.expression))
    x = rational_to_sex(value)
    text = f"{format_sex(x, cfg.unrolled)}  = {value}"
    return text, {"sex": _sex_json(x), "rational": rational_to_json(value)}, 0


def cmd_recip(args, cfg):
    n = _positive(args.n, cfg)
    period = regularity.period_length(n, cfg.guard)
    x = regularity.reciprocal(n)
    return (
        f"{format_sex(x, cfg.unrolled)}  period={period}",
        {"n": n, "reciprocal": _sex_json(x), "period": period},
        0,
    )


def cmd_regular(args, cfg):
    if args.up_to is not None:
        ns = regularity.regular_numbers_up_to(_positive(args.up_to, cfg))
        return " ".join(format_sex(from_integer(n)) for n in ns), {"regular": ns}, 0
    if args.n is None:
        raise UsageError("regular: give a number or --up-to BOUND")
    n = _positive(args.n, cfg)
    s = regularity.smooth_split(n)
    regular = regularity.is_regular(n)
    verdict = "regular" if regular else "irregular"
    text = f"{format_sex(from_integer(n))}: {verdict} (2^{s.a} · 3^{s.b} · 5^{s.c} · {s.m})"
    return text, {"n": n, "regular": regular, "a": s.a, "b": s.b, "c": s.c, "m": str(s.m)}, 0


def cmd_period(args, cfg):
    n = _positive(args.n, cfg)
    period = regularity.period_length(n, cfg.guard)
    prefix = regularity.prefix_length(n)
    return f"period={period} prefix={prefix}", {"n": n, "period": period, "prefix": prefix}, 0


def cmd_table(args, cfg):
    table = regularity.reciprocal_table(_positive(args.bound, cfg))
    text = regularity.format_reciprocal_table(table)
    result = [
        {"n": n, "n_sex": format_sex(from_integer(n)), "digits": list(f.digits), "exponent": f.exponent}
        for n, f in table
    ]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        text = f"wrote {len(table)} entries to {args.out}"
    return text, result, 0


def cmd_divmod(args, cfg):
    n, d = _integer(args.n, cfg), _integer(args.d, cfg)
    if n < 0:
        raise UsageError("divmod: dividend must be non-negative")
    q, r = division.divmod_int(n, d)
    qs, rs = from_integer(q), from_integer(r)
    return (
        f"q={format_sex(qs)} r={format_sex(rs)}",
        {"q": _sex_json(qs), "r": _sex_json(rs), "q_decimal": str(q), "r_decimal": str(r)},
        0,
    )


def cmd_divide(args, cfg):
    x = parse_sex(args.n)
    y = division.divide_by_regular(x, _positive(args.d, cfg))
    return format_sex(y), {"quotient": _sex_json(y)}, 0


def cmd_gcd(args, cfg):
    g = division.gcd_list([_integer(t, cfg) for t in args.numbers])
    return f"{format_sex(from_integer(g))}  ({g})", {"gcd": str(g)}, 0


def cmd_factor(args, cfg):
    n = _positive(args.n, cfg)
    f = division.factorize(n, args.limit)
    return (
        division.format_factorization(f, plain=args.plain),
        {
            "n": str(n),
            "factors": [[str(p), e] for p, e in f.factors],
            "cofactor": str(f.cofactor),
            "complete": f.complete,
        },
        0,
    )


def cmd_convert(args, cfg):
    q = metrology.Quantity(_magnitude(args.magnitude), args.source)
    out = metrology.convert(q, args.target)
    shown = format_sex(rational_to_sex(out.magnitude), cfg.unrolled)
    text = f"{shown} {metrology.DISPLAY[out.unit]}  ({out.magnitude})"
    result = {"unit": out.unit, "magnitude": rational_to_json(out.magnitude)}
    if out.dimension == "weight":
        mixed = metrology.render_mixed(out)
        text += f"  = {mixed}"
        result["mixed"] = mixed
    return text, result, 0


def cmd_stone(args, cfg):
    remainder = metrology.convert(
        metrology.Quantity(_magnitude(args.remainder), args.unit), "gin"
    ).magnitude
    p = problems.StoneProblem(tuple(_positive(k, cfg) for k in args.steps), remainder)
    sol = problems.stone_solve(p)
    back = problems.stone_check(sol.weight, p)
    weight_sex = rational_to_sex(sol.weight)
    lines = [f"# {sol.label}"]
    lines += [f"{desc}: {format_sex(v, cfg.unrolled)}" for desc, v in sol.trace]
    lines.append(
        f"weight = {format_sex(weight_sex, cfg.unrolled)} gín"
        f" = {metrology.render_mixed(metrology.Quantity(sol.weight, 'gin'))}"
    )
    lines.append(f"check: remainder {format_sex(rational_to_sex(back), cfg.unrolled)} gín")
    result = {
        "weight": rational_to_json(sol.weight),
        "weight_sex": _sex_json(weight_sex),
        "trace": [{"step": d, "value": _sex_json(v)} for d, v in sol.trace],
        "check": rational_to_json(back),
        "label": sol.label,
    }
    return "\n".join(lines), result, 0


def cmd_verify(args, cfg):
    names = list(problems.VERIFIERS) if args.name == "all" else [args.name]
    reports = problems.verify(names)
    ok = all(r.passed for r in reports)
    return (
        "\n".join(r.to_text() for r in reports),
        [r.to_json() for r in reports],
        0 if ok else 1,
    )


COMMANDS: dict[str, Callable] = {
    "parse": cmd_parse,
    "eval": cmd_eval,
    "recip": cmd_recip,
    "regular": cmd_regular,
    "period": cmd_period,
    "table": cmd_table,
    "divmod": cmd_divmod,
    "divide": cmd_divide,
    "gcd": cmd_gcd,
    "factor": cmd_factor,
    "convert": cmd_convert,
    "stone": cmd_stone,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--unrolled", type=int, metavar="K", default=argparse.SUPPRESS,
                        help="write repetends out K times instead of in parentheses")
    common.add_argument("--guard", type=int, metavar="N", default=argparse.SUPPRESS,
                        help="iteration guard for period computation (default 10^6)")
    common.add_argument("--decimal", action="store_true", default=argparse.SUPPRESS,
                        help="read integer arguments as decimal instead of sexagesimal")

    parser = _Parser(prog="sexagesimal", description="Exact base-60 arithmetic.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("parse", parents=[common], help="parse and normalize a literal")
    p.add_argument("literal")
    p.add_argument("--floating", action="store_true", help="also show the radix-free form")

    p = sub.add_parser("eval", parents=[common], help="evaluate + - × ÷ over literals")
    p.add_argument("expression", nargs="+")

    p = sub.add_parser("recip", parents=[common], help="reciprocal of n")
    p.add_argument("n")

    p = sub.add_parser("regular", parents=[common], help="regularity of n, or list regular numbers")
    p.add_argument("n", nargs="?")
    p.add_argument("--up-to", metavar="BOUND")

    p = sub.add_parser("period", parents=[common], help="period and prefix length of 1/n")
    p.add_argument("n")

    p = sub.add_parser("table", parents=[common], help="reciprocal table up to a bound")
    p.add_argument("bound")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("divmod", parents=[common], help="quotient and remainder")
    p.add_argument("n")
    p.add_argument("d")

    p = sub.add_parser("divide", parents=[common], help="divide by a regular number via its reciprocal")
    p.add_argument("n")
    p.add_argument("d")

    p = sub.add_parser("gcd", parents=[common], help="greatest common divisor")
    p.add_argument("numbers", nargs="+")

    p = sub.add_parser("factor", parents=[common], help="trial-division factorization")
    p.add_argument("n")
    p.add_argument("--limit", type=int, default=division.DEFAULT_FACTOR_LIMIT)
    p.add_argument("--plain", action="store_true", help="write exponents as ^k")

    p = sub.add_parser("convert", parents=[common], help="convert sila/guru or gin/mana")
    p.add_argument("magnitude")
    p.add_argument("source")
    p.add_argument("target")

    p = sub.add_parser("stone", parents=[common], help="solve a stone-weighing problem")
    p.add_argument("steps", nargs="*", metavar="K")
    p.add_argument("--remainder", default="1")
    p.add_argument("--unit", default="mana")

    p = sub.add_parser("verify", parents=[common], help="re-run a tablet computation")
    p.add_argument("name", choices=[*problems.VERIFIERS, "all"])
    return parser


class _Config:
    def __init__(self, ns):
        self.json = getattr(ns, "json", False)
        self.unrolled = getattr(ns, "unrolled", None)
        self.guard = getattr(ns, "guard", regularity.DEFAULT_GUARD)
        self.decimal = getattr(ns, "decimal", False)
        if self.unrolled is not None and self.unrolled < 1:
            raise UsageError("--unrolled must be at least 1")
        if self.guard < 1:
            raise UsageError("--guard must be positive")


def _emit_error(kind, message, command, as_json, out, err, extra=None):
    if as_json:
        body = {"type": kind, "message": message, **(extra or {})}
        print(json.dumps({"command": command, "ok": False, "error": body}, ensure_ascii=False), file=out)
    else:
        print(f"error: {message}", file=err)


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    command = None
    try:
        parser = build_parser()
        try:
            ns = parser.parse_args(argv)
        except SystemExit as e:  # --help
            return int(e.code or 0)
        command = ns.command
        cfg = _Config(ns)
        text, result, status = COMMANDS[command](ns, cfg)
    except ParseError as e:
        if as_json:
            _emit_error("parse", e.reason, command, True, out, err,
                        {"text": e.text, "position": e.position})
        else:
            print(f"error: cannot parse input\n{e.caret()}", file=err)
        return 2
    except UsageError as e:
        _emit_error("usage", str(e), command, as_json, out, err)
        return 2
    except (ArithmeticError, ValueError) as e:
        _emit_error(type(e).__name__, str(e), command, as_json, out, err)
        return 1
    if cfg.json:
        payload = {"command": command, "ok": status == 0, "result": result}
        print(json.dumps(payload, ensure_ascii=False), file=out)
    else:
        print(text, file=out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
