"""Command line front end: ``merojump resolve|jn|ideal|verify``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import BivariatePolynomial, parse_polynomial, parse_rational
from .exact.parser import PolynomialSyntaxError
from .generators import generators
from .multiplier import (NoZeroPartError, integer_tail_threshold, is_integer_only, jumping_numbers,
                         multiplier_divisor, verify)
from .resolution import ResolutionData, TrivialGermError, log_resolution

EXIT_OK, EXIT_INPUT, EXIT_CHECK, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


# -- input --------------------------------------------------------------------

def _polynomial(text: str, which: str) -> BivariatePolynomial:
    try:
        return parse_polynomial(text)
    except PolynomialSyntaxError as exc:
        raise InputError(f"-{which}: {exc}") from None


def _rational(text: str, what: str) -> Fraction:
    try:
        value = parse_rational(text)
    except ZeroDivisionError:
        raise InputError(f"{what}: zero denominator in {text!r}") from None
    except ValueError as exc:
        raise InputError(f"{what}: {exc}") from None
    if value < 0:
        raise InputError(f"{what} must be nonnegative")
    return value


def load_resolution(args, need_charts: bool = False) -> ResolutionData:
    if args.data:
        if args.f or args.g:
            raise InputError("give either --data or -f/-g, not both")
        try:
            with open(args.data, encoding="utf-8") as fh:
                res = ResolutionData.from_json(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read {args.data}: {exc.strerror}") from None
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{args.data}: invalid resolution data: {exc}") from None
        if need_charts and not res.has_charts:
            if res.f is None or res.g is None:
                raise InputError("generators need the polynomials; the data file does not record f and g")
            rebuilt = log_resolution(_polynomial(res.f, "f"), _polynomial(res.g, "g"))
            if rebuilt.to_dict() != res.to_dict():
                raise InputError(f"{args.data}: data does not match the recorded polynomials")
            res = rebuilt
        return res
    if not args.f:
        raise InputError("missing input: give -f (and optionally -g) or --data")
    f = _polynomial(args.f, "f")
    g = _polynomial(args.g or "1", "g")
    try:
        return log_resolution(f, g)
    except TrivialGermError as exc:
        raise InputError(f"trivial germ: {exc}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None


# -- rendering ----------------------------------------------------------------

def render_generator(h: BivariatePolynomial, res: ResolutionData) -> str:
    """Write ``h`` as ``f^a*g^b*rest`` when ``f`` or ``g`` divide it."""
    parts = []
    for name, text in (("f", res.f), ("g", res.g)):
        if not text:
            continue
        p = parse_polynomial(text).normalized()
        if p.degree() == 0:
            continue
        a = 0
        while p.divides(h):
            h = h.exact_divide(p)
            a += 1
        if a:
            parts.append(name if a == 1 else f"{name}^{a}")
    h = h.normalized()
    if not parts:
        return str(h)
    if h.degree() == 0:
        return "*".join(parts)
    rest = str(h)
    if len(h) > 1:
        rest = f"({rest})"
    return "*".join(parts + [rest])


def _divisor_text(d: dict) -> str:
    body = ",".join(d["exc"])
    if any(a != "0" for a in d["aff"]):
        body += " | " + ",".join(d["aff"])
    return f"({body})"


def _table(header, rows) -> str:
    widths = [max(len(str(r[k])) for r in [header] + rows) for k in range(len(header))]
    lines = [" | ".join(str(c).rjust(w) for c, w in zip(header, widths)).rstrip()]
    lines.append("-+-".join("-" * w for w in widths))
    for r in rows:
        lines.append(" | ".join(str(c).rjust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def resolution_table(res: ResolutionData) -> str:
    rows = []
    for i in range(res.size):
        prox = ",".join(str(j) for j in res.proximate_to(i))
        rows.append([i, prox or "-", res.canonical[i], res.values_f[i], res.values_g[i], res.values[i],
                     "yes" if res.dicritical[i] else ""])
    out = [f"components: {res.size}",
           _table(["E", "proximate to", "k", "N_f", "N_g", "N", "dicritical"], rows)]
    if res.affine_branches:
        arows = [[j, b.owner, b.attachment, b.class_size, b.n_f, b.n_g]
                 for j, b in enumerate(res.affine_branches)]
        out.append("affine branches:")
        out.append(_table(["B", "owner", "meets E", "conjugates", "N_f", "N_g"], arows))
    out.append("proximity matrix:")
    out.extend(" ".join(f"{v:2d}" for v in row) for row in res.proximity)
    return "\n".join(out)


def threshold_record(res: ResolutionData) -> dict:
    try:
        n = integer_tail_threshold(res)
    except ValueError as exc:
        return {"value": None, "guaranteed": False, "reasons": [str(exc)], "integer_only": is_integer_only(res)}
    return {"value": int(n), "guaranteed": n.guaranteed, "reasons": list(n.reasons),
            "integer_only": is_integer_only(res)}


def threshold_line(t: dict) -> str:
    if t["value"] is None:
        return "integer tail: none (" + "; ".join(t["reasons"]) + ")"
    if t["guaranteed"]:
        return f"integer tail: every jumping number above {t['value']} is an integer"
    return f"integer tail: threshold {t['value']} not guaranteed (" + "; ".join(t["reasons"]) + ")"


def _document(res=None, jumps=None, threshold=None, checks=None) -> dict:
    return {"resolution": res.to_dict() if res is not None else None,
            "jumping_numbers": jumps, "threshold": threshold, "checks": checks}


def _jump_entry(lam, D, gens, res):
    return {"lambda": str(lam), "divisor": D.to_dict(),
            "generators": None if gens is None else [render_generator(h, res) for h in gens]}


def _generators_of(D):
    return generators(D).generators


# -- commands -----------------------------------------------------------------

def cmd_resolve(args, out) -> int:
    res = load_resolution(args)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(res.to_json(indent=1) + "\n")
    if args.format == "structured":
        print(json.dumps(_document(res, threshold=threshold_record(res)), indent=1), file=out)
    else:
        print(resolution_table(res), file=out)
    return EXIT_OK


def cmd_jn(args, out) -> int:
    lam_max = _rational(args.max, "--max")
    res = load_resolution(args, need_charts=args.generators)
    t = threshold_record(res)
    if args.threshold_only:
        if args.format == "structured":
            print(json.dumps(_document(threshold=t), indent=1), file=out)
        else:
            print(threshold_line(t), file=out)
        return EXIT_OK
    entries = []
    if lam_max > 0:
        try:
            for rec in jumping_numbers(res, lam_max):
                gens = _generators_of(rec.divisor) if args.generators else None
                entries.append(_jump_entry(rec.lam, rec.divisor, gens, res))
        except NoZeroPartError as exc:
            raise InputError(str(exc)) from None
    if args.format == "structured":
        print(json.dumps(_document(res, entries, t), indent=1), file=out)
        return EXIT_OK
    header = ["lambda"]
    if args.divisors:
        header.append("divisor")
    if args.generators:
        header.append("generators")
    rows = []
    for e in entries:
        row = [e["lambda"]]
        if args.divisors:
            row.append(_divisor_text(e["divisor"]))
        if args.generators:
            row.append(", ".join(e["generators"]))
        rows.append(row)
    for row in rows:
        print(" | ".join(row), file=out)
    print(threshold_line(t), file=out)
    return EXIT_OK


def cmd_ideal(args, out) -> int:
    lam = _rational(args.lam, "--lambda")
    res = load_resolution(args, need_charts=True)
    D = multiplier_divisor(res, lam)
    gens = _generators_of(D)
    if args.format == "structured":
        print(json.dumps(_document(res, [_jump_entry(lam, D, gens, res)], threshold_record(res)), indent=1),
              file=out)
    else:
        print(f"lambda: {lam}", file=out)
        print(f"divisor: {_divisor_text(D.to_dict())}", file=out)
        print("generators: " + ", ".join(render_generator(h, res) for h in gens), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    res = load_resolution(args)
    lam_max = _rational(args.max, "--max")
    try:
        results = verify(res, lam_max)
    except NoZeroPartError as exc:
        raise InputError(str(exc)) from None
    t = threshold_record(res)
    failed = [c for c in results if not c.ok]
    if args.format == "structured":
        checks = [{"name": c.name, "status": c.status, "detail": c.detail} for c in results]
        print(json.dumps(_document(res, threshold=t, checks=checks), indent=1), file=out)
    else:
        for c in results:
            line = f"{c.status:7s} {c.name}"
            if c.detail and not c.ok or c.skipped:
                line += f"  ({c.detail})"
            print(line, file=out)
        print(threshold_line(t), file=out)
        print(f"integer-only: {'true' if t['integer_only'] else 'false'}", file=out)
        print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=out)
    return EXIT_CHECK if failed else EXIT_OK


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="merojump",
                                     description="Multiplier ideals and jumping numbers of germs f/g in two variables.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-f", help="numerator polynomial, e.g. '(y^2-x^3)^4+x^8*y^5'")
    common.add_argument("-g", help="denominator polynomial (default 1)")
    common.add_argument("--data", help="resolution data file written by 'resolve --output'")
    common.add_argument("--format", choices=("table", "structured"), default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", parents=[common], help="log resolution of f*g and its numerical data")
    p.add_argument("--output", "-o", help="also write the resolution data to this file")
    p.set_defaults(run=cmd_resolve)

    p = sub.add_parser("jn", parents=[common], help="jumping numbers up to --max")
    p.add_argument("--max", default="1", help="largest exponent, exact rational 'p/q' (default 1)")
    p.add_argument("--generators", action="store_true", help="compute generators of each ideal")
    p.add_argument("--divisors", action="store_true", help="show the antinef divisor of each ideal")
    p.add_argument("--threshold-only", action="store_true", help="print only the integer-tail threshold")
    p.set_defaults(run=cmd_jn)

    p = sub.add_parser("ideal", parents=[common], help="multiplier ideal at one exponent")
    p.add_argument("--lambda", dest="lam", required=True, help="exponent, exact rational 'p/q'")
    p.set_defaults(run=cmd_ideal)

    p = sub.add_parser("verify", parents=[common], help="run the property checks")
    p.add_argument("--max", default="2", help="sampling bound for the checks (default 2)")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.run(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, ArithmeticError, RuntimeError) as exc:
        print(f"internal invariant violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
