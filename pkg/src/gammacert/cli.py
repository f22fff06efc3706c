"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 pole of Gamma (``compute``)
or malformed input, 3 argument outside the command's domain.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import numeric
from .cache import default_cache_path, load_cache, store_cache
from .constants import from_zeta
from .exact import HalfInteger, PoleError, parse_fraction
from .gamma import taylor
from .verify import SCHEMA_VERSION, verify_theorem1, verify_theorem2

EXIT_OK, EXIT_FAIL, EXIT_POLE, EXIT_DOMAIN = 0, 1, 2, 3

log = logging.getLogger("gammacert")


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fraction_arg(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _is_pole(q: Fraction) -> bool:
    return q <= 0 and q.denominator == 1


def _half(q: Fraction) -> HalfInteger | None:
    return HalfInteger.of(q) if (2 * q).denominator == 1 else None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gammacert", description="Taylor coefficients of Gamma at rational points and their reflection identities.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")
    common.add_argument("--cache", type=Path, default=None, help="Bernoulli/Euler table cache file (default: $GAMMACERT_CACHE or the user cache dir)")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the table cache")
    common.add_argument("--prec", type=int, default=256, help="working precision in bits (default 256)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="print Gamma^(n)(q) for n <= N")
    p.add_argument("--q", type=_fraction_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--numeric", action="store_true", help="also (or only, for q outside (1/2)Z) print numeric values")

    for name, helptext in (("verify1", "check the exact c_j identities at q in (1/2)Z"), ("certificate", "print the triangular pi-power certificate")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--q", type=_fraction_arg, required=True)
        p.add_argument("--jmax", type=int, required=True)

    p = sub.add_parser("verify2", parents=[common], help="check the reflection identity at q outside (1/2)Z")
    p.add_argument("--q", type=_fraction_arg, required=True)
    p.add_argument("--jmax", type=int, required=True)

    p = sub.add_parser("constants", parents=[common], help="print gamma, ln 2, pi and zeta(k) numerically")
    p.add_argument("--kmax", type=int, default=9, help="largest zeta argument (default 9)")
    return parser


def _cmd_compute(args) -> tuple[int, dict, str]:
    q = args.q
    if args.n < 0:
        raise _Exit(EXIT_DOMAIN, "--n must be non-negative")
    if _is_pole(q):
        raise _Exit(EXIT_POLE, f"Gamma has a pole at q = {_frac_str(q)}")
    half = _half(q)
    if half is None and not args.numeric:
        raise _Exit(
            EXIT_DOMAIN,
            f"symbolic output is only available for q in (1/2)Z; q = {_frac_str(q)} needs --numeric",
        )
    rows = []
    lines = []
    sym = taylor(half, args.n) if half is not None else None
    num = numeric.gamma_taylor_numeric(q, args.n, args.prec) if args.numeric else None
    for n in range(args.n + 1):
        row: dict = {"n": n}
        text = f"G^({n})({_frac_str(q)}) ="
        if sym is not None:
            d = sym.derivative(n)
            row["symbolic"] = d.render()
            row["terms"] = d.to_json()
            text += f" {d.render()}"
        if num is not None:
            v = numeric.to_decimal(num.derivative(n), max(10, int(args.prec * 0.30103) - 2))
            row["numeric"] = v
            text += f" ~ {v}" if sym is not None else f" {v}"
        rows.append(row)
        lines.append(text)
    report = {"schema_version": SCHEMA_VERSION, "kind": "taylor", "q": _frac_str(q), "n_max": args.n, "prec": args.prec if num else None, "derivatives": rows}
    return EXIT_OK, report, "\n".join(lines)


def _cmd_verify1(args, certificate: bool) -> tuple[int, dict, str]:
    q = args.q
    half = _half(q)
    if half is None or _is_pole(q):
        raise _Exit(EXIT_DOMAIN, f"q = {_frac_str(q)} is not in (1/2)Z minus the non-positive integers")
    if args.jmax < 0:
        raise _Exit(EXIT_DOMAIN, "--jmax must be non-negative")
    rep = verify_theorem1(half, args.jmax)
    data = rep.to_json()
    lines = [f"q = {half}, xi = {rep.xi}, j = 0..{args.jmax}: {'PASS' if rep.passed else 'FAIL'}"]
    if certificate or not rep.passed:
        for j, row in enumerate(rep.rows):
            e, c = rep.leading_entries[j]
            body = row.to_const().render()
            lines.append(f"  c_{j}: {body}    [leading p^{_frac_str(e)} coeff {_frac_str(c)}]")
    for f in rep.failures:
        lines.append(f"  failure: {json.dumps(f, sort_keys=True)}")
    return (EXIT_OK if rep.passed else EXIT_FAIL), data, "\n".join(lines)


def _cmd_verify2(args) -> tuple[int, dict, str]:
    q = args.q
    if (2 * q).denominator == 1:
        raise _Exit(EXIT_DOMAIN, f"q = {_frac_str(q)} lies in (1/2)Z; use verify1 there")
    if args.jmax < 0:
        raise _Exit(EXIT_DOMAIN, "--jmax must be non-negative")
    rep = verify_theorem2(q, args.jmax, args.prec)
    lines = [f"q = {_frac_str(q)}, j = 0..{args.jmax}, {args.prec} bits: {'PASS' if rep.all_agree else 'FAIL'}; non-zero d_j: {rep.nonzero_count}/{args.jmax + 1}"]
    for r in rep.rows:
        lines.append(f"  j={r['j']:3d}  d_j*pi^(j+1) = {r['lhs']}  rel_err = {r['rel_err']}  {'ok' if r['agree'] else 'MISMATCH'}")
    return (EXIT_OK if rep.all_agree else EXIT_FAIL), rep.to_json(), "\n".join(lines)


def _cmd_constants(args) -> tuple[int, dict, str]:
    digits = max(10, int(args.prec * 0.30103) - 2)
    vals = {
        "gamma": numeric.const_gamma(args.prec),
        "ln2": numeric.const_ln2(args.prec),
        "pi": numeric.const_pi(args.prec),
    }
    for k in range(2, args.kmax + 1):
        vals[f"zeta({k})"] = numeric.const_zeta(k, args.prec)
    rendered = {name: numeric.to_decimal(v, digits) for name, v in vals.items()}
    exact = {f"zeta({k})": from_zeta(k).render() for k in range(2, args.kmax + 1)}
    report = {"schema_version": SCHEMA_VERSION, "kind": "constants", "prec": args.prec, "values": rendered, "symbolic": exact}
    lines = [f"{name:10s} {v}" + (f"   = {exact[name]}" if name in exact and not exact[name].startswith("z") else "") for name, v in rendered.items()]
    return EXIT_OK, report, "\n".join(lines)


def _table_size(args) -> int:
    if args.command == "compute":
        return 2 * args.n + 2
    if args.command in ("verify1", "certificate", "verify2"):
        return 2 * args.jmax + 2
    return 2 * args.kmax


def _glue_negative_q(argv: list[str]) -> list[str]:
    # argparse treats "-3/2" as an option flag; rewrite "--q -3/2" as "--q=-3/2"
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--q":
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"--q={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(format="gammacert: %(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(_glue_negative_q(sys.argv[1:] if argv is None else list(argv)))
    if args.prec < numeric.MIN_PREC:
        parser.error(f"--prec must be at least {numeric.MIN_PREC}")

    cache_path = None if args.no_cache else (args.cache or default_cache_path())
    loaded = load_cache(cache_path) if cache_path else 0

    try:
        if args.command == "compute":
            code, report, text = _cmd_compute(args)
        elif args.command == "verify1":
            code, report, text = _cmd_verify1(args, certificate=False)
        elif args.command == "certificate":
            code, report, text = _cmd_verify1(args, certificate=True)
        elif args.command == "verify2":
            code, report, text = _cmd_verify2(args)
        else:
            code, report, text = _cmd_constants(args)
    except _Exit as exc:
        print(f"gammacert: {exc}", file=sys.stderr)
        return exc.code
    except PoleError as exc:
        print(f"gammacert: {exc}", file=sys.stderr)
        return EXIT_POLE
    except numeric.PrecisionError as exc:
        print(f"gammacert: {exc}; raise --prec", file=sys.stderr)
        return EXIT_FAIL

    if cache_path:
        store_cache(cache_path, max(_table_size(args), loaded - 1))

    out = json.dumps(report, indent=2, sort_keys=True) + "\n" if args.format == "json" else text + "\n"
    if args.out:
        args.out.write_text(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
