"""Command-line front end.

Subcommands: slope, signature, defect, splice, catalog.  Inputs come from
the bundled catalog (--link NAME, override the file with the SLOPE_CATALOG
environment variable) or from files (--pd, --presentation, --ccomplex).
Exact results are printed both symbolically and as decimal approximations;
--json emits a machine-readable report whose values parse back exactly.

Exit codes: 0 success, 2 precondition violation, 3 parse error, and 4 when
`slope --compare A B --at w` certifies the two links as non-concordant.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import CyclotomicElement, RationalFunction, parse_rational
from .catalog import get_entry, load_catalog
from .characters import Character, defect, is_concordance_root, parse_character
from .diagram import ColoredDiagram, Presentation, parse_pd
from .errors import ParseError, PreconditionError
from .fox import SlopeValue, conway_slope, slope_at, slope_symbolic
from .seifert import CComplexData, signature_nullity, slope_c_complex
from .splice import ExtendedReal, parse_extended, splice_sigma_admissible, \
    splice_sigma_generic

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_PARSE = 3
EXIT_NOT_CONCORDANT = 4


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as parse errors (exit 3)."""

    def error(self, message):
        raise ParseError(message)


# -- value formatting ---------------------------------------------------------


def _decimal(z: complex) -> str:
    if abs(z.imag) <= 1e-12:
        return f"{z.real:.6f}"
    return f"{z.real:.6f}{z.imag:+.6f}i"


def value_json(v) -> dict:
    """Exact, machine-reparsable form of a slope/defect value."""
    if isinstance(v, CyclotomicElement):
        if v.is_rational():
            return {"type": "rational", "value": str(v.rational_value())}
        return {"type": "cyclotomic", "conductor": v.n,
                "coeffs": [str(c) for c in v.coeffs]}
    if isinstance(v, (int, Fraction)):
        return {"type": "rational", "value": str(Fraction(v))}
    if isinstance(v, RationalFunction):
        return {"type": "symbolic", "value": str(v)}
    z = complex(v)
    return {"type": "complex", "re": z.real, "im": z.imag}


def value_display(v) -> str:
    if isinstance(v, CyclotomicElement):
        if v.is_rational():
            return str(v.rational_value())
        return f"{v} (= {_decimal(v.to_complex())})"
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    if isinstance(v, RationalFunction):
        return str(v)
    return _decimal(complex(v))


def slope_json(s: SlopeValue) -> dict:
    if s.kind == "finite":
        return {"kind": "finite", "value": value_json(s.value)}
    if s.kind == "infinity":
        return {"kind": "infinity"}
    return {"kind": "undefined", "kernel_dim": s.kernel_dim}


def slope_display(s: SlopeValue) -> str:
    if s.kind == "finite":
        return value_display(s.value)
    if s.kind == "infinity":
        return "infinity"
    return f"undefined (kernel dimension {s.kernel_dim})"


# -- character parsing ---------------------------------------------------------


def parse_at(text: str) -> list:
    """Parse --at: characters separated by ';'.

    Each item goes through the character parser; an item that instead
    looks like a comma list of plain rationals (a non-unitary evaluation
    point for the surface-data route) is kept as a list of Fractions.
    """
    out = []
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        try:
            out.append(parse_character(item))
        except ParseError:
            try:
                out.append([Fraction(p.strip()) for p in item.split(",")])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"cannot parse character {item!r}") from None
    if not out:
        raise ParseError("empty --at list")
    return out


def _at_label(omega) -> str:
    if isinstance(omega, Character):
        return omega.describe()
    return ", ".join(str(x) for x in omega)


# -- input loading ---------------------------------------------------------


def _read_file(path: str) -> str:
    try:
        with open(path) as f:
            return f.read()
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err}") from None


def load_source(args, route: str):
    """Resolve the input flags to a diagram/presentation/surface datum."""
    picked = [k for k in ("link", "pd", "presentation", "ccomplex")
              if getattr(args, k, None)]
    if len(picked) != 1:
        raise ParseError("exactly one of --link/--pd/--presentation/--ccomplex "
                         "is required")
    kind = picked[0]
    if kind == "pd":
        return parse_pd(_read_file(args.pd)), {"kind": "pd", "path": args.pd}
    if kind == "presentation":
        return (Presentation.from_json(_read_file(args.presentation)),
                {"kind": "presentation", "path": args.presentation})
    if kind == "ccomplex":
        try:
            obj = json.loads(_read_file(args.ccomplex))
        except json.JSONDecodeError as err:
            raise ParseError(f"bad surface JSON: {err}") from None
        return (CComplexData.from_json(obj),
                {"kind": "ccomplex", "path": args.ccomplex})
    entry = get_entry(args.link)
    if route == "seifert":
        if not entry.has_format("ccomplex"):
            raise PreconditionError(
                f"catalog entry {entry.name} has no surface datum; "
                f"available formats: {', '.join(entry.formats())}")
        return entry.ccomplex(), {"kind": "catalog", "name": entry.name,
                                  "format": "ccomplex"}
    for fmt in ("pd", "presentation"):
        if entry.has_format(fmt):
            return entry.source(fmt), {"kind": "catalog", "name": entry.name,
                                       "format": fmt}
    raise PreconditionError(
        f"catalog entry {entry.name} has only a surface datum; use --route seifert")


def _apply_swap(src, args):
    if not getattr(args, "swap_roles", False):
        return src
    if isinstance(src, ColoredDiagram):
        return src.swap_roles()
    raise PreconditionError("--swap-roles needs a diagram input")


# -- report emission ---------------------------------------------------------


def emit(report: dict, as_json: bool, lines: list) -> None:
    if as_json:
        print(json.dumps(report, indent=1, sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- slope ---------------------------------------------------------


def _conway_variables(*texts: str) -> tuple:
    import re
    mu = 0
    for text in texts:
        for m in re.finditer(r"\bs(\d+)\b", text):
            mu = max(mu, int(m.group(1)))
    return ("s",) + tuple(f"s{i}" for i in range(1, mu + 1))


def cmd_slope(args) -> int:
    if args.compare:
        return _cmd_compare(args)
    route = args.route
    src, origin = load_source(args, route)
    src = _apply_swap(src, args)
    report = {"command": "slope", "route": route, "input": origin,
              "swap_roles": bool(args.swap_roles)}
    lines = [f"input: {origin.get('name') or origin.get('path')} "
             f"({origin['kind']}), route {route}"]

    if route == "symbolic":
        s = slope_symbolic(src)
        report["symbolic"] = slope_json(s)
        emit(report, args.json, lines + [f"slope: {slope_display(s)}"])
        return EXIT_OK

    if args.at is None:
        raise ParseError(f"route {route} needs --at")
    omegas = []
    for chunk in args.at:
        omegas.extend(parse_at(chunk))

    nabla = nabla_sub = None
    if route == "conway":
        if not args.nabla or not args.nabla_sub:
            raise ParseError("route conway needs --nabla and --nabla-sub")
        variables = _conway_variables(args.nabla, args.nabla_sub)
        nabla = parse_rational(args.nabla, variables)
        nabla_sub = parse_rational(args.nabla_sub, variables)
        report["nabla"] = args.nabla
        report["nabla_sub"] = args.nabla_sub

    results = []
    for omega in omegas:
        label = _at_label(omega)
        if route == "fox":
            if not isinstance(omega, Character):
                raise PreconditionError(
                    f"route fox needs unitary characters, got plain numbers {label!r}")
            s = slope_at(src, omega, tol=args.tol)
        elif route == "seifert":
            if not isinstance(src, CComplexData):
                raise PreconditionError("route seifert needs a surface datum input")
            s = slope_c_complex(src, omega, tol=args.tol)
        elif route == "conway":
            if not isinstance(omega, Character):
                raise PreconditionError(
                    f"route conway needs unitary characters, got {label!r}")
            s = conway_slope(nabla, nabla_sub, omega, tol=args.tol)
        else:
            raise ParseError(f"unknown route {route!r}")
        results.append({"at": label, "slope": slope_json(s)})
        lines.append(f"slope at {label}: {slope_display(s)}")
    report["results"] = results
    emit(report, args.json, lines)
    return EXIT_OK


def _cmd_compare(args) -> int:
    if args.at is None:
        raise ParseError("--compare needs --at")
    omegas = []
    for chunk in args.at:
        omegas.extend(parse_at(chunk))
    if len(omegas) != 1 or not isinstance(omegas[0], Character):
        raise ParseError("--compare needs exactly one unitary character in --at")
    omega = omegas[0]
    name_a, name_b = args.compare
    values = {}
    for name in (name_a, name_b):
        entry = get_entry(name)
        for fmt in ("pd", "presentation"):
            if entry.has_format(fmt):
                src = _apply_swap(entry.source(fmt), args)
                break
        else:
            raise PreconditionError(f"catalog entry {entry.name} has no diagram "
                                    "or presentation to compare")
        values[name] = slope_at(src, omega, tol=args.tol)
    sa, sb = values[name_a], values[name_b]
    differ = slope_json(sa) != slope_json(sb)
    if omega.is_exact():
        root = is_concordance_root(omega)
    else:
        root = "unknown"
    certified = differ and root == "no"
    report = {"command": "compare", "at": omega.describe(),
              "slopes": {name_a: slope_json(sa), name_b: slope_json(sb)},
              "slopes_differ": differ, "concordance_root": root,
              "certified_not_concordant": certified}
    lines = [f"slope of {name_a} at {omega.describe()}: {slope_display(sa)}",
             f"slope of {name_b} at {omega.describe()}: {slope_display(sb)}",
             f"slopes differ: {'yes' if differ else 'no'}",
             f"character is a concordance root: {root}"]
    if certified:
        lines.append(f"certified: {name_a} and {name_b} are not concordant")
    else:
        lines.append("no concordance conclusion")
    emit(report, args.json, lines)
    return EXIT_NOT_CONCORDANT if certified else EXIT_OK


# -- signature ---------------------------------------------------------


def cmd_signature(args) -> int:
    src, origin = load_source(args, "seifert")
    if not isinstance(src, CComplexData):
        raise PreconditionError("signature needs a surface datum input")
    if args.at is None:
        raise ParseError("signature needs --at")
    omegas = []
    for chunk in args.at:
        omegas.extend(parse_at(chunk))
    report = {"command": "signature", "input": origin}
    lines = [f"input: {origin.get('name') or origin.get('path')} (ccomplex)"]
    results = []
    for omega in omegas:
        label = _at_label(omega)
        sig, nul = signature_nullity(src, omega, tol=args.tol)
        results.append({"at": label, "sigma": sig, "nullity": nul})
        lines.append(f"at {label}: sigma = {sig}, nullity = {nul}")
    report["results"] = results
    emit(report, args.json, lines)
    return EXIT_OK


# -- defect ---------------------------------------------------------


def cmd_defect(args) -> int:
    try:
        lam = tuple(int(x) for x in args.lam.split(","))
    except ValueError:
        raise ParseError(f"cannot parse --lambda {args.lam!r}") from None
    omegas = []
    for chunk in args.at:
        omegas.extend(parse_at(chunk))
    report = {"command": "defect", "lambda": list(lam)}
    lines = []
    results = []
    for omega in omegas:
        if not isinstance(omega, Character):
            raise PreconditionError("defect needs unitary characters")
        d = defect(lam, omega)
        results.append({"at": omega.describe(), "defect": d})
        lines.append(f"defect at {omega.describe()}: {d}")
    report["results"] = results
    emit(report, args.json, lines)
    return EXIT_OK


# -- splice ---------------------------------------------------------


def cmd_splice(args) -> int:
    text = sys.stdin.read() if args.input == "-" else _read_file(args.input)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"bad splice JSON: {err}") from None
    if not isinstance(obj, dict) or len(obj) != 1 or \
            next(iter(obj)) not in ("generic", "admissible"):
        raise ParseError('splice input must be {"generic": {...}} or '
                         '{"admissible": {...}}')
    mode, payload = next(iter(obj.items()))

    def _pair(key, parse=lambda x: x):
        try:
            a, b = payload[key]
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"splice {mode!r} input needs a 2-element {key!r}") \
                from None
        return parse(a), parse(b)

    if mode == "generic":
        sig1, sig2 = _pair("sigma", int)
        nul1, nul2 = _pair("nullity", int)
        lam1, lam2 = _pair("lambda", lambda v: tuple(int(x) for x in v))
        def _omega(v):
            if not isinstance(v, str):
                raise ParseError("splice omega entries must be character strings")
            return parse_character(v)

        om1, om2 = _pair("omega", _omega)
        sigma, nullity = splice_sigma_generic(sig1, sig2, nul1, nul2,
                                              lam1, lam2, om1, om2)
        report = {"command": "splice", "mode": "generic",
                  "sigma": sigma, "nullity": nullity}
        lines = [f"splice signature: {sigma}", f"splice nullity: {nullity}"]
        emit(report, args.json, lines)
        return EXIT_OK

    sig1, sig2 = _pair("sigma", int)
    nul1, nul2 = _pair("nullity", int)
    d1, d2 = _pair("defect", int)

    def _rho(v):
        if isinstance(v, str):
            return parse_extended(v)
        return ExtendedReal.finite(Fraction(v) if not isinstance(v, float) else v)

    r1, r2 = _pair("rho", _rho)
    sigma, detail = splice_sigma_admissible(sig1, sig2, nul1, nul2,
                                            d1, d2, r1, r2)
    report = {"command": "splice", "mode": "admissible", "sigma": sigma,
              "delta_sigma": detail["delta_sigma"],
              "nullity_bounds": detail["nullity_bounds"],
              "region": detail["region"], "status": detail["status"]}
    lines = [f"splice signature: {sigma}",
             f"signature correction: {detail['delta_sigma']}",
             f"nullity within {detail['nullity_bounds']}",
             f"hyperbola region: {detail['region']}"]
    emit(report, args.json, lines)
    return EXIT_OK


# -- catalog ---------------------------------------------------------


def cmd_catalog(args) -> int:
    catalog = load_catalog()
    entries = [catalog[name] for name in sorted(catalog)]
    if args.json:
        report = {"command": "catalog",
                  "entries": [{"name": e.name, "kind": e.kind,
                               "formats": list(e.formats()),
                               "aliases": list(e.aliases),
                               "notes": e.notes,
                               "expected": e.expected}
                              for e in entries]}
        print(json.dumps(report, indent=1, sort_keys=True))
        return EXIT_OK
    for e in entries:
        alias = f" (aka {', '.join(e.aliases)})" if e.aliases else ""
        fmts = ", ".join(e.formats())
        print(f"{e.name}{alias}: {fmts}; {e.notes}")
    return EXIT_OK


# -- entry point ---------------------------------------------------------


def build_parser() -> _Parser:
    top = _Parser(prog="linkslope",
                  description="slopes, signatures and splice bookkeeping "
                              "for links with a distinguished component")
    sub = top.add_subparsers(dest="cmd", required=True)

    def add_input(p):
        p.add_argument("--link", help="catalog entry name")
        p.add_argument("--pd", help="file with a planar diagram code")
        p.add_argument("--presentation", help="file with a presentation JSON")
        p.add_argument("--ccomplex", help="file with a surface datum JSON")
        p.add_argument("--tol", type=float, default=1e-9,
                       help="numeric tolerance (default 1e-9)")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")

    p = sub.add_parser("slope", help="slope of the distinguished component")
    add_input(p)
    p.add_argument("--route", choices=("fox", "seifert", "conway", "symbolic"),
                   default="fox")
    p.add_argument("--at", action="append",
                   help="character list, e.g. 'zeta(2),zeta(2)'; separate "
                        "several characters with ';'")
    p.add_argument("--swap-roles", action="store_true",
                   help="exchange the distinguished and colored components")
    p.add_argument("--compare", nargs=2, metavar=("A", "B"),
                   help="compare two catalog entries at --at; exit 4 when "
                        "certified not concordant")
    p.add_argument("--nabla", help="link potential for --route conway")
    p.add_argument("--nabla-sub", help="sublink potential for --route conway")
    p.set_defaults(fn=cmd_slope)

    p = sub.add_parser("signature", help="twisted signature and nullity")
    add_input(p)
    p.add_argument("--at", action="append", required=True)
    p.set_defaults(fn=cmd_signature)

    p = sub.add_parser("defect", help="integer defect of a character")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="linking vector, e.g. '1,1'")
    p.add_argument("--at", action="append", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_defect)

    p = sub.add_parser("splice", help="assemble splice signature data")
    p.add_argument("--input", required=True,
                   help="JSON file ('-' for stdin)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_splice)

    p = sub.add_parser("catalog", help="list the bundled examples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_catalog)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as err:
        print(f"precondition violated: {err}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
