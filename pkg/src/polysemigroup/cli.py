"""Command line entry point: ``polysemigroup <command> ...``.

JSON goes to stdout.  Exit status is 0 on success, 2 when the answer needs
a field extension, 1 on bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .classify import Verdict, classify_poly, classify_rational, classify_series, common_fixed_points
from .errors import ParseError, SemigroupError
from .field import parse_field_spec
from .parsing import parse_constant, parse_expression
from .poly import Polynomial, chebyshev
from .rational import RationalFunction
from .semigroup import Relation, relation_from_words, search_relations, verify_relation
from .series import DEFAULT_PRECISION, INFINITY, TruncatedSeries, boettcher

EXIT_OK, EXIT_INPUT, EXIT_EXTENSION = 0, 1, 2


def _read_inputs(values: list[str]) -> list[str]:
    if "-" not in values:
        return values
    lines = [ln.strip() for ln in sys.stdin.read().splitlines() if ln.strip()]
    out = []
    for v in values:
        if v == "-":
            if not lines:
                raise ParseError("stdin ran out of expressions")
            out.append(lines.pop(0))
        else:
            out.append(v)
    return out


def _poly_or_rational(text, field):
    value = parse_expression(text, field)
    return value


_BIG_O = re.compile(r"\+\s*O\(\s*X\s*\^\s*(\d+)\s*\)\s*$")


def _parse_series(text, field, precision, truncated):
    m = _BIG_O.search(text)
    if m:
        N = int(m.group(1)) - 1
        text = text[: m.start()]
        P = parse_expression(text, field)
        if not isinstance(P, Polynomial):
            raise ParseError("series body must be a polynomial", 0)
        return TruncatedSeries(field, P.coeffs, N) if P.degree <= N else TruncatedSeries(field, P.coeffs[: N + 1], N)
    P = parse_expression(text, field)
    if not isinstance(P, Polynomial):
        raise ParseError("series body must be a polynomial", 0)
    if truncated:
        return TruncatedSeries(field, P.coeffs[: precision + 1], precision)
    return TruncatedSeries.from_polynomial(P, precision)


def _emit(payload, args, text_lines=None):
    if args.output == "text" or args.pretty:
        if text_lines is None:
            text_lines = [json.dumps(payload, indent=2)]
        print("\n".join(text_lines))
    else:
        print(json.dumps(payload))


def _classification_text(c):
    lines = [f"verdict: {c.verdict}"]
    if c.case is not None:
        lines.append(f"case: {c.case}")
    if c.canonical_pair is not None:
        lines.append(f"canonical pair: {c.canonical_pair[0]}  |  {c.canonical_pair[1]}")
    if c.normalizer is not None:
        lines.append(f"normalizer: {c.normalizer}")
    if c.witness is not None:
        flag = "verified" if c.witness.verified else "to precision"
        lines.append(f"witness: {c.witness}  (degree {c.witness.degree}, {flag})")
    if c.extension is not None:
        lines.append(f"extension: {c.extension.defining_relation} over {c.extension.base}")
    if c.commuting_r is not None:
        lines.append(f"commuting r: {c.commuting_r}")
    for note in c.notes:
        lines.append(f"note: {note}")
    return lines


def _cmd_classify(args):
    field = parse_field_spec(args.field)
    f_text, g_text = _read_inputs([args.F, args.G])
    F, G = _poly_or_rational(f_text, field), _poly_or_rational(g_text, field)
    if args.beta is None and isinstance(F, Polynomial) and isinstance(G, Polynomial):
        c = classify_poly(F, G)
    else:
        if args.beta is None:
            candidates = [b for b in common_fixed_points(F, G)]
            if not candidates:
                raise ParseError("no common fixed point found; pass --beta", 0)
            beta = candidates[0]
        elif args.beta.strip().lower() in ("inf", "infinity", "oo"):
            beta = INFINITY
        else:
            beta = parse_constant(args.beta, field)
        c = classify_rational(F, G, beta, args.precision)
    _emit(c.to_json(), args, _classification_text(c))
    return EXIT_EXTENSION if c.verdict == Verdict.NEEDS_EXTENSION else EXIT_OK


def _cmd_series_classify(args):
    field = parse_field_spec(args.field)
    f_text, g_text = _read_inputs([args.F, args.G])
    F = _parse_series(f_text, field, args.precision, args.truncated)
    G = _parse_series(g_text, field, args.precision, args.truncated)
    c = classify_series(F, G)
    _emit(c.to_json(), args, _classification_text(c))
    return EXIT_EXTENSION if c.verdict == Verdict.NEEDS_EXTENSION else EXIT_OK


def _cmd_relations(args):
    field = parse_field_spec(args.field)
    f_text, g_text = _read_inputs([args.F, args.G])
    F, G = parse_expression(f_text, field), parse_expression(g_text, field)
    if not (isinstance(F, Polynomial) and isinstance(G, Polynomial)):
        raise ParseError("relations needs polynomial inputs", 0)
    rels = search_relations(F, G, args.bound, max_relations=args.max, jobs=args.jobs)
    payload = {"field": str(field), "F": str(F), "G": str(G), "bound": args.bound,
               "count": len(rels), "relations": [r.to_json() for r in rels]}
    lines = [f"{len(rels)} relations up to degree {args.bound}"]
    lines += [f"[{r.degree}] {r}" for r in rels]
    _emit(payload, args, lines)
    return EXIT_OK


def _cmd_verify(args):
    field = parse_field_spec(args.field)
    f_text, g_text = _read_inputs([args.F, args.G])
    F, G = parse_expression(f_text, field), parse_expression(g_text, field)
    if not (isinstance(F, Polynomial) and isinstance(G, Polynomial)):
        raise ParseError("verify needs polynomial inputs", 0)
    lhs, rhs = args.lhs.replace(" ", ""), args.rhs.replace(" ", "")
    try:
        rel = relation_from_words(lhs, rhs, F.degree, G.degree)
        ok = verify_relation(rel, F, G)
    except ValueError:
        rel = Relation(lhs, rhs, 0)
        ok = False
    out = Relation(rel.lhs, rel.rhs, rel.degree, ok)
    _emit(out.to_json(), args, [f"{out}: {'holds' if ok else 'fails'}"])
    return EXIT_OK


def _cmd_boettcher(args):
    field = parse_field_spec(args.field)
    (f_text,) = _read_inputs([args.F])
    F = _parse_series(f_text, field, args.precision, args.truncated)
    if args.root is None:
        from .field import ExtensionRequest, nth_root_or_request
        m = F.lowest_degree
        root = nth_root_or_request(F.lowest_coeff.inverse(), m - 1)
        if isinstance(root, ExtensionRequest):
            payload = {"verdict": "NeedsExtension", "extension": root.to_json()}
            _emit(payload, args, [f"needs {root.defining_relation} over {root.base}"])
            return EXIT_EXTENSION
    else:
        root = parse_constant(args.root, field)
    L = boettcher(F, root, args.precision)
    _emit(L.to_json() | {"series": str(L)}, args, [str(L)])
    return EXIT_OK


def _cmd_chebyshev(args):
    field = parse_field_spec(args.field)
    T = chebyshev(args.m, field)
    _emit({"m": args.m, "field": str(field), "T": str(T)}, args, [str(T)])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help="Q, Q(zeta:k), GF(p) or GF(p^e:c0,...,ce)")
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--pretty", action="store_true", help="human readable output")

    parser = argparse.ArgumentParser(prog="polysemigroup",
                                     description="Freeness of composition semigroups generated by two maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a polynomial or rational pair")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("--beta", help="common fixed point for rational maps (a constant or 'inf')")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("relations", parents=[common], help="search for relations by degree")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("--bound", type=int, default=10**4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max", type=int, default=None, help="stop after this many relations")
    p.set_defaults(func=_cmd_relations)

    p = sub.add_parser("verify", parents=[common], help="check a relation exactly")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("lhs", help="word over F, G, outermost letter first")
    p.add_argument("rhs")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("boettcher", parents=[common], help="Boettcher conjugator of a series")
    p.add_argument("F")
    p.add_argument("--root", help="value of L'(0); defaults to the first (m-1)-th root of 1/alpha_m")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--truncated", action="store_true", help="treat the input as known only to the precision")
    p.set_defaults(func=_cmd_boettcher)

    p = sub.add_parser("chebyshev", parents=[common], help="print T_m")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_chebyshev)

    p = sub.add_parser("series-classify", parents=[common], help="classify a pair of power series")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--truncated", action="store_true", help="treat inputs as known only to the precision")
    p.set_defaults(func=_cmd_series_classify)
    return parser


def _shield_negatives(argv):
    # "-X^3+3*X" would look like an option to argparse; a leading space keeps
    # it positional and the expression parser ignores the space
    out = []
    for a in argv:
        if len(a) > 1 and a[0] == "-" and a[1] != "-" and a != "-h":
            a = " " + a
        out.append(a)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_shield_negatives(argv))
    try:
        return args.func(args)
    except (SemigroupError, ValueError, ZeroDivisionError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
