"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 degenerate input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .binary_forms import DegenerateInputError
from .conic_plane import INF, ConicPoint, PlanePoint
from .labelling import (
    LABELS,
    REPRESENTATIVES,
    BASE_LABEL,
    Label,
    array_of_label,
    fmt_array,
    render_table,
)

EXIT_OK, EXIT_PARSE, EXIT_DEGENERATE = 0, 2, 3

_POINT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-2/3" through as a positional value, like "-2"
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def parse_point(token: str):
    t = token.strip()
    if t.lower() in ("inf", "oo", "infinity"):
        return INF
    if not _POINT_RE.match(t):
        raise InputError(f"bad point {token!r}: expected an integer, a/b or inf")
    try:
        return Fraction(t)
    except ZeroDivisionError:
        raise InputError(f"bad point {token!r}: zero denominator") from None


def parse_quadratic(text: str) -> PlanePoint:
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 3:
        raise InputError(f"bad quadratic {text!r}: expected a0,a1,a2")
    coeffs = [parse_point(x) for x in parts]
    if any(c is INF for c in coeffs):
        raise InputError(f"bad quadratic {text!r}")
    if all(c == 0 for c in coeffs):
        raise DegenerateInputError("zero quadratic")
    return PlanePoint.of(coeffs)


def fmt_value(x) -> str:
    return str(x)


def fmt_triple(coeffs) -> str:
    return "(" + ",".join(str(c) for c in coeffs) + ")"


def _points(tokens, n=6):
    if len(tokens) != n:
        raise InputError(f"expected {n} points, got {len(tokens)}")
    return [parse_point(t) for t in tokens]


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


# -- subcommands -----------------------------------------------------------------


def cmd_table(args) -> int:
    rows = [f"{s}: {fmt_array(array_of_label(s))}" for s in LABELS]
    text = render_table() + "\n\n" + "\n".join(rows)
    from .labelling import LTR, SYNTHEME_OF_LETTER_DUAD, duad, fmt_syntheme

    data = {
        "table": {
            x: {y: fmt_syntheme(SYNTHEME_OF_LETTER_DUAD[duad(x, y)]) for y in LTR if y != x} for x in LTR
        },
        "labels": {str(s): fmt_array(array_of_label(s)) for s in LABELS},
    }
    _emit(args, text, data)
    return EXIT_OK


def _hexad(points):
    from .pascal_engine import Hexad

    return Hexad.from_affine(points, relaxed=True)


def cmd_pascals(args) -> int:
    from .pascal_engine import all_pascals

    h = _hexad(_points(args.points))
    part = all_pascals(h)
    lines = [f"{s}: {fmt_triple(part.lines[s].coeffs)}" for s in LABELS]
    lines.append(f"classes: {part.n_classes}")
    for c in part.nontrivial():
        lines.append("  " + " = ".join(str(s) for s in c))
    data = {
        "points": [str(x) for x in h.affine],
        "poles": {str(s): list(part.lines[s].coeffs) for s in LABELS},
        "classes": [[str(s) for s in c] for c in part.classes],
        "n_classes": part.n_classes,
        "census": {str(k): v for k, v in part.census().items()},
    }
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_classify(args) -> int:
    from .pascal_engine import classify_sextuple

    c = classify_sextuple(_points(args.points))
    text = c.kind
    if c.centres:
        text += " centres=" + " ".join(fmt_triple(q.coeffs) for q in c.centres)
    if c.partition is not None:
        text += f" classes={c.partition.n_classes}"
    data = {
        "kind": c.kind,
        "centres": [list(q.coeffs) for q in c.centres],
        "n_classes": c.partition.n_classes if c.partition else None,
        "coincidences": [[str(s) for s in k] for k in c.partition.nontrivial()] if c.partition else [],
    }
    _emit(args, text, data)
    return EXIT_OK


def _letters(h) -> dict[str, str]:
    return {x: str(z.affine) for x, z in zip("ABCDEF", h.points)}


def cmd_construct(args) -> int:
    from . import configurations as cf

    if args.kind == "involution":
        if args.centre is None:
            raise InputError("construct involution needs --centre a0,a1,a2")
        data = cf.make_involution(parse_quadratic(args.centre), *_points(args.params, 3))
        out = {"points": _letters(data.hexad), "centre": list(data.centre.coeffs), "pascal": list(data.pascal.coeffs)}
        text = " ".join(f"{k}={v}" for k, v in out["points"].items())
        text += f"\ncentre {fmt_triple(data.centre.coeffs)}\npascal {fmt_triple(data.pascal.coeffs)}"
    elif args.kind == "ricochet":
        data = cf.make_ricochet(*_points(args.params, 4))
        out = {
            "points": _letters(data.hexad),
            "V": list(data.V.coeffs),
            "W": list(data.W.coeffs),
            "Z": str(data.Z.affine),
            "pascal": list(data.pascal.coeffs),
        }
        text = " ".join(f"{k}={v}" for k, v in out["points"].items())
        text += f"\nV={fmt_triple(data.V.coeffs)} W={fmt_triple(data.W.coeffs)} Z={data.Z.affine}"
        text += f"\npascal {fmt_triple(data.pascal.coeffs)}"
    else:
        (p,) = _points(args.params, 1)
        if p is INF:
            raise InputError("p must be finite")
        data = cf.make_triple_symmetric(p)
        out = {
            "points": _letters(data.hexad),
            "T": list(data.T.coeffs),
            "centres": {k: list(v.coeffs) for k, v in data.centres.items()},
        }
        text = " ".join(f"{k}={v}" for k, v in out["points"].items())
        text += f"\nT={fmt_triple(data.T.coeffs)} " + " ".join(
            f"{k}={fmt_triple(v.coeffs)}" for k, v in data.centres.items()
        )
    _emit(args, text, out)
    return EXIT_OK


def cmd_covariants(args) -> int:
    from .covariants import all_covariants
    from .pascal_engine import Hexad

    pts = [ConicPoint.from_affine(p) for p in _points(args.points)]
    G = Hexad(tuple(pts), relaxed=True).sextic()
    values = all_covariants(G)
    text = [f"G: {fmt_triple(G.coeffs)}"]
    text += [f"{name}: {fmt_triple(v.coeffs)}" for name, v in values.items()]
    data = {"G": [str(c) for c in G.coeffs]}
    data.update({name: [str(c) for c in v.coeffs] for name, v in values.items()})
    _emit(args, "\n".join(text), data)
    return EXIT_OK


def cmd_scan(args) -> int:
    from .solver import finite_field_scan

    if args.case:
        case = args.case.upper()
        if not case.startswith("I"):
            case = "I" + case
        if case not in REPRESENTATIVES:
            raise InputError(f"unknown case {args.case!r}")
        s, t = BASE_LABEL, REPRESENTATIVES[case]
    else:
        if len(args.labels) != 2:
            raise InputError("scan needs two labels or --case")
        s, t = (Label.parse(x) for x in args.labels)
        if s == t:
            raise InputError("scan needs two different labels")
    if args.prime < 5 or any(args.prime % d == 0 for d in range(2, int(args.prime**0.5) + 1)):
        raise InputError(f"--prime must be a prime >= 5, got {args.prime}")
    report = finite_field_scan(s, t, args.prime)
    _emit(args, report.render(), report.to_dict())
    return EXIT_OK


def cmd_svg(args) -> int:
    from . import configurations as cf
    from . import diagram

    if args.kind == "hexad":
        h = _hexad(_points(args.params))
        arrays = args.array or ["ABC/FED"]
        spec = diagram.hexad_diagram(h, arrays)
    elif args.kind == "ricochet":
        spec = diagram.ricochet_diagram(cf.make_ricochet(*_points(args.params, 4)))
    elif args.kind == "involution":
        if args.centre is None:
            raise InputError("svg involution needs --centre a0,a1,a2")
        spec = diagram.involution_diagram(cf.make_involution(parse_quadratic(args.centre), *_points(args.params, 3)))
    else:
        (p,) = _points(args.params, 1)
        spec = diagram.triple_diagram(cf.make_triple_symmetric(p))
    svg = diagram.render_svg(spec)
    for w in spec.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hexagrammum", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", parents=[common], help="Sylvester table and the 60 labels")
    p.set_defaults(func=cmd_table)

    for name, func, doc in (
        ("pascals", cmd_pascals, "all 60 Pascal poles and their coincidences"),
        ("classify", cmd_classify, "classify a sextuple"),
        ("covariants", cmd_covariants, "the four sextic covariants"),
    ):
        p = sub.add_parser(name, parents=[common], help=doc)
        p.add_argument("points", nargs="+", help="six points: integers, a/b or inf")
        p.set_defaults(func=func)

    p = sub.add_parser("construct", parents=[common], help="synthesize a configuration")
    p.add_argument("kind", choices=["involution", "ricochet", "triple"])
    p.add_argument("params", nargs="+")
    p.add_argument("--centre", help="involution centre as a0,a1,a2")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("scan", parents=[common], help="finite-field scan of a pair of labels")
    p.add_argument("labels", nargs="*", help="two labels such as k(1,23) k(2,13)")
    p.add_argument("--case", help="interference case I1..I9 (representative pair)")
    p.add_argument("--prime", type=int, default=31)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("svg", help="SVG diagram of a configuration")
    p.add_argument("kind", choices=["hexad", "ricochet", "involution", "triple"])
    p.add_argument("params", nargs="+")
    p.add_argument("--centre")
    p.add_argument("--array", action="append", help="array such as ABC/FED (hexad only)")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_svg)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DegenerateInputError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
