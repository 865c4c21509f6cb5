"""Command-line interface: ``liegeo <command> ...``.

Exit codes: 0 success, 1 semantic failure, 2 parse or argument error,
3 unsupported flag-curvature case.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    StructureConstants,
    extract_adapted,
    load_structure,
    validate_structure,
)
from .catalog import CATALOG_NAMES, catalog_entry
from .errors import (
    BadCaseArgsError,
    CaseUnsupportedError,
    DimensionMismatchError,
    DriftNormError,
    LieGeoError,
    MalformedInputError,
    NotBerwaldError,
    ZeroVectorError,
)
from .randers import (
    FlagQuery,
    RandersSpec,
    berwald_drift_space,
    classify,
    flag_curvature,
    lookup_case,
    parallel_drift_space,
)
from .report import (
    base_payload,
    dumps,
    fmt_number,
    make_report,
    randers_payload,
    render_text,
    tangent_payload,
    validation_payload,
)
from .verify import full_verify

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_UNSUPPORTED = 0, 1, 2, 3
LIFT_NAMES = {"none": "none", "c": "complete", "complete": "complete", "v": "vertical", "vertical": "vertical"}
CATALOG_PREFIX = "catalog:"


class UsageError(Exception):
    """Bad command-line argument (exit 2)."""


def env_tolerance() -> float:
    raw = os.environ.get("LIEGEO_TOL")
    if raw is None or raw.strip() == "":
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"LIEGEO_TOL must be a number, got {raw!r}") from None
    if not tol > 0:
        raise UsageError("LIEGEO_TOL must be positive")
    return tol


def read_algebra(source: str) -> StructureConstants:
    """Load from a JSON path, or ``catalog:NAME`` for a built-in entry."""
    if source.startswith(CATALOG_PREFIX):
        name = source[len(CATALOG_PREFIX):]
        try:
            return catalog_entry(name)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    try:
        return load_structure(source)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def parse_vector(text: str, what: str = "vector") -> np.ndarray:
    try:
        vals = [float(t) for t in re.split(r"[,\s;]+", text.strip().strip("[]")) if t]
    except ValueError:
        raise UsageError(f"cannot parse {what} {text!r}") from None
    if not vals:
        raise UsageError(f"empty {what}")
    return np.array(vals)


_TOKEN = re.compile(r"^(?:\[(?P<coords>[^\]]*)\]|(?P<label>[A-Za-z_][A-Za-z_0-9]*?))(?P<kind>[cv])$")


def parse_token(token: str, labels) -> tuple[str, np.ndarray | None, str]:
    """Split a tangent token into (``e1``/``e2``/``P``, P-coordinates or None, lift letter).

    Accepted forms: ``e1c``, ``e2v``, ``Y1c`` (any basis label of P plus c/v) and
    ``[x;y;z]v`` with coordinates in P.
    """
    m = _TOKEN.match(token.strip())
    if not m:
        raise UsageError(f"bad tangent token {token!r}")
    kind = m.group("kind")
    k = len(labels) - 2
    if m.group("coords") is not None:
        p = parse_vector(m.group("coords"), "P-vector")
        if p.shape != (k,):
            raise UsageError(f"P-vector in {token!r} needs {k} coordinates")
        return "P", p, kind
    label = m.group("label")
    if label not in labels:
        raise UsageError(f"unknown basis label {label!r} in {token!r}")
    i = labels.index(label)
    if i < 2:
        return f"e{i + 1}", None, kind
    p = np.zeros(k)
    p[i - 2] = 1.0
    return "P", p, kind


def resolve_plane(tokens, flagpole: str, labels):
    """Map concrete tokens to the case-table pattern (``uc``, ``vv``, ``e1c`` ...) plus ``u, v``."""
    parsed = [parse_token(t, labels) for t in tokens]
    pole = parse_token(flagpole, labels)
    u = v = None
    names = []
    for base, p, kind in parsed:
        if base != "P":
            names.append(base + kind)
        elif u is None or np.allclose(p, u):
            u = p if u is None else u
            names.append("u" + kind)
        else:
            v = p
            names.append("v" + kind)
    pole_name = None
    for (base, p, kind), name in zip(parsed, names):
        if base == pole[0] and kind == pole[2] and (base != "P" or np.allclose(p, pole[1])):
            pole_name = name
    if pole_name is None:
        raise CaseUnsupportedError(f"flagpole {flagpole} is not one of the plane tokens")
    return tuple(names), pole_name, u, v


def _emit(report: dict, as_json: bool):
    print(dumps(report) if as_json else render_text(report))


def _validated(sc, tol):
    rep = validate_structure(sc, tol)
    return rep, (extract_adapted(sc, tol) if rep.passed else None)


def cmd_validate(args, tol):
    sc = read_algebra(args.path)
    rep, _ = _validated(sc, tol)
    _emit(make_report("validation", validation_payload(sc, rep), tol), args.json)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _require(sc, tol, as_json):
    rep, ad = _validated(sc, tol)
    if ad is None:
        _emit(make_report("validation", validation_payload(sc, rep), tol), as_json)
    return ad


def cmd_base(args, tol):
    sc = read_algebra(args.path)
    ad = _require(sc, tol, args.json)
    if ad is None:
        return EXIT_FAIL
    _emit(make_report("base", base_payload(sc, ad, tol), tol), args.json)
    return EXIT_OK


def cmd_tangent(args, tol):
    sc = read_algebra(args.path)
    ad = _require(sc, tol, args.json)
    if ad is None:
        return EXIT_FAIL
    _emit(make_report("tangent", tangent_payload(sc, ad, tol), tol), args.json)
    return EXIT_OK


def _spec(args, sc, ad):
    drift = parse_vector(args.drift, "drift")
    if drift.shape != (sc.n,):
        raise UsageError(f"drift needs {sc.n} coordinates, got {drift.size}")
    return RandersSpec(ad, drift, LIFT_NAMES[args.lift])


def cmd_randers(args, tol):
    sc = read_algebra(args.path)
    ad = _require(sc, tol, args.json)
    if ad is None:
        return EXIT_FAIL
    spec = _spec(args, sc, ad)
    cls = classify(spec, tol)
    extra = {
        "berwald_drift_space": berwald_drift_space(ad, spec.lift, tol).T,
        "parallel_drift_space": parallel_drift_space(ad, spec.lift, tol).T,
    }
    _emit(make_report("randers", randers_payload(spec.lift, spec.drift, cls, extra), tol), args.json)
    return EXIT_OK


def cmd_flag(args, tol):
    sc = read_algebra(args.path)
    ad = _require(sc, tol, args.json)
    if ad is None:
        return EXIT_FAIL
    spec = _spec(args, sc, ad)
    tokens = [t for t in args.plane.split(",") if t]
    if len(tokens) != 2:
        raise UsageError("--plane takes exactly two comma-separated tokens")
    pattern, pole, u, v = resolve_plane(tokens, args.flagpole, sc.labels)
    lookup_case(spec.lift, pattern, pole)
    case, value = flag_curvature(spec, FlagQuery(pattern, pole, u, v), tol)
    payload = {
        "lift": spec.lift, "plane": tokens, "flagpole": args.flagpole, "pattern": list(pattern),
        "pattern_flagpole": pole, "case": case, "value": value, "value_text": fmt_number(value),
    }
    _emit(make_report("flag", payload, tol), args.json)
    return EXIT_OK


def cmd_verify(args, tol):
    if args.tolerance is not None:
        tol = args.tolerance
    sc = read_algebra(args.path)
    rep, ad = _validated(sc, tol)
    if ad is None:
        _emit(make_report("validation", validation_payload(sc, rep), tol), args.json)
        return EXIT_FAIL
    dev = full_verify(sc, tol)
    _emit(make_report("verify", dev.to_dict(), tol), args.json)
    return EXIT_OK if dev.passed else EXIT_FAIL


def cmd_catalog(args, tol):
    if args.list:
        for name in CATALOG_NAMES:
            print(name)
        return EXIT_OK
    try:
        sc = catalog_entry(args.emit)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    text = json.dumps(sc.to_json_dict(), indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liegeo",
        description="Geometry of Lie groups with a two-dimensional derived algebra and their tangent groups.",
        epilog="Inputs are JSON structure-constant files or catalog:NAME. "
               "LIEGEO_TOL overrides the default tolerance 1e-9.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_path(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", help="structure-constant JSON file or catalog:NAME")
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        return p

    with_path("validate", "check Jacobi and the derived-algebra conditions").set_defaults(func=cmd_validate)
    with_path("base", "connection, curvature and algebraic summary of G").set_defaults(func=cmd_base)
    with_path("tangent", "curvature of the tangent group TG").set_defaults(func=cmd_tangent)

    for name, func, help_text in (("randers", cmd_randers, "classify a Randers drift"),
                                  ("flag", cmd_flag, "flag curvature of a Berwald lift")):
        p = with_path(name, help_text)
        p.add_argument("--drift", required=True, help="drift coordinates in the base basis, e.g. 0,0,0,0,0.5")
        p.add_argument("--lift", choices=sorted(LIFT_NAMES), default="none" if name == "randers" else "c")
        if name == "flag":
            p.add_argument("--plane", required=True, help="two tokens, e.g. e1c,Y1v or e2c,[1;0;0]c")
            p.add_argument("--flagpole", required=True, help="one of the plane tokens")
        p.set_defaults(func=func)

    p = with_path("verify", "compare every closed form with the brute-force oracle")
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list or emit built-in algebras")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--emit", metavar="NAME")
    p.add_argument("-o", "--output", help="write the emitted JSON here")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = env_tolerance()
        return args.func(args, tol)
    except (UsageError, MalformedInputError, BadCaseArgsError, DimensionMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CaseUnsupportedError as exc:
        print(f"unsupported case: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (NotBerwaldError, DriftNormError, ZeroVectorError) as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except LieGeoError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
