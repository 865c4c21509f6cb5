"""Report assembly and serialization (JSON with 17 significant digits, or text)."""
from __future__ import annotations

import json
import math
from fractions import Fraction
from importlib import metadata

import numpy as np

from .algebra import DEFAULT_TOL, AdaptedData, StructureConstants, ValidationReport
from .base import (
    biinvariance_obstruction,
    connection_base,
    curvature_base,
    derived_geodesic_directions,
    is_unimodular,
    ricci_base,
    sectional,
)
from .randers import Classification
from .tangent import (
    RICCI_ENTRIES,
    curvature_relations,
    ricci_tangent_closed,
    tangent_geometry,
)
from .verify import reference_deviations

REPORT_KINDS = ("validation", "base", "tangent", "randers", "flag", "verify")
FRACTION_TOL = 1e-12
MAX_DENOMINATOR = 64


def tool_version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0+unknown"


def make_report(kind: str, payload: dict, tol: float) -> dict:
    if kind not in REPORT_KINDS:
        raise ValueError(f"unknown report kind {kind!r}")
    return {"kind": kind, "tool_version": tool_version(), "tolerance": float(tol), "payload": payload}


# -- serialization -------------------------------------------------------------

def _plain(obj):
    """Convert numpy containers and scalars to builtin types."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, Fraction):
        return float(obj)
    return obj


def _encode(obj, indent: int, level: int) -> str:
    pad = "\n" + " " * (indent * (level + 1))
    end = "\n" + " " * (indent * level)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        text = format(obj, ".17g")
        # keep a float marker so the value round-trips as a float
        return text if any(ch in text for ch in ".e") else text + ".0"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{json.dumps(k)}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{" + pad + ("," + pad).join(items) + end + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        return "[" + pad + ("," + pad).join(_encode(v, indent, level + 1) for v in obj) + end + "]"
    return json.dumps(obj)


def dumps(report: dict, indent: int = 2) -> str:
    """JSON text where every real carries 17 significant digits."""
    return _encode(_plain(report), indent, 0)


def as_fraction(x: float) -> Fraction | None:
    """Nearby rational with denominator <= 64, when within 1e-12."""
    if not math.isfinite(x):
        return None
    f = Fraction(x).limit_denominator(MAX_DENOMINATOR)
    return f if abs(float(f) - x) <= FRACTION_TOL else None


def fmt_number(x: float) -> str:
    f = as_fraction(float(x))
    if f is None:
        return f"{x:.12g}"
    return str(f)


def render_text(report: dict) -> str:
    """Indented human-readable listing; reals become small fractions where exact."""
    lines = [f"{report['kind']} report (liegeo {report['tool_version']}, tol {report['tolerance']:g})"]

    def walk(obj, depth):
        ind = "  " * depth
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v and not _is_flat(v):
                    lines.append(f"{ind}{k}:")
                    walk(v, depth + 1)
                else:
                    lines.append(f"{ind}{k}: {_scalar(v)}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)) and not _is_flat(v):
                    lines.append(f"{ind}-")
                    walk(v, depth + 1)
                else:
                    lines.append(f"{ind}- {_scalar(v)}")

    walk(_plain(report["payload"]), 1)
    return "\n".join(lines)


def _is_flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(t, (dict, list)) for t in v)


def _scalar(v) -> str:
    if isinstance(v, bool) or v is None:
        return str(v).lower()
    if isinstance(v, float):
        return fmt_number(v)
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(t) for t in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


# -- payload builders ---------------------------------------------------------

def validation_payload(sc: StructureConstants, rep: ValidationReport) -> dict:
    return {
        "name": sc.name,
        "dimension": sc.n,
        "passed": rep.passed,
        "jacobi_defect": rep.jacobi_defect,
        "derived_dim": rep.derived_dim,
        "derived_in_span": rep.derived_in_span,
        "messages": list(rep.messages),
    }


def structural_payload(ad: AdaptedData) -> dict:
    return {"a1": ad.a1, "a2": ad.a2, "b1": ad.b1, "b2": ad.b2, "f1": ad.f1, "f2": ad.f2}


def base_payload(sc: StructureConstants, ad: AdaptedData, tol: float = DEFAULT_TOL) -> dict:
    ct = connection_base(ad)
    rt = curvature_base(ct, sc)
    labels = sc.labels
    eye = np.eye(sc.n)
    sect = [
        {"plane": [labels[i], labels[j]], "K": sectional(rt, eye[i], eye[j])}
        for i in range(sc.n) for j in range(i + 1, sc.n)
    ]
    conn = [
        {"x": labels[i], "y": labels[j], "nabla": ct.gamma[i, j]}
        for i in range(sc.n) for j in range(sc.n) if np.any(ct.gamma[i, j])
    ]
    dirs = derived_geodesic_directions(ad, tol)
    return {
        "name": sc.name,
        "labels": list(labels),
        "structural_data": structural_payload(ad),
        "connection": conn,
        "sectional": sect,
        "ricci": ricci_base(rt),
        "unimodular": is_unimodular(ad, tol),
        "biinvariance_obstructions": biinvariance_obstruction(ad, tol),
        "geodesic_vectors": {
            "complement": "every vector of P is geodesic",
            "derived_directions": "all" if dirs == "all" else [list(d) for d in dirs],
        },
    }


def tangent_payload(sc: StructureConstants, ad: AdaptedData, tol: float = DEFAULT_TOL) -> dict:
    ta, ct, rt, ric = tangent_geometry(ad)
    tl = ta.tangent_sc.labels
    n2 = 2 * sc.n
    eye = np.eye(n2)
    sect = []
    for i in range(n2):
        for j in range(i + 1, n2):
            sect.append({"plane": [tl[i], tl[j]], "K": sectional(rt, eye[i], eye[j])})
    rel = curvature_relations(ad, tol)
    base_ric = ricci_base(curvature_base(connection_base(ad), sc))
    entries = []
    m = ad.m
    u = np.eye(m)[0] if m else None
    v = np.eye(m)[1] if m >= 2 else None
    for e in RICCI_ENTRIES:
        if (e in (9, 10, 15) and v is None) or (e in (5, 6, 11, 12, 13, 14) and u is None):
            entries.append({"entry": e, "value": None, "note": "needs more vectors of P"})
            continue
        entries.append({"entry": e, "value": ricci_tangent_closed(ad, e, base_ric, u, v),
                        "u": "Y1", "v": "Y2" if v is not None else None})
    return {
        "name": sc.name,
        "labels": list(tl),
        "sectional": sect,
        "ricci_diagonal": {tl[i]: ric[i, i] for i in range(n2)},
        "ricci_offdiagonal_max": float(np.max(np.abs(ric - np.diag(np.diag(ric))), initial=0.0)),
        "ricci_entries": entries,
        "relations": {"I": rel.relation_I, "II": rel.relation_II, "III": rel.relation_III},
        "sign_spectrum": {"positive": rel.has_positive, "negative": rel.has_negative,
                          "zero": rel.has_zero},
        "known_deviations": [
            {k: v for k, v in note.items() if k != "label"}
            for note in reference_deviations(sc, ad, ric)
        ],
    }


def randers_payload(lift: str, drift, cls: Classification, extra: dict | None = None) -> dict:
    out = {
        "lift": lift,
        "drift": np.asarray(drift, float),
        "douglas": cls.douglas,
        "berwald": cls.berwald,
        "witnesses": list(cls.witnesses),
        "oracle_berwald": cls.oracle_berwald,
        "agreement": cls.agreement,
        "douglas_bracket_check": cls.douglas_bracket_check,
        "parallel_residual": cls.parallel_residual,
    }
    if extra:
        out.update(extra)
    return out
