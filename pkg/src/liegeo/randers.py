"""Left-invariant Randers metrics ``F = alpha + <X, .>`` and their lifts to ``TG``.

Covers evaluation, Douglas/Berwald classification, admissible-drift spaces and
the flag-curvature case tables for Berwald lifts.  Drifts are always given in
base coordinates; the lifted drift is ``X^c`` or ``X^v``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import null_space

from . import oracle
from .algebra import DEFAULT_TOL, AdaptedData, StructureConstants, reconstruct_structure
from .base import check_orthonormal
from .errors import (
    BadCaseArgsError,
    CaseUnsupportedError,
    DimensionMismatchError,
    DriftNormError,
    NotBerwaldError,
    ZeroVectorError,
)
from .tangent import lift_c, lift_v

LIFTS = ("none", "complete", "vertical")
NORM_MARGIN = 1e-12


@dataclass(frozen=True)
class RandersSpec:
    algebra: AdaptedData
    drift: np.ndarray
    lift: str = "none"

    def __post_init__(self):
        if self.lift not in LIFTS:
            raise ValueError(f"lift must be one of {LIFTS}, got {self.lift!r}")
        x = np.array(self.drift, dtype=float)
        if x.shape != (self.algebra.n,):
            raise DimensionMismatchError(
                f"drift needs {self.algebra.n} base coordinates, got shape {x.shape}")
        nrm = float(np.linalg.norm(x))
        if nrm == 0.0:
            raise ZeroVectorError("drift must be nonzero")
        if nrm >= 1.0 - NORM_MARGIN:
            raise DriftNormError(f"drift norm {nrm:.17g} violates |X| < 1")
        x.setflags(write=False)
        object.__setattr__(self, "drift", x)

    @property
    def lifted_drift(self) -> np.ndarray:
        if self.lift == "complete":
            return lift_c(self.drift)
        if self.lift == "vertical":
            return lift_v(self.drift)
        return self.drift


def evaluate_randers(spec: RandersSpec, y) -> float:
    """``F(y) = sqrt(<y, y>) + <X_lift, y>``."""
    y = np.asarray(y, float)
    want = spec.algebra.n * (1 if spec.lift == "none" else 2)
    if y.shape != (want,):
        raise DimensionMismatchError(f"vector needs {want} coordinates for lift {spec.lift!r}")
    if not np.any(y):
        raise ZeroVectorError("Randers norm is evaluated on nonzero vectors only")
    return float(np.sqrt(y @ y) + spec.lifted_drift @ y)


# -- classification ------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    douglas: bool
    berwald: bool
    witnesses: tuple[str, ...]
    oracle_berwald: bool
    agreement: bool
    douglas_bracket_check: bool
    parallel_residual: float = field(default=0.0)


def _label(sc: StructureConstants, i: int) -> str:
    return sc.labels[i]


def center(sc: StructureConstants, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of the center, from the stacked ``ad`` matrices."""
    c = sc.tensor
    # row (i, k), column j: k-th coordinate of [b_j, b_i]
    stacked = c.transpose(1, 2, 0).reshape(sc.n * sc.n, sc.n)
    return null_space(stacked, rcond=tol)


def _berwald_constraints(ad: AdaptedData) -> np.ndarray:
    """Rows whose common kernel is the base Berwald condition on ``X``."""
    n, m = ad.n, ad.m
    rows = [np.eye(n)[:2]]  # X in P
    for f in (ad.f1, ad.f2):
        block = np.zeros((m, n))
        block[:, 2:] = f
        rows.append(block)
    for w in (ad.a1, ad.b2, ad.a2 + ad.b1):
        rows.append(ad.embed(w)[None, :])
    return np.vstack(rows)


def berwald_drift_space(ad: AdaptedData, lift: str = "none", tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of drifts meeting the Berwald criterion for ``lift``.

    ``none``/``complete``: ``ker f1 cap ker f2 cap span{a1, b2, a2+b1}^perp`` inside ``P``.
    ``vertical``: ``Z(g) cap span{a1, b2, a2+b1}^perp``.
    """
    if lift in ("none", "complete"):
        return null_space(_berwald_constraints(ad), rcond=tol)
    if lift != "vertical":
        raise ValueError(f"lift must be one of {LIFTS}, got {lift!r}")
    z = center(reconstruct_structure(ad), tol)
    if z.shape[1] == 0:
        return z
    perp = np.vstack([ad.embed(w) for w in (ad.a1, ad.b2, ad.a2 + ad.b1)])
    coeffs = null_space(perp @ z, rcond=tol)
    if coeffs.shape[1] == 0:
        return np.zeros((ad.n, 0))
    q, _ = np.linalg.qr(z @ coeffs)
    return q


def parallel_drift_space(ad: AdaptedData, lift: str = "none", tol: float = DEFAULT_TOL) -> np.ndarray:
    """Oracle side: drifts whose (lifted) field is parallel, from the Koszul connection."""
    sc = reconstruct_structure(ad)
    n = ad.n
    if lift == "none":
        gamma = oracle.koszul_connection(sc)
        # nabla_{b_i} X = X @ gamma[i] must vanish for every i
        stacked = np.vstack([gamma[i].T for i in range(n)])
    else:
        gamma = oracle.koszul_connection(oracle.tangent_brackets(sc))
        embed = np.vstack([np.eye(n), np.zeros((n, n))]) if lift == "complete" \
            else np.vstack([np.zeros((n, n)), np.eye(n)])
        stacked = np.vstack([gamma[i].T @ embed for i in range(2 * n)])
    return null_space(stacked, rcond=tol)


def _douglas_witness(spec: RandersSpec, sc: StructureConstants, tol: float):
    c = sc.tensor
    x = spec.drift
    vals = np.einsum("ijk,k->ij", c, x)
    i, j = np.unravel_index(np.argmax(np.abs(vals)), vals.shape)
    if abs(vals[i, j]) <= tol:
        return None
    a, b = (i, j) if i < j else (j, i)
    v = vals[a, b]
    return f"<X, [{_label(sc, a)}, {_label(sc, b)}]> = {v:.17g} != 0"


def _berwald_witnesses(spec: RandersSpec, sc: StructureConstants, tol: float) -> list[str]:
    ad = spec.algebra
    x = spec.drift
    p = x[2:]
    out = []
    if spec.lift == "vertical":
        c = sc.tensor
        ad_x = np.einsum("j,jik->ik", x, c)
        i = int(np.argmax(np.linalg.norm(ad_x, axis=1)))
        if np.linalg.norm(ad_x[i]) > tol:
            out.append(f"X is not central: |[X, {_label(sc, i)}]| = {np.linalg.norm(ad_x[i]):.17g}")
    else:
        if np.any(np.abs(x[:2]) > tol):
            out.append(f"X has derived-algebra component ({x[0]:.17g}, {x[1]:.17g})")
        for name, f in (("f1", ad.f1), ("f2", ad.f2)):
            fx = f @ p
            if np.max(np.abs(fx), initial=0.0) > tol:
                out.append(f"{name}(X) = {np.array2string(fx, precision=17)} != 0")
    for name, w in (("a1", ad.a1), ("b2", ad.b2), ("a2+b1", ad.a2 + ad.b1)):
        if abs(w @ p) > tol:
            out.append(f"<{name}, X> = {w @ p:.17g} != 0")
    return out


def classify(spec: RandersSpec, tol: float = DEFAULT_TOL) -> Classification:
    ad = spec.algebra
    sc = reconstruct_structure(ad)
    x = spec.drift
    douglas = bool(np.max(np.abs(x[:2]), initial=0.0) <= tol)
    # general criterion: <X_lift, [Y, Z]> = 0 for all basis pairs of the relevant algebra
    dw = _douglas_witness(spec, sc, tol)
    # on TG the derived algebra is g'^c + g'^v, so both lifts reduce to the base test
    douglas_check = dw is None
    witnesses = [] if douglas else [dw or "X has a derived-algebra component"]
    bw = _berwald_witnesses(spec, sc, tol)
    berwald = not bw
    witnesses += bw
    if spec.lift == "none":
        gamma = oracle.koszul_connection(sc)
        resid = oracle.brute_parallel(gamma, x)
    else:
        gamma = oracle.koszul_connection(oracle.tangent_brackets(sc))
        resid = oracle.brute_parallel(gamma, spec.lifted_drift)
    oracle_berwald = resid <= tol
    return Classification(douglas, berwald, tuple(witnesses), bool(oracle_berwald),
                          bool(oracle_berwald == berwald), douglas_check, float(resid))


# -- flag curvature tables -------------------------------------------------------

# each entry: case id, plane patterns (token pairs), allowed flagpoles, formula key, factor
# tokens: e1c e2c e1v e2v uc uv vc vv; the factor names the flagpole whose
# g(X_lift, .) enters (1 + g(X_lift, flagpole))^-2, or None
_COMPLETE_TABLE = (
    (1, [("e1c", "e2c"), ("e1v", "e2v")], "any", "e1e2", None),
    (2, [("e1c", "e1v")], "any", "e1e1", None),
    (3, [("e1c", "e2v")], "any", "e1c_e2v", None),
    (4, [("e2c", "e1v")], "any", "e2c_e1v", None),
    (5, [("e2c", "e2v")], "any", "e2e2", None),
    (6, [("e1c", "uc"), ("e1v", "uc")], "e", "K_e1u", None),
    (7, [("e1c", "uv")], "any", "mixed7", None),
    (8, [("e2c", "uv")], "any", "mixed8", None),
    (9, [("e1v", "uv")], "any", "e1v_uv", None),
    (10, [("e2v", "uv")], "any", "e2v_uv", None),
    (11, [("e2c", "uc"), ("e2v", "uc")], "e", "K_e2u", None),
    (12, [("uc", "vc"), ("uc", "vv")], ("uc",), "uv", "uc"),
    (13, [("uc", "e1c"), ("uc", "e1v")], ("uc",), "K_e1u", "uc"),
    (14, [("uc", "e2c"), ("uc", "e2v")], ("uc",), "K_e2u", "uc"),
    (15, [("uv", "vv"), ("uc", "uv")], "any", "zero", None),
    (16, [("uv", "vc")], ("uv",), "uv", None),
)

_VERTICAL_TABLE = (
    (1, [("e1c", "e2c")], "any", "e1e2", None),
    (2, [("e1c", "uc"), ("uc", "e1v")], "e", "K_e1u", None),
    (3, [("e2c", "uc"), ("uc", "e2v")], "any", "K_e2u", None),
    (4, [("uc", "vc"), ("uc", "vv")], ("uc",), "uv", None),
    (5, [("uv", "vv"), ("uv", "uc")], "any", "zero", None),
    (6, [("e1c", "e1v")], ("e1c",), "e1e1", None),
    (7, [("e1c", "e2v")], ("e1c",), "e1c_e2v", None),
    (8, [("e2c", "e1v")], ("e2c",), "e2c_e1v", None),
    (9, [("e2c", "e2v")], ("e2c",), "e2e2", None),
    (10, [("e1v", "e1c")], ("e1v",), "e1e1", "e1v"),
    (11, [("e1v", "e2c")], ("e1v",), "e2c_e1v", "e1v"),
    (12, [("e1v", "e2v")], ("e1v",), "e1e2", "e1v"),
    (13, [("e2v", "e1c")], ("e2v",), "e1c_e2v", "e2v"),
    (14, [("e2v", "e1v")], ("e2v",), "e1e2", "e2v"),
    (15, [("e2v", "e2c")], ("e2v",), "e2e2", "e2v"),
    (16, [("e1c", "uv")], ("e1c",), "mixed7", None),
    (17, [("e2c", "uv")], ("e2c",), "mixed8", None),
    (18, [("e1v", "uc")], ("e1v",), "K_e1u", "e1v"),
    (19, [("e1v", "uv")], ("e1v",), "e1v_uv", "e1v"),
    (20, [("e2v", "uc")], ("e2v",), "K_e2u", "e2v"),
    (21, [("e2v", "uv")], ("e2v",), "e2v_uv", "e2v"),
    (22, [("uv", "vc")], ("uv",), "uv", "uv"),
    (23, [("uv", "e1v")], ("uv",), "e1v_uv", "uv"),
    (24, [("uv", "e2v")], ("uv",), "e2v_uv", "uv"),
    (25, [("uv", "e1c")], ("uv",), "mixed7", "uv"),
    (26, [("uv", "e2c")], ("uv",), "mixed8", "uv"),
)

FLAG_TABLES = {"complete": _COMPLETE_TABLE, "vertical": _VERTICAL_TABLE}


def _build_index(table):
    """Map ``(frozenset(plane), flagpole) -> row``.

    When two rows claim the same plane and flagpole, the row carrying an
    explicit ``(1 + g(X, .))`` factor wins; without a factor it would ignore
    the drift component along the flagpole.
    """
    index = {}
    for row in table:
        case, planes, poles, _, factor = row
        for plane in planes:
            allowed = plane if poles == "any" else (
                tuple(t for t in plane if t.startswith("e")) if poles == "e" else poles)
            for pole in allowed:
                key = (frozenset(plane), pole)
                prev = index.get(key)
                if prev is None or (prev[4] is None and factor is not None):
                    index[key] = row
    return index


_INDEX = {lift: _build_index(table) for lift, table in FLAG_TABLES.items()}


@dataclass(frozen=True)
class FlagQuery:
    """A plane given by two tokens, a flagpole among them, and optional ``P`` vectors."""

    plane: tuple[str, str]
    flagpole: str
    u: np.ndarray | None = None
    v: np.ndarray | None = None


def lookup_case(lift: str, plane, flagpole: str):
    """Case row for a plane pattern and flagpole, or ``CaseUnsupportedError``."""
    if lift not in FLAG_TABLES:
        raise CaseUnsupportedError(f"flag-curvature tables exist for lifted metrics only, not {lift!r}")
    plane = tuple(plane)
    if len(plane) != 2 or plane[0] == plane[1]:
        raise CaseUnsupportedError(f"plane {plane} is degenerate")
    if flagpole not in plane:
        raise CaseUnsupportedError(f"flagpole {flagpole} does not lie in the plane {plane}")
    row = _INDEX[lift].get((frozenset(plane), flagpole))
    if row is None:
        raise CaseUnsupportedError(f"no listed case for plane {plane} with flagpole {flagpole}")
    return row


def _formula(ad: AdaptedData, key: str, u, v) -> float:
    a1, a2, b1, b2, f1, f2 = ad.a1, ad.a2, ad.b1, ad.b2, ad.f1, ad.f2
    ab = float(a1 @ b2)
    if key == "e1e2":
        s = a2 + b1
        return float(0.25 * s @ s - ab)
    if key == "e1e1":
        return float(-0.75 * a1 @ a1)
    if key == "e1c_e2v":
        return float(0.25 * a2 @ a2 - ab)
    if key == "e2c_e1v":
        return float(0.25 * b1 @ b1 - ab)
    if key == "e2e2":
        return float(-0.75 * b2 @ b2)
    if key == "zero":
        return 0.0
    ua1, ua2, ub1, ub2 = a1 @ u, a2 @ u, b1 @ u, b2 @ u
    f1u, f2u = f1 @ u, f2 @ u
    if key == "K_e1u":
        return float(0.25 * (ub1 ** 2 - 3 * ua2 ** 2 + f1u @ f1u) - ua1 ** 2 - 0.5 * ua2 * ub1)
    if key == "K_e2u":
        return float(0.25 * (ua2 ** 2 - 3 * ub1 ** 2 + f2u @ f2u) - ub2 ** 2 - 0.5 * ua2 * ub1)
    if key == "mixed7":
        return float(-0.25 * (7 * ua1 ** 2 + 3 * ua2 ** 2) - ua2 * ub1)
    if key == "mixed8":
        return float(-0.25 * (7 * ub2 ** 2 + 3 * ub1 ** 2) - ua2 * ub1)
    if key == "e1v_uv":
        return float(0.25 * (ua1 ** 2 + ub1 ** 2 + f1u @ f1u))
    if key == "e2v_uv":
        return float(0.25 * (ua2 ** 2 + ub2 ** 2 + f2u @ f2u))
    if key == "uv":
        return float(-0.75 * ((v @ f1u) ** 2 + (v @ f2u) ** 2))
    raise AssertionError(key)


def _factor_value(drift, token: str, u) -> float:
    """``g(X, w)`` for the base vector ``w`` under a flagpole token."""
    base = token[:-1]
    if base == "e1":
        return float(drift[0])
    if base == "e2":
        return float(drift[1])
    return float(drift[2:] @ u)


def flag_case_value(ad: AdaptedData, lift: str, plane, flagpole: str, drift,
                    u=None, v=None, tol: float = DEFAULT_TOL) -> tuple[int, float]:
    """Printed case value for a plane and flagpole, without the Berwald gate.

    Returns ``(case id, value)``.
    """
    case, _, _, key, factor = lookup_case(lift, plane, flagpole)
    toks = "".join(t[:-1] for t in plane)
    if "v" in toks.replace("e", ""):
        if u is None or v is None:
            raise BadCaseArgsError("case needs orthonormal u, v in P")
        u, v = check_orthonormal(ad, u, v, tol)
    elif "u" in toks:
        if u is None:
            raise BadCaseArgsError("case needs a unit vector u in P")
        u = check_orthonormal(ad, u, tol=tol)
    value = _formula(ad, key, u, v)
    if factor is not None:
        value /= (1.0 + _factor_value(np.asarray(drift, float), factor, u)) ** 2
    return case, value


def flag_curvature(spec: RandersSpec, q: FlagQuery, tol: float = DEFAULT_TOL) -> tuple[int, float]:
    """Flag curvature of the Berwald lift ``F^c`` or ``F^v`` from the case tables."""
    lookup_case(spec.lift, q.plane, q.flagpole)
    verdict = classify(spec, tol)
    if not verdict.berwald:
        raise NotBerwaldError("; ".join(verdict.witnesses) or "drift fails the Berwald criterion")
    return flag_case_value(spec.algebra, spec.lift, q.plane, q.flagpole, spec.drift,
                           q.u, q.v, tol)


# planes whose flag value, times the squared factor, is a tangent sectional curvature
SCALING_PAIRS = {
    ("complete", 12): ("uc", "vc"), ("complete", 13): ("uc", "e1c"),
    ("complete", 14): ("uc", "e2c"),
    ("vertical", 10): ("e1c", "e1v"), ("vertical", 11): ("e1v", "e2c"),
    ("vertical", 12): ("e1v", "e2v"), ("vertical", 13): ("e1c", "e2v"),
    ("vertical", 14): ("e1v", "e2v"), ("vertical", 15): ("e2c", "e2v"),
    ("vertical", 18): ("uc", "e1v"), ("vertical", 19): ("uv", "e1v"),
    ("vertical", 20): ("uc", "e2v"), ("vertical", 21): ("uv", "e2v"),
    ("vertical", 22): ("uc", "vv"), ("vertical", 23): ("uv", "e1v"),
    ("vertical", 24): ("uv", "e2v"), ("vertical", 25): ("uv", "e1c"),
    ("vertical", 26): ("uv", "e2c"),
}


def case_query(lift: str, case_id: int) -> tuple[tuple[str, str], str]:
    """First plane pattern and flagpole the table lists for a case."""
    for case, planes, poles, _, _ in FLAG_TABLES[lift]:
        if case == case_id:
            plane = planes[0]
            if poles == "any":
                pole = plane[0]
            elif poles == "e":
                pole = next(t for t in plane if t.startswith("e"))
            else:
                pole = poles[0]
            return plane, pole
    raise CaseUnsupportedError(f"no case {case_id} for lift {lift!r}")
