"""Riemannian geometry of the base group ``G`` with a left-invariant metric.

Conventions: ``R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z``,
``K(u,v) = <R(u,v)v,u> / (|u|^2 |v|^2 - <u,v>^2)`` and
``Ric(X,Y) = sum_m <R(E_m,X)Y, E_m>``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_TOL, AdaptedData, StructureConstants
from .errors import BadCaseArgsError, DegeneratePlaneError, ZeroVectorError

PLANE_TOL = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ConnectionTable:
    """``gamma[i, j]`` holds the coordinates of ``nabla_{b_i} b_j``."""

    gamma: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "gamma", _frozen(self.gamma))

    @property
    def dim(self) -> int:
        return self.gamma.shape[0]

    def nabla(self, x, y) -> np.ndarray:
        return np.einsum("i,j,ijk->k", np.asarray(x, float), np.asarray(y, float), self.gamma)

    def torsion_defect(self, sc: StructureConstants) -> float:
        t = self.gamma - self.gamma.transpose(1, 0, 2) - sc.tensor
        return float(np.max(np.abs(t), initial=0.0))

    def metric_defect(self) -> float:
        # <nabla_i b_j, b_k> + <b_j, nabla_i b_k> for an orthonormal frame
        return float(np.max(np.abs(self.gamma + self.gamma.transpose(0, 2, 1)), initial=0.0))


@dataclass(frozen=True)
class CurvatureTensor:
    """``r[i, j, k]`` holds the coordinates of ``R(b_i, b_j) b_k``."""

    r: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "r", _frozen(self.r))

    @property
    def dim(self) -> int:
        return self.r.shape[0]

    def apply(self, x, y, z) -> np.ndarray:
        return np.einsum("i,j,k,ijkl->l", *(np.asarray(t, float) for t in (x, y, z)), self.r)

    def symmetry_defects(self) -> dict:
        r = self.r
        return {
            "antisym_xy": float(np.max(np.abs(r + r.transpose(1, 0, 2, 3)), initial=0.0)),
            "antisym_zw": float(np.max(np.abs(r + r.transpose(0, 1, 3, 2)), initial=0.0)),
            "pair_symmetry": float(np.max(np.abs(r - r.transpose(2, 3, 0, 1)), initial=0.0)),
            "bianchi": float(np.max(np.abs(r + r.transpose(1, 2, 0, 3) + r.transpose(2, 0, 1, 3)),
                                    initial=0.0)),
        }


def connection_base(ad: AdaptedData) -> ConnectionTable:
    """Levi-Civita connection of ``G`` assembled from the structural data."""
    n = ad.n
    E = ad.embed
    e1 = np.eye(n)[0]
    e2 = np.eye(n)[1]
    s = ad.a2 + ad.b1
    d = ad.a2 - ad.b1
    g = np.zeros((n, n, n))
    g[0, 0] = E(ad.a1)
    g[0, 1] = 0.5 * E(s)
    g[1, 0] = 0.5 * E(s)
    g[1, 1] = E(ad.b2)
    for j in range(ad.m):
        u = 2 + j
        g[0, u] = -(ad.a1[j] * e1 + 0.5 * (s[j] * e2 + E(ad.f1[:, j])))
        g[1, u] = -(ad.b2[j] * e2 + 0.5 * (s[j] * e1 + E(ad.f2[:, j])))
        g[u, 0] = 0.5 * (d[j] * e2 - E(ad.f1[:, j]))
        g[u, 1] = 0.5 * (-d[j] * e1 - E(ad.f2[:, j]))
        for k in range(ad.m):
            # nabla_v u = 1/2 (<f1(v), u> e1 + <f2(v), u> e2) with v = u_j, u = u_k
            g[u, 2 + k] = 0.5 * (ad.f1[k, j] * e1 + ad.f2[k, j] * e2)
    return ConnectionTable(g)


def generic_curvature(gamma: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Curvature array from a Christoffel array and dense structure constants."""
    # nabla_i (nabla_j b_k) = sum_l gamma[j,k,l] gamma[i,l,:]
    first = np.einsum("jkl,ilm->ijkm", gamma, gamma)
    return first - first.transpose(1, 0, 2, 3) - np.einsum("ijm,mkl->ijkl", c, gamma)


def curvature_base(ct: ConnectionTable, sc: StructureConstants) -> CurvatureTensor:
    return CurvatureTensor(generic_curvature(ct.gamma, sc.tensor))


def sectional(rt: CurvatureTensor, u, v, plane_tol: float = PLANE_TOL) -> float:
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    gram = float((u @ u) * (v @ v) - (u @ v) ** 2)
    if gram <= plane_tol:
        raise DegeneratePlaneError(f"vectors span a degenerate plane (Gram determinant {gram:.3e})")
    return float(rt.apply(u, v, v) @ u) / gram


def _check_unit(u, m, tol, what="u"):
    u = np.asarray(u, float)
    if u.shape != (m,):
        raise BadCaseArgsError(f"{what} must be a vector of P with {m} coordinates")
    if abs(u @ u - 1.0) > tol:
        raise BadCaseArgsError(f"{what} must be a unit vector (|{what}|^2 = {u @ u:.6g})")
    return u


def check_orthonormal(ad: AdaptedData, u, v=None, tol: float = DEFAULT_TOL):
    """Return ``u`` (and ``v``) as arrays after checking orthonormality in ``P``."""
    u = _check_unit(u, ad.m, tol)
    if v is None:
        return u
    v = _check_unit(v, ad.m, tol, "v")
    if abs(u @ v) > tol:
        raise BadCaseArgsError(f"u and v must be orthogonal (<u,v> = {u @ v:.6g})")
    return u, v


SECTIONAL_CASES = ("e1e2", "e1u", "e2u", "uv")


def sectional_closed_form(ad: AdaptedData, case: str, u=None, v=None,
                          tol: float = DEFAULT_TOL) -> float:
    """Closed-form base sectional curvature for the four plane types.

    ``u`` and ``v`` are coordinates in ``P`` and must be orthonormal.
    """
    a1, a2, b1, b2, f1, f2 = ad.a1, ad.a2, ad.b1, ad.b2, ad.f1, ad.f2
    if case == "e1e2":
        return 0.25 * float((a2 + b1) @ (a2 + b1)) - float(a1 @ b2)
    if case == "e1u":
        u = check_orthonormal(ad, u, tol=tol)
        pa1, pa2, pb1 = a1 @ u, a2 @ u, b1 @ u
        fu = f1 @ u
        return float(0.25 * (pb1 ** 2 - 3 * pa2 ** 2 + fu @ fu) - pa1 ** 2 - 0.5 * pa2 * pb1)
    if case == "e2u":
        u = check_orthonormal(ad, u, tol=tol)
        pa2, pb1, pb2 = a2 @ u, b1 @ u, b2 @ u
        fu = f2 @ u
        return float(0.25 * (pa2 ** 2 - 3 * pb1 ** 2 + fu @ fu) - pb2 ** 2 - 0.5 * pa2 * pb1)
    if case == "uv":
        u, v = check_orthonormal(ad, u, v, tol=tol)
        return float(-0.75 * ((u @ f1 @ v) ** 2 + (u @ f2 @ v) ** 2))
    raise BadCaseArgsError(f"unknown case {case!r}; expected one of {SECTIONAL_CASES}")


def ricci_base(rt: CurvatureTensor) -> np.ndarray:
    ric = np.einsum("mabm->ab", rt.r)
    return ric


def is_geodesic_vector(ad: AdaptedData, ct: ConnectionTable, x,
                       tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Test ``nabla_X X = 0``; returns the verdict and ``|nabla_X X|``."""
    x = np.asarray(x, float)
    if not np.any(np.abs(x) > tol):
        raise ZeroVectorError("geodesic test needs a nonzero vector")
    resid = float(np.linalg.norm(ct.nabla(x, x)))
    return resid <= tol, resid


def derived_geodesic_residual(ad: AdaptedData, lam: float, mu: float) -> float:
    """``|lam^2 a1 + lam mu (a2 + b1) + mu^2 b2|`` for ``X = lam e1 + mu e2``."""
    w = lam ** 2 * ad.a1 + lam * mu * (ad.a2 + ad.b1) + mu ** 2 * ad.b2
    return float(np.linalg.norm(w))


def derived_geodesic_directions(ad: AdaptedData, tol: float = DEFAULT_TOL):
    """Unit directions ``(lam, mu)`` of the derived algebra that are geodesic vectors.

    Returns ``"all"`` when the quadratic criterion vanishes identically.
    """
    coeffs = np.stack([ad.a1, ad.a2 + ad.b1, ad.b2], axis=1)  # rows: lam^2, lam mu, mu^2
    if not np.any(np.abs(coeffs) > tol):
        return "all"
    p, q, r = coeffs[np.argmax(np.max(np.abs(coeffs), axis=1))]
    # roots of p lam^2 + q lam mu + r mu^2 on the projective line
    if abs(p) <= tol:
        candidates = [(1.0, 0.0), (r, -q)]
    else:
        disc = q * q - 4 * p * r
        candidates = []
        if disc >= -tol:
            sq = np.sqrt(max(disc, 0.0))
            candidates = [((-q + sq) / (2 * p), 1.0), ((-q - sq) / (2 * p), 1.0)]
    out = []
    for lam, mu in candidates:
        nrm = np.hypot(lam, mu)
        lam, mu = lam / nrm, mu / nrm
        if derived_geodesic_residual(ad, lam, mu) <= tol and not any(
                abs(lam * b - mu * a) <= tol for a, b in out):
            out.append((float(lam), float(mu)))
    return out


def is_unimodular(ad: AdaptedData, tol: float = DEFAULT_TOL) -> bool:
    return bool(np.max(np.abs(ad.a1 + ad.b2), initial=0.0) <= tol)


BIINVARIANCE_CONDITIONS = (
    "<f1(u), v> = 0 for all u, v",
    "<f2(u), v> = 0 for all u, v",
    "a1 = 0",
    "b2 = 0",
    "b1 = -a2",
    "b1 = 0",
    "a2 = 0",
)


def biinvariance_obstruction(ad: AdaptedData, tol: float = DEFAULT_TOL) -> list[str]:
    """Conditions a bi-invariant metric would force that fail for ``ad``."""
    values = (ad.f1, ad.f2, ad.a1, ad.b2, ad.b1 + ad.a2, ad.b1, ad.a2)
    return [cond for cond, val in zip(BIINVARIANCE_CONDITIONS, values)
            if np.max(np.abs(val), initial=0.0) > tol]
