"""Brute-force reference computations.

Nothing here reads the structural data ``(a1, a2, b1, b2, f1, f2)``; every
quantity is rebuilt from raw structure constants with the Koszul formula
for a left-invariant metric whose basis is orthonormal.  The closed-form
modules are checked against these routines, so the two must not share
kernels.
"""
from __future__ import annotations

import numpy as np


def _dense_brackets(sc) -> np.ndarray:
    n = sc.n
    c = np.zeros((n, n, n))
    for (i, j), terms in sc.brackets.items():
        for k, v in terms:
            c[i, j, k] = c[i, j, k] + v
            c[j, i, k] = c[j, i, k] - v
    return c


def koszul_connection(sc) -> np.ndarray:
    """Christoffel array ``gamma[i, j] = nabla_{b_i} b_j`` for the identity metric.

    Solves ``2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>`` on basis triples.
    """
    c = _dense_brackets(sc)
    n = sc.n
    gamma = np.empty((n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                gamma[i, j, k] = 0.5 * (c[i, j, k] - c[j, k, i] + c[k, i, j])
    return gamma


def curvature_operators(sc, gamma: np.ndarray) -> np.ndarray:
    """``R[i, j]`` as an ``n x n`` matrix acting on column coordinates.

    Uses ``R(X,Y) = [N_X, N_Y] - N_[X,Y]`` where ``N_X`` is the matrix of ``nabla_X``.
    """
    c = _dense_brackets(sc)
    n = sc.n
    # N[i][:, j] = gamma[i, j, :]
    N = [gamma[i].T.copy() for i in range(n)]
    ops = np.empty((n, n, n, n))
    for i in range(n):
        for j in range(n):
            nb = np.zeros((n, n))
            for m in range(n):
                if c[i, j, m] != 0.0:
                    nb += c[i, j, m] * N[m]
            ops[i, j] = N[i] @ N[j] - N[j] @ N[i] - nb
    return ops


def curvature_tensor(sc) -> np.ndarray:
    """Dense ``r[i, j, k] = R(b_i, b_j) b_k`` from the Koszul connection."""
    ops = curvature_operators(sc, koszul_connection(sc))
    return np.swapaxes(ops, 2, 3).copy()


def ricci(r: np.ndarray) -> np.ndarray:
    """``Ric(X, Y) = sum_m <R(E_m, X) Y, E_m>`` over the orthonormal basis."""
    n = r.shape[0]
    out = np.zeros((n, n))
    for a in range(n):
        for b in range(n):
            out[a, b] = sum(r[m, a, b, m] for m in range(n))
    return out


def sectional(r: np.ndarray, x, y) -> float:
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    ryy = np.einsum("i,j,k,ijkl->l", x, y, y, r)
    return float(ryy @ x) / float((x @ x) * (y @ y) - (x @ y) ** 2)


def brute_ad_star(sc, x, y) -> np.ndarray:
    """Solve ``<ad*_X Y, Z> = <Y, [X, Z]>`` against every basis vector ``Z``."""
    c = _dense_brackets(sc)
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    out = np.zeros(sc.n)
    for z in range(sc.n):
        xz = np.zeros(sc.n)
        for i in range(sc.n):
            xz += x[i] * c[i, z]
        out[z] = y @ xz
    return out


def brute_parallel(gamma: np.ndarray, x) -> float:
    """Largest ``|nabla_{b_i} X|`` over basis directions; zero iff ``X`` is parallel."""
    x = np.asarray(x, float)
    worst = 0.0
    for i in range(gamma.shape[0]):
        worst = max(worst, float(np.linalg.norm(x @ gamma[i])))
    return worst


def tangent_brackets(sc):
    """Tangent algebra of ``sc`` rebuilt from the lift rules, as a bare bracket dict.

    Basis order: complete lifts ``0..n-1`` then vertical lifts ``n..2n-1``.
    """
    from .algebra import StructureConstants

    n = sc.n
    c = _dense_brackets(sc)
    table = {}
    for i in range(n):
        for j in range(n):
            terms_c = tuple((k, c[i, j, k]) for k in range(n) if c[i, j, k] != 0.0)
            terms_v = tuple((n + k, c[i, j, k]) for k in range(n) if c[i, j, k] != 0.0)
            if i < j and terms_c:
                table[(i, j)] = terms_c
            if terms_v:
                table[(i, n + j)] = terms_v
    return StructureConstants(2 * n, table, sc.name + "_T" if sc.name else "")


def symmetry_defects(r: np.ndarray) -> dict:
    """Deviation of ``r`` from the algebraic curvature identities (identity metric)."""
    # rl[i,j,k,l] = <R(b_i,b_j) b_k, b_l>
    rl = r
    return {
        "antisym_xy": float(np.max(np.abs(rl + rl.transpose(1, 0, 2, 3)), initial=0.0)),
        "antisym_zw": float(np.max(np.abs(rl + rl.transpose(0, 1, 3, 2)), initial=0.0)),
        "pair_symmetry": float(np.max(np.abs(rl - rl.transpose(2, 3, 0, 1)), initial=0.0)),
        "bianchi": float(np.max(np.abs(rl + rl.transpose(1, 2, 0, 3) + rl.transpose(2, 0, 1, 3)),
                                initial=0.0)),
    }


def berwald_flag(r_tilde: np.ndarray, lifted_drift, plane_a, flagpole) -> float:
    """Flag curvature of a Berwald Randers metric ``alpha + <X, .>``.

    With the drift parallel the Riemann curvature is that of ``alpha``, and for
    an ``alpha``-unit flagpole ``y`` the flag curvature reduces to
    ``K_alpha(P) / (1 + <X, y>)**2``.
    """
    y = np.asarray(flagpole, float)
    y = y / np.linalg.norm(y)
    k = sectional(r_tilde, plane_a, y)
    return k / (1.0 + float(np.asarray(lifted_drift, float) @ y)) ** 2


def full_verify(sc, tol: float = 1e-9):
    """Aggregate closed-form-versus-oracle comparison; see ``liegeo.verify``."""
    from .verify import full_verify as _run

    return _run(sc, tol)
