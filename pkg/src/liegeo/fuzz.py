"""Random admissible algebras for differential testing.

Jacobi forces the operators ``M(u) = ad_u|g'`` to commute and imposes a
linear condition on ``(f1, f2)`` once the ``a, b`` vectors are fixed.  Each
family picks a commuting ``M`` and then samples ``f`` from the solution space.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np
from scipy.linalg import null_space

from .algebra import AdaptedData, jacobi_defect, reconstruct_structure, validate_structure

FAMILIES = ("skew_f", "diagonal", "rotation", "nilpotent", "commuting")
# smallest dimension where a family can reach a two-dimensional derived algebra
MIN_DIM = {"skew_f": 5, "diagonal": 3, "rotation": 3, "nilpotent": 4, "commuting": 3}


def _matrix_field(rng, m, family):
    """Vectors ``a1, a2, b1, b2`` of ``P`` with commuting ``M(u)``."""
    p = rng.normal(size=m)
    q = rng.normal(size=m) if rng.random() < 0.5 else np.zeros(m)
    if family == "skew_f":
        z = np.zeros(m)
        return z, z, z, z
    if family == "diagonal":
        # M(u) = diag(<a1,u>, <b2,u>) commutes for any a1, b2
        return p, np.zeros(m), np.zeros(m), rng.normal(size=m)
    if family == "rotation":
        # lam = 0 gives the pure rotation type (Euclidean motions at n = 3)
        lam = 0.0 if rng.random() < 1 / 3 else rng.normal()
        A = np.array([[lam, -1.0], [1.0, lam]])
    elif family == "nilpotent":
        A = np.array([[0.0, 0.0], [1.0, 0.0]])
    else:
        A = rng.normal(size=(2, 2))
    alpha, beta = rng.normal(size=2)
    # M(u) = <p,u> A + <q,u> (alpha I + beta A); columns are images of e1, e2
    a1 = p * A[0, 0] + q * (alpha + beta * A[0, 0])
    a2 = p * A[1, 0] + q * beta * A[1, 0]
    b1 = p * A[0, 1] + q * beta * A[0, 1]
    b2 = p * A[1, 1] + q * (alpha + beta * A[1, 1])
    return a1, a2, b1, b2


def _f_solutions(a1, a2, b1, b2, m):
    """Basis of ``(f1, f2)`` pairs satisfying Jacobi on ``P x P x P``."""
    pairs = list(combinations(range(m), 2))
    index = {pr: t for t, pr in enumerate(pairs)}
    nvar = 2 * len(pairs)
    if nvar == 0:
        return np.zeros((0, 0)), pairs

    def M(l):
        return np.array([[a1[l], b1[l]], [a2[l], b2[l]]])

    def F(j, k):
        # coefficient matrix of [u_j, u_k] in terms of the unknowns
        out = np.zeros((2, nvar))
        sign = 1.0
        if j > k:
            j, k, sign = k, j, -1.0
        t = index[(j, k)]
        out[0, t] = sign
        out[1, len(pairs) + t] = sign
        return out

    rows = []
    for j, k, l in combinations(range(m), 3):
        # [[u_j,u_k],u_l] = -M(u_l)[u_j,u_k], summed cyclically
        rows.append(M(l) @ F(j, k) + M(j) @ F(k, l) + M(k) @ F(l, j))
    if not rows:
        return np.eye(nvar), pairs
    return null_space(np.vstack(rows)), pairs


def random_adapted(rng: np.random.Generator, n: int | None = None, family: str | None = None,
                   max_tries: int = 200) -> AdaptedData:
    """Sample one admissible ``AdaptedData`` (Jacobi defect ``<= 1e-12``, derived dim 2)."""
    for _ in range(max_tries):
        fam = family or FAMILIES[rng.integers(len(FAMILIES))]
        dim = int(n if n is not None else rng.integers(MIN_DIM[fam], 9))
        m = dim - 2
        a1, a2, b1, b2 = _matrix_field(rng, m, fam)
        basis, pairs = _f_solutions(a1, a2, b1, b2, m)
        f1 = np.zeros((m, m))
        f2 = np.zeros((m, m))
        if basis.size:
            x = basis @ rng.normal(size=basis.shape[1])
            if fam == "diagonal" and rng.random() < 0.5:
                x[:] = 0.0
            half = len(pairs)
            for t, (j, k) in enumerate(pairs):
                # x holds <f(u_j), u_k> = f[k, j]
                f1[k, j], f1[j, k] = x[t], -x[t]
                f2[k, j], f2[j, k] = x[half + t], -x[half + t]
        ad = AdaptedData(dim, a1, a2, b1, b2, f1, f2, name=f"fuzz-{fam}-{dim}")
        sc = reconstruct_structure(ad)
        if jacobi_defect(sc) > 1e-12:
            continue
        if validate_structure(sc, 1e-9).derived_dim != 2:
            continue
        return ad
    raise RuntimeError("no admissible sample found")


def fuzz_corpus(count: int, seed: int = 0, max_n: int = 8) -> list[AdaptedData]:
    """``count`` admissible algebras cycling through every family."""
    rng = np.random.default_rng(seed)
    out = []
    for t in range(count):
        fam = FAMILIES[t % len(FAMILIES)]
        dim = int(rng.integers(MIN_DIM[fam], max_n + 1))
        out.append(random_adapted(rng, dim, fam))
    return out
