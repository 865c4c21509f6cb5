"""Lie algebras with a two-dimensional derived subalgebra.

Inputs are structure constants in an adapted orthonormal basis
``(e1, e2, Y1, ..., Y_{n-2})``: indices 0 and 1 span the derived algebra,
the remaining indices span its orthogonal complement ``P`` and the metric
is the identity.  All brackets of such an algebra are encoded by four
vectors ``a1, a2, b1, b2`` of ``P`` and two skew maps ``f1, f2`` of ``P``::

    [u, e1] = <a1, u> e1 + <a2, u> e2
    [u, e2] = <b1, u> e1 + <b2, u> e2
    [u, v]  = <f1(u), v> e1 + <f2(u), v> e2

Matrices ``f1``, ``f2`` act on column vectors, so ``f1 @ u`` is ``f1(u)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .errors import MalformedInputError, NotAdaptedError, SkewViolationError, ValidationError

DEFAULT_TOL = 1e-9
MIN_DIM = 3
MAX_DIM = 64


def default_labels(n: int) -> tuple[str, ...]:
    return ("e1", "e2") + tuple(f"Y{i}" for i in range(1, n - 1))


def _readonly(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class StructureConstants:
    """Sparse bracket table ``[b_i, b_j] = sum_k c b_k`` stored for ``i < j``."""

    n: int
    brackets: Mapping[tuple[int, int], tuple[tuple[int, float], ...]]
    name: str = ""
    basis_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise MalformedInputError(f"dimension must be an integer, got {self.n!r}")
        if self.n < 1:
            raise MalformedInputError(f"dimension must be positive, got {self.n}")
        clean = {}
        for key, terms in self.brackets.items():
            i, j = key
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise MalformedInputError(f"bracket index ({i}, {j}) out of range")
            if i >= j:
                raise MalformedInputError(f"bracket key ({i}, {j}) must satisfy i < j")
            seen = set()
            row = []
            for k, c in terms:
                if not 0 <= k < self.n:
                    raise MalformedInputError(f"result index {k} out of range in [{i}, {j}]")
                if k in seen:
                    raise MalformedInputError(f"duplicate result index {k} in [{i}, {j}]")
                seen.add(k)
                row.append((int(k), float(c)))
            clean[(int(i), int(j))] = tuple(row)
        object.__setattr__(self, "brackets", MappingProxyType(clean))
        if self.basis_labels is not None:
            labels = tuple(str(s) for s in self.basis_labels)
            if len(labels) != self.n:
                raise MalformedInputError("basis_labels must have one entry per basis vector")
            object.__setattr__(self, "basis_labels", labels)

    @classmethod
    def from_entries(cls, n, entries, name="", basis_labels=None):
        """Build from ``[(i, j, [(k, c), ...]), ...]``; repeated ``(i, j)`` is an error."""
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or not MIN_DIM <= n <= MAX_DIM:
            raise MalformedInputError(f"dimension {n!r} outside supported range [{MIN_DIM}, {MAX_DIM}]")
        table = {}
        for i, j, terms in entries:
            if (i, j) in table:
                raise MalformedInputError(f"duplicate bracket key ({i}, {j})")
            table[(i, j)] = tuple(terms)
        return cls(n, table, name, basis_labels)

    @cached_property
    def tensor(self) -> np.ndarray:
        """Dense antisymmetric array ``c[i, j, k]``."""
        c = np.zeros((self.n, self.n, self.n))
        for (i, j), terms in self.brackets.items():
            for k, v in terms:
                c[i, j, k] += v
                c[j, i, k] -= v
        c.setflags(write=False)
        return c

    @property
    def labels(self) -> tuple[str, ...]:
        return self.basis_labels or default_labels(self.n)

    def bracket(self, x, y) -> np.ndarray:
        return np.einsum("i,j,ijk->k", np.asarray(x, float), np.asarray(y, float), self.tensor)

    def to_json_dict(self) -> dict:
        out = {"name": self.name, "dimension": self.n}
        if self.basis_labels is not None:
            out["basis_labels"] = list(self.basis_labels)
        out["brackets"] = [
            {"i": i, "j": j, "result": [{"k": k, "c": c} for k, c in terms]}
            for (i, j), terms in sorted(self.brackets.items())
        ]
        return out

    @classmethod
    def from_json_dict(cls, doc) -> "StructureConstants":
        try:
            n = doc["dimension"]
            entries = []
            for b in doc.get("brackets", []):
                terms = [(int(t["k"]), float(t["c"])) for t in b["result"]]
                entries.append((int(b["i"]), int(b["j"]), terms))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad structure-constant document: {exc}") from exc
        return cls.from_entries(n, entries, str(doc.get("name", "")), doc.get("basis_labels"))

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def load_structure(path) -> StructureConstants:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"{path}: invalid JSON ({exc})") from exc
    return StructureConstants.from_json_dict(doc)


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    jacobi_defect: float
    derived_dim: int
    derived_in_span: bool
    messages: tuple[str, ...] = ()


def jacobi_defect(sc: StructureConstants) -> float:
    """Largest Euclidean norm of the Jacobiator over all basis triples."""
    c = sc.tensor
    # J[i,j,k] = [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]
    cc = np.einsum("ijm,mkl->ijkl", c, c)
    jac = cc + cc.transpose(1, 2, 0, 3) + cc.transpose(2, 0, 1, 3)
    return float(np.max(np.linalg.norm(jac, axis=-1), initial=0.0))


def validate_structure(sc: StructureConstants, tol: float = DEFAULT_TOL) -> ValidationReport:
    defect = jacobi_defect(sc)
    iu, ju = np.triu_indices(sc.n, 1)
    values = sc.tensor[iu, ju, :]
    outside = float(np.max(np.abs(values[:, 2:]), initial=0.0))
    in_span = outside <= tol
    if values.size and np.any(np.abs(values) > tol):
        s = np.linalg.svd(values, compute_uv=False)
        dim = int(np.sum(s > tol))
    else:
        dim = 0
    msgs = []
    if defect > tol:
        msgs.append(f"Jacobi identity violated: defect {defect:.3e} > {tol:.1e}")
    if not in_span:
        msgs.append(f"bracket values leave span{{e1, e2}} (max off-span component {outside:.3e})")
    if dim != 2:
        msgs.append(f"derived subalgebra has dimension {dim}, expected 2")
    passed = defect <= tol and in_span and dim == 2
    if passed:
        try:
            resid = lambda_residual(extract_adapted(sc, tol))
        except NotAdaptedError as exc:
            msgs.append(str(exc))
            return ValidationReport(False, defect, dim, in_span, tuple(msgs))
        if resid > tol:
            msgs.append(f"warning: b1 is not a multiple of a2 (residual {resid:.3e})")
    return ValidationReport(passed, defect, dim, in_span, tuple(msgs))


@dataclass(frozen=True)
class AdaptedData:
    """Structural payload ``(a1, a2, b1, b2, f1, f2)`` of an adapted algebra."""

    n: int
    a1: np.ndarray
    a2: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    f1: np.ndarray
    f2: np.ndarray
    name: str = field(default="", compare=False)

    def __post_init__(self):
        m = self.n - 2
        for key in ("a1", "a2", "b1", "b2"):
            v = _readonly(getattr(self, key))
            if v.shape != (m,):
                raise MalformedInputError(f"{key} must have length {m}")
            object.__setattr__(self, key, v)
        for key in ("f1", "f2"):
            f = _readonly(getattr(self, key))
            if f.shape != (m, m):
                raise MalformedInputError(f"{key} must be {m}x{m}")
            skew = float(np.max(np.abs(f + f.T), initial=0.0))
            if skew > DEFAULT_TOL:
                raise SkewViolationError(f"{key} is not skew-symmetric (|f + f^T| = {skew:.3e})")
            object.__setattr__(self, key, f)

    @property
    def m(self) -> int:
        return self.n - 2

    @classmethod
    def zeros(cls, n: int) -> "AdaptedData":
        m = n - 2
        z = np.zeros(m)
        return cls(n, z, z, z, z, np.zeros((m, m)), np.zeros((m, m)))

    def embed(self, p) -> np.ndarray:
        """Coordinates in ``g`` of a vector given in ``P`` coordinates."""
        out = np.zeros(self.n)
        out[2:] = p
        return out

    def __eq__(self, other):
        if not isinstance(other, AdaptedData) or self.n != other.n:
            return NotImplemented
        return all(np.array_equal(getattr(self, k), getattr(other, k))
                   for k in ("a1", "a2", "b1", "b2", "f1", "f2"))

    __hash__ = None


def extract_adapted(sc: StructureConstants, tol: float = DEFAULT_TOL) -> AdaptedData:
    c = sc.tensor
    off = float(np.max(np.abs(c[:, :, 2:]), initial=0.0))
    if off > tol:
        raise NotAdaptedError(f"bracket values leave span{{e1, e2}} (component {off:.3e})")
    if np.any(np.abs(c[0, 1]) > tol):
        raise NotAdaptedError("[e1, e2] must vanish in an adapted basis")
    # [u_j, e1] = c[2+j, 0, :], [u_j, e2] = c[2+j, 1, :]
    a1 = c[2:, 0, 0]
    a2 = c[2:, 0, 1]
    b1 = c[2:, 1, 0]
    b2 = c[2:, 1, 1]
    # <f(u_j), u_k> = component of [u_j, u_k]; column j of f is f(u_j)
    f1 = c[2:, 2:, 0].T
    f2 = c[2:, 2:, 1].T
    return AdaptedData(sc.n, a1, a2, b1, b2, f1, f2, name=sc.name)


def reconstruct_structure(ad: AdaptedData, name: str | None = None,
                          basis_labels: Sequence[str] | None = None) -> StructureConstants:
    for key in ("f1", "f2"):
        f = getattr(ad, key)
        if np.max(np.abs(f + f.T), initial=0.0) > DEFAULT_TOL:
            raise SkewViolationError(f"{key} is not skew-symmetric")
    table = {}

    def put(i, j, terms):
        terms = tuple((k, float(v)) for k, v in terms if v != 0.0)
        if terms:
            table[(i, j)] = terms

    for j in range(ad.m):
        # [e1, u_j] = -[u_j, e1]
        put(0, 2 + j, [(0, -ad.a1[j]), (1, -ad.a2[j])])
        put(1, 2 + j, [(0, -ad.b1[j]), (1, -ad.b2[j])])
        for k in range(j + 1, ad.m):
            put(2 + j, 2 + k, [(0, ad.f1[k, j]), (1, ad.f2[k, j])])
    return StructureConstants(ad.n, table, ad.name if name is None else name, basis_labels)


def lambda_residual(ad: AdaptedData) -> float:
    """Norm of the part of ``b1`` orthogonal to ``a2`` (zero when ``a2 = 0``)."""
    nrm = float(ad.a2 @ ad.a2)
    if nrm == 0.0:
        return 0.0
    return float(np.linalg.norm(ad.b1 - (ad.b1 @ ad.a2) / nrm * ad.a2))


def require_valid(sc: StructureConstants, tol: float = DEFAULT_TOL) -> AdaptedData:
    """Validate ``sc`` and return its adapted data, raising on failure."""
    rep = validate_structure(sc, tol)
    if not rep.passed:
        raise ValidationError("; ".join(m for m in rep.messages if not m.startswith("warning")))
    return extract_adapted(sc, tol)
