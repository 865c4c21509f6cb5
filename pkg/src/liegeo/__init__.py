"""Riemannian and Randers geometry of Lie groups with a two-dimensional derived algebra.

The package works in an adapted orthonormal basis ``(e1, e2, Y1, ...)`` and
covers the base group ``G``, its tangent group ``TG`` with the lifted
metric, and left-invariant Randers metrics together with their lifts.
"""
from importlib import metadata

from .algebra import (
    AdaptedData,
    StructureConstants,
    ValidationReport,
    extract_adapted,
    jacobi_defect,
    lambda_residual,
    load_structure,
    reconstruct_structure,
    require_valid,
    validate_structure,
)
from .base import (
    ConnectionTable,
    CurvatureTensor,
    biinvariance_obstruction,
    connection_base,
    curvature_base,
    derived_geodesic_directions,
    is_geodesic_vector,
    is_unimodular,
    ricci_base,
    sectional,
    sectional_closed_form,
)
from .catalog import CATALOG_NAMES, catalog_entry
from .errors import LieGeoError
from .randers import (
    Classification,
    FlagQuery,
    RandersSpec,
    berwald_drift_space,
    center,
    classify,
    evaluate_randers,
    flag_curvature,
)
from .tangent import (
    TangentAlgebra,
    ad_star,
    build_tangent_algebra,
    connection_tangent,
    curvature_relations,
    curvature_tangent,
    lemma44_case,
    ricci_tangent_closed,
    sectional_tangent_closed,
)
from .verify import DeviationReport, full_verify

try:
    __version__ = metadata.version("artifact")
except metadata.PackageNotFoundError:
    __version__ = "0+unknown"

__all__ = [
    "__version__",
    "AdaptedData",
    "StructureConstants",
    "ValidationReport",
    "extract_adapted",
    "jacobi_defect",
    "lambda_residual",
    "load_structure",
    "reconstruct_structure",
    "require_valid",
    "validate_structure",
    "ConnectionTable",
    "CurvatureTensor",
    "biinvariance_obstruction",
    "connection_base",
    "curvature_base",
    "derived_geodesic_directions",
    "is_geodesic_vector",
    "is_unimodular",
    "ricci_base",
    "sectional",
    "sectional_closed_form",
    "Classification",
    "FlagQuery",
    "RandersSpec",
    "berwald_drift_space",
    "center",
    "classify",
    "evaluate_randers",
    "flag_curvature",
    "TangentAlgebra",
    "ad_star",
    "build_tangent_algebra",
    "connection_tangent",
    "curvature_relations",
    "curvature_tangent",
    "lemma44_case",
    "ricci_tangent_closed",
    "sectional_tangent_closed",
    "CATALOG_NAMES",
    "catalog_entry",
    "LieGeoError",
    "DeviationReport",
    "full_verify",
]
