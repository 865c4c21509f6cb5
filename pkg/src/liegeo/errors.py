"""Exception hierarchy. Each class carries a stable ``code`` string."""


class LieGeoError(ValueError):
    code = "ERROR"


class MalformedInputError(LieGeoError):
    code = "MALFORMED_INPUT"


class NotAdaptedError(LieGeoError):
    code = "NOT_ADAPTED"


class ValidationError(LieGeoError):
    code = "VALIDATION_FAILED"


class SkewViolationError(LieGeoError):
    code = "SKEW_VIOLATION"


class DegeneratePlaneError(LieGeoError):
    code = "DEGENERATE_PLANE"


class BadCaseArgsError(LieGeoError):
    code = "BAD_CASE_ARGS"


class ZeroVectorError(LieGeoError):
    code = "ZERO_VECTOR"


class DimensionMismatchError(LieGeoError):
    code = "DIMENSION_MISMATCH"


class DriftNormError(LieGeoError):
    code = "DRIFT_NORM"


class NotBerwaldError(LieGeoError):
    code = "NOT_BERWALD"


class CaseUnsupportedError(LieGeoError):
    code = "CASE_UNSUPPORTED"
