"""Printed reference values for the five-dimensional catalog algebra ``paper5d``.

Planes are pairs of tangent-basis labels.  Values that disagree with the trace
oracle are kept here as known deviations together with the oracle value.
"""
from fractions import Fraction

SECTIONAL_GROUPS = {
    Fraction(1, 4): (
        ("e1c", "e2c"), ("e1v", "e2v"), ("e1c", "e2v"), ("Y2c", "e1c"), ("Y2c", "e1v"),
        ("Y1c", "e2c"), ("Y1c", "e2v"), ("Y1v", "e1v"), ("Y2v", "e1v"), ("Y1v", "e2v"),
    ),
    Fraction(-1, 2): (("Y1c", "e1c"), ("Y1c", "e1v")),
    Fraction(-3, 4): (("Y1c", "Y2c"), ("Y1c", "Y2v"), ("Y1v", "e1c")),
    Fraction(0): (
        ("e1c", "e1v"), ("e1v", "e2c"), ("e2c", "e2v"), ("Y1c", "Y3c"), ("Y1c", "Y3v"),
        ("Y2c", "Y3c"), ("Y2c", "Y3v"), ("Y3c", "e1c"), ("Y3c", "e1v"), ("Y2c", "e2c"),
        ("Y2c", "e2v"), ("Y3c", "e2c"), ("Y3c", "e2v"), ("Y2v", "e1c"), ("Y3v", "e1c"),
        ("Y3v", "e1v"), ("Y2v", "e2v"), ("Y3v", "e2v"),
    ),
}

# every u, v in {Y1, Y2, Y3}: K~(u^v, v^v) = K~(u^c, u^v) = K~(u^v, e2^c) = 0
ZERO_FAMILIES = (("uv", "vv"), ("uc", "uv"), ("uv", "e2c"))

# diagonal Ricci values r~(x) = Ric~(x, x)
RICCI_PRINTED = {
    "e1c": Fraction(-3, 4), "e2c": Fraction(1, 2), "e1v": Fraction(0), "e2v": Fraction(1),
    "Y1c": Fraction(-2), "Y2c": Fraction(-1), "Y3c": Fraction(0),
    "Y1v": Fraction(-1), "Y2v": Fraction(-1, 2), "Y3v": Fraction(0),
}

# printed entries that the trace oracle contradicts: label -> (printed, oracle)
RICCI_DEVIATIONS = {
    "e1c": (Fraction(-3, 4), Fraction(-1, 2)),
    "e1v": (Fraction(0), Fraction(1, 2)),
}

# printed trace identities: tr(f1^2) is printed as -1 but equals -2
TRACE_PRINTED = {"tr(f1^2)": Fraction(-1), "tr(f2^2)": Fraction(0), "tr(f1 f2)": Fraction(0)}

# flag curvature values (lift, plane, flagpole, u, v) -> value for drift X with g(X, Y1) = 0
FLAG_VALUES = (
    ("complete", ("e1c", "uv"), "e1c", (1, 0, 0), None, Fraction(-3, 4)),
    ("complete", ("uv", "e1c"), "uv", (1, 0, 0), None, Fraction(-3, 4)),
    ("complete", ("e2c", "uc"), "e2c", (1, 0, 0), None, Fraction(1, 4)),
    ("complete", ("e2v", "uc"), "e2v", (1, 0, 0), None, Fraction(1, 4)),
    ("vertical", ("uv", "vc"), "uv", (1, 0, 0), (0, 1, 0), Fraction(-3, 4)),
)
