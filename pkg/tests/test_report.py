import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from liegeo.report import as_fraction, dumps, fmt_number, make_report, render_text


def test_seventeen_digits():
    text = dumps(make_report("flag", {"value": 0.1, "n": 3}, 1e-9))
    assert "0.10000000000000001" in text
    assert '"n": 3' in text


def test_integral_floats_stay_floats():
    doc = json.loads(dumps(make_report("base", {"x": 2.0, "arr": np.array([1.0, -0.0])}, 1e-9)))
    assert isinstance(doc["payload"]["x"], float)
    assert all(isinstance(v, float) for v in doc["payload"]["arr"])


@given(st.lists(st.floats(allow_nan=False, allow_infinity=False), max_size=8))
def test_round_trip_exact(values):
    rep = make_report("verify", {"values": values, "nested": {"m": [values, values]}}, 1e-9)
    once = json.loads(dumps(rep))
    assert once["payload"]["values"] == values
    assert dumps(once) == dumps(rep)


def test_unknown_kind():
    with pytest.raises(ValueError):
        make_report("nope", {}, 1e-9)


def test_report_fields():
    rep = make_report("validation", {}, 1e-7)
    assert set(rep) == {"kind", "tool_version", "tolerance", "payload"}
    assert rep["tool_version"]


@pytest.mark.parametrize("x, text", [(0.25, "1/4"), (-0.75, "-3/4"), (0.0, "0"), (2.0, "2"),
                                     (1 / 63, "1/63"), (np.pi, "3.14159265359")])
def test_fmt_number(x, text):
    assert fmt_number(x) == text


def test_as_fraction_bounds():
    assert as_fraction(1 / 65) is None
    assert as_fraction(0.25 + 1e-11) is None
    assert as_fraction(-0.5 + 1e-14) == Fraction(-1, 2)
    assert as_fraction(float("nan")) is None


def test_render_text_nested():
    rep = make_report("randers", {"flag": True, "space": [[0.0, 1.0]], "none": None}, 1e-9)
    text = render_text(rep)
    assert "flag: true" in text and "- [0, 1]" in text and "none: none" in text
