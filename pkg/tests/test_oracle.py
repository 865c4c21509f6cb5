import json

import numpy as np
import pytest

from liegeo import oracle
from liegeo.algebra import StructureConstants, reconstruct_structure
from liegeo.base import connection_base, curvature_base
from liegeo.randers import flag_case_value
from liegeo.report import dumps
from liegeo.tangent import ad_star, tangent_vector
from liegeo.verify import full_verify

E1, E2, Y1, Y2, Y3 = np.eye(5)


def test_koszul_matches_closed_form(full_corpus):
    for ad in full_corpus:
        sc = reconstruct_structure(ad)
        assert np.max(np.abs(oracle.koszul_connection(sc) - connection_base(ad).gamma)) <= 1e-9


def test_koszul_abelian_zero():
    assert not np.any(oracle.koszul_connection(StructureConstants.from_entries(4, [])))


def test_koszul_torsion_and_metric(corpus):
    for ad in corpus[:60]:
        sc = reconstruct_structure(ad)
        g = oracle.koszul_connection(sc)
        c = oracle._dense_brackets(sc)
        assert np.max(np.abs(g - g.transpose(1, 0, 2) - c)) <= 1e-12
        assert np.max(np.abs(g + g.transpose(0, 2, 1))) <= 1e-12


def test_oracle_curvature_matches_closed_form(full_corpus):
    for ad in full_corpus[:80]:
        sc = reconstruct_structure(ad)
        rt = curvature_base(connection_base(ad), sc)
        r = oracle.curvature_tensor(sc)
        assert np.max(np.abs(r - rt.r)) <= 1e-9
        assert max(oracle.symmetry_defects(r).values()) <= 1e-9


def test_brute_ad_star(catalog, corpus):
    sc = catalog["paper5d"]
    assert np.array_equal(oracle.brute_ad_star(sc, E1, E1), np.zeros(5))
    assert np.array_equal(oracle.brute_ad_star(sc, np.zeros(5), Y2), np.zeros(5))
    rng = np.random.default_rng(4)
    for ad in corpus[:60]:
        sc = reconstruct_structure(ad)
        x, y = rng.normal(size=(2, ad.n))
        assert np.max(np.abs(oracle.brute_ad_star(sc, x, y) - ad_star(ad, x, y))) <= 1e-9


def test_brute_parallel(catalog):
    g = oracle.koszul_connection(catalog["paper5d"])
    assert oracle.brute_parallel(g, Y3) == 0.0
    assert oracle.brute_parallel(g, Y1) > 0.1
    assert oracle.brute_parallel(g, np.zeros(5)) == 0.0


def test_berwald_flag_matches_scaled_cases(paper5d, catalog):
    # on a Berwald complete lift the oracle reproduces the table value
    r = oracle.curvature_tensor(oracle.tangent_brackets(catalog["paper5d"]))
    drift = 0.5 * Y3
    u = np.array([0.0, 0.6, 0.8])
    plane = ("uc", "e1c")
    _, val = flag_case_value(paper5d, "complete", plane, "uc", drift, u)
    x, y = (tangent_vector(5, t, u) for t in plane)
    lifted = np.concatenate([drift, np.zeros(5)])
    assert oracle.berwald_flag(r, lifted, y, x) == pytest.approx(val, abs=1e-12)


@pytest.mark.parametrize("name", ["paper5d", "aff4", "rot4", "heis_ext6"])
def test_full_verify_catalog(name, catalog):
    rep = full_verify(catalog[name])
    assert rep.passed
    assert rep.max_abs_deviation == max(d for _, d in rep.per_check)


def test_full_verify_rot4_exact(catalog):
    assert full_verify(catalog["rot4"]).max_abs_deviation == 0.0


def test_full_verify_paper5d_discrepancies(catalog):
    rep = full_verify(catalog["paper5d"])
    items = {d["item"] for d in rep.known_deviations}
    assert {"r~(e1c)", "r~(e1v)", "connection table cell (vc, uc)"} <= items


def test_full_verify_deterministic(catalog):
    a = dumps(full_verify(catalog["heis_ext6"]).to_dict())
    b = dumps(full_verify(catalog["heis_ext6"]).to_dict())
    assert a == b
    json.loads(a)


def test_full_verify_fuzzed(corpus):
    for ad in corpus[::20]:
        assert full_verify(reconstruct_structure(ad)).passed


def test_full_verify_one_dimensional_complement(corpus, rot3_sc):
    algebras = [reconstruct_structure(ad) for ad in corpus if ad.m == 1] + [rot3_sc]
    assert len(algebras) > 1
    for sc in algebras:
        assert full_verify(sc).passed, sc.name


def test_oracle_wrapper(catalog):
    assert oracle.full_verify(catalog["aff4"]).passed

