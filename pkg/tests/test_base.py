import numpy as np
import pytest

from liegeo import oracle
from liegeo.algebra import AdaptedData, reconstruct_structure
from liegeo.base import (
    biinvariance_obstruction,
    connection_base,
    curvature_base,
    derived_geodesic_directions,
    derived_geodesic_residual,
    is_geodesic_vector,
    is_unimodular,
    ricci_base,
    sectional,
    sectional_closed_form,
)
from liegeo.errors import BadCaseArgsError, DegeneratePlaneError, ZeroVectorError

E1, E2, Y1, Y2, Y3 = np.eye(5)


def geometry(ad):
    sc = reconstruct_structure(ad)
    ct = connection_base(ad)
    return sc, ct, curvature_base(ct, sc)


def test_paper5d_connection_entries(paper5d):
    ct = connection_base(paper5d)
    assert np.allclose(ct.nabla(E1, E2), 0.5 * Y1, atol=0)
    assert np.allclose(ct.nabla(Y1, E1), 0.5 * (E2 - Y2), atol=0)


def test_rot4_connection_matches_oracle(catalog, catalog_adapted):
    ct = connection_base(catalog_adapted["rot4"])
    assert np.array_equal(ct.gamma, oracle.koszul_connection(catalog["rot4"]))
    y1 = np.eye(4)[2]
    assert np.allclose(ct.nabla(y1, np.eye(4)[0]), np.eye(4)[1])


def test_zero_data_flat():
    ad = AdaptedData.zeros(5)
    sc, ct, rt = geometry(ad)
    assert not np.any(ct.gamma) and not np.any(rt.r)
    assert not np.any(ricci_base(rt))


def test_connection_invariants_on_corpus(full_corpus):
    for ad in full_corpus:
        sc = reconstruct_structure(ad)
        ct = connection_base(ad)
        assert ct.torsion_defect(sc) <= 1e-9
        assert ct.metric_defect() <= 1e-9


def test_rot4_flat(catalog_adapted):
    _, _, rt = geometry(catalog_adapted["rot4"])
    assert np.max(np.abs(rt.r)) <= 1e-12
    assert np.max(np.abs(ricci_base(rt))) <= 1e-12


def test_paper5d_curvature_values(paper5d):
    _, _, rt = geometry(paper5d)
    assert rt.apply(E1, E2, E2) @ E1 == pytest.approx(0.25, abs=1e-12)
    assert sectional(rt, E1, E2) == pytest.approx(0.25, abs=1e-12)
    assert sectional(rt, Y1, E1) == pytest.approx(-0.5, abs=1e-12)
    with pytest.raises(DegeneratePlaneError):
        sectional(rt, Y1, 2 * Y1)


def test_sectional_scale_invariant(paper5d):
    _, _, rt = geometry(paper5d)
    u, v = Y1 + E2, 3 * Y2 - E1
    assert sectional(rt, u, v) == pytest.approx(sectional(rt, 2 * u, v + 5 * u), abs=1e-12)


def test_closed_form_examples(paper5d, catalog_adapted):
    p = np.eye(3)
    assert sectional_closed_form(paper5d, "uv", p[0], p[1]) == pytest.approx(-0.75)
    assert sectional_closed_form(catalog_adapted["aff4"], "e1e2") == -1.0
    # u = Y3 is orthogonal to a1, a2, b1 and in ker f1
    assert sectional_closed_form(paper5d, "e1u", p[2]) == 0.0


def test_closed_form_rejects_bad_args(paper5d):
    p = np.eye(3)
    with pytest.raises(BadCaseArgsError):
        sectional_closed_form(paper5d, "uv", p[0], p[0])
    with pytest.raises(BadCaseArgsError):
        sectional_closed_form(paper5d, "e1u", 2 * p[0])
    with pytest.raises(BadCaseArgsError):
        sectional_closed_form(paper5d, "bogus")


def test_closed_forms_match_generic(full_corpus):
    for ad in full_corpus:
        _, _, rt = geometry(ad)
        n, m = ad.n, ad.m
        eye = np.eye(n)
        assert sectional_closed_form(ad, "e1e2") == pytest.approx(sectional(rt, eye[0], eye[1]), abs=1e-9)
        rng = np.random.default_rng(n)
        q, _ = np.linalg.qr(rng.normal(size=(m, min(m, 2))))
        u = q[:, 0]
        U = ad.embed(u)
        assert sectional_closed_form(ad, "e1u", u) == pytest.approx(sectional(rt, eye[0], U), abs=1e-9)
        assert sectional_closed_form(ad, "e2u", u) == pytest.approx(sectional(rt, eye[1], U), abs=1e-9)
        if m >= 2:
            v = q[:, 1]
            assert sectional_closed_form(ad, "uv", u, v) == pytest.approx(
                sectional(rt, U, ad.embed(v)), abs=1e-9)


def test_ricci_values(paper5d, catalog_adapted):
    _, _, rt = geometry(paper5d)
    ric = ricci_base(rt)
    assert ric[1, 1] == pytest.approx(0.5, abs=1e-12)
    assert np.allclose(ric, ric.T, atol=1e-12)


def test_ricci_is_sum_of_sectional_numerators(full_corpus):
    for ad in full_corpus[:60]:
        _, _, rt = geometry(ad)
        ric = ricci_base(rt)
        eye = np.eye(ad.n)
        for i in range(ad.n):
            s = sum(rt.apply(eye[m], eye[i], eye[i]) @ eye[m] for m in range(ad.n) if m != i)
            assert ric[i, i] == pytest.approx(s, abs=1e-9)


def test_curvature_symmetries(full_corpus):
    for ad in full_corpus:
        _, _, rt = geometry(ad)
        assert max(rt.symmetry_defects().values()) <= 1e-9


def test_geodesic_vectors(paper5d):
    ct = connection_base(paper5d)
    assert is_geodesic_vector(paper5d, ct, Y1 + Y2)[0]
    assert is_geodesic_vector(paper5d, ct, E1)[0]
    ok, resid = is_geodesic_vector(paper5d, ct, E1 + E2)
    assert not ok and resid == pytest.approx(1.0)
    assert derived_geodesic_residual(paper5d, 1.0, 1.0) == pytest.approx(1.0)
    with pytest.raises(ZeroVectorError):
        is_geodesic_vector(paper5d, ct, np.zeros(5))


def test_every_p_vector_geodesic(full_corpus):
    rng = np.random.default_rng(0)
    for ad in full_corpus:
        ct = connection_base(ad)
        x = ad.embed(rng.normal(size=ad.m))
        assert is_geodesic_vector(ad, ct, x)[0]


def test_derived_quadratic_agrees_with_direct(full_corpus):
    rng = np.random.default_rng(1)
    for ad in full_corpus:
        ct = connection_base(ad)
        lam, mu = rng.normal(size=2)
        x = lam * np.eye(ad.n)[0] + mu * np.eye(ad.n)[1]
        assert is_geodesic_vector(ad, ct, x)[1] == pytest.approx(
            derived_geodesic_residual(ad, lam, mu), abs=1e-9)
        dirs = derived_geodesic_directions(ad)
        if dirs != "all":
            for lam, mu in dirs:
                x = lam * np.eye(ad.n)[0] + mu * np.eye(ad.n)[1]
                assert is_geodesic_vector(ad, ct, x)[0]


def test_unimodular(paper5d, catalog_adapted):
    assert is_unimodular(paper5d)
    assert not is_unimodular(catalog_adapted["aff4"])
    assert is_unimodular(catalog_adapted["rot4"])


def test_biinvariance_obstructions(paper5d, catalog_adapted, full_corpus):
    obs = biinvariance_obstruction(paper5d)
    assert "a2 = 0" in obs and "<f1(u), v> = 0 for all u, v" in obs
    obs = biinvariance_obstruction(catalog_adapted["aff4"])
    assert "a1 = 0" in obs and "b2 = 0" in obs
    assert biinvariance_obstruction(AdaptedData.zeros(5)) == []
    assert all(biinvariance_obstruction(ad) for ad in full_corpus)
