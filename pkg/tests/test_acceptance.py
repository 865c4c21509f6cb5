"""Acceptance criteria 1-9.

Each test records its sub-checks with ``record``; the terminal summary prints
one PASS/FAIL line per criterion.  Sub-checks that cannot hold because the
reference statement itself is wrong are marked ``xfail(strict=True)``: they
run in full, report FAIL in the summary, and turn the suite red if they ever
start passing.
"""
from __future__ import annotations

import time
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from liegeo import oracle
from liegeo.algebra import extract_adapted, reconstruct_structure
from liegeo.base import connection_base, curvature_base, ricci_base
from liegeo.catalog import all_entries, catalog_entry
from liegeo.fuzz import fuzz_corpus
from liegeo.randers import (
    SCALING_PAIRS,
    FlagQuery,
    RandersSpec,
    berwald_drift_space,
    case_query,
    classify,
    flag_case_value,
    flag_curvature,
    parallel_drift_space,
)
from liegeo.reference import RICCI_DEVIATIONS, RICCI_PRINTED, SECTIONAL_GROUPS, ZERO_FAMILIES
from liegeo.report import tangent_payload
from liegeo.tangent import (
    LEMMA44_CASES,
    RICCI_ENTRIES,
    SECTIONAL_PAIRS,
    connection_tangent,
    curvature_relations,
    curvature_tangent,
    lemma44_arguments,
    lemma44_case,
    ricci_tangent_closed,
    sectional_tangent_closed,
    tangent_vector,
)

from conftest import record, rot3

pytestmark = pytest.mark.acceptance

TOL = 1e-9
EXACT = 1e-12
FUZZ_COUNT = 200
FUZZ_SEED = 7
RANDERS_SPECS = 1000
SCALING_TRIPLES = 100
PRINTED_SCALING_MISMATCH = {("vertical", 25), ("vertical", 26)}

REASON_N3 = ("the pure rotation algebra e(2) is a validated n = 3 algebra whose Berwald "
             "drift space is span{Y}; the claimed emptiness does not hold")
REASON_VERTICAL = ("the literal vertical-lift Berwald criterion admits central drifts in the "
                   "derived algebra, which are Berwald by that criterion but not Douglas")
REASON_SCALING = ("vertical cases 25/26 print -(7<a1,U>^2 + 3<a2,U>^2)/4 - <a2,U><b1,U> "
                  "(resp. the b analogue), which is not the matching sectional curvature")


# -- shared corpus and tensors -----------------------------------------------

@pytest.fixture(scope="module")
def acc_corpus():
    """Catalog entries followed by 200 fuzzed admissible algebras (n <= 8)."""
    catalog = [extract_adapted(sc) for sc in all_entries()]
    return catalog + fuzz_corpus(FUZZ_COUNT, seed=FUZZ_SEED, max_n=8)


@pytest.fixture(scope="module")
def tensors(acc_corpus):
    """Every tensor built for criteria 3-5, keyed by corpus index."""
    out = []
    for ad in acc_corpus:
        sc = reconstruct_structure(ad)
        tsc = oracle.tangent_brackets(sc)
        ct = connection_base(ad)
        tct = connection_tangent(ad)
        out.append({
            "base": curvature_base(ct, sc).r,
            "base_oracle": oracle.curvature_tensor(sc),
            "tangent": curvature_tangent(tct, tsc).r,
            "tangent_oracle": oracle.curvature_tensor(tsc),
        })
    return out


def p_pairs(m: int, rng):
    """Basis pairs of ``P`` (up to 5 vectors) plus one random orthonormal pair."""
    if m < 2:
        return [(np.ones(1), None)]
    eye = np.eye(m)
    pairs = [(eye[i], eye[j]) for i, j in permutations(range(min(m, 5)), 2)]
    q, _ = np.linalg.qr(rng.normal(size=(m, 2)))
    return pairs + [(q[:, 0], q[:, 1])]


def plane_lookup(payload):
    table = {}
    for entry in payload["sectional"]:
        a, b = entry["plane"]
        table[(a, b)] = table[(b, a)] = entry["K"]
    return table


# -- criterion 1 ---------------------------------------------------------------

def test_criterion_1_sectional_reproduction():
    sc = catalog_entry("paper5d")
    start = time.perf_counter()
    payload = tangent_payload(sc, extract_adapted(sc))
    elapsed = time.perf_counter() - start
    k = plane_lookup(payload)
    worst = 0.0
    for value, planes in SECTIONAL_GROUPS.items():
        for plane in planes:
            worst = max(worst, abs(k[plane] - float(value)))
    labels = ("Y1", "Y2", "Y3")
    for fam in ZERO_FAMILIES:
        for u, v in permutations(labels, 2):
            plane = tuple(_token(t, u, v) for t in fam)
            if plane[0] != plane[1]:
                worst = max(worst, abs(k[plane]))
    ok_values = record(1, "printed sectional values", worst <= EXACT, f"max dev {worst:.2e}")
    ok_time = record(1, "runtime < 1 s", elapsed < 1.0, f"{elapsed:.3f} s")
    assert ok_values and ok_time


def _token(tok: str, u: str, v: str) -> str:
    base, kind = tok[:-1], tok[-1]
    return {"u": u, "v": v}.get(base, base) + kind


# -- criterion 2 ---------------------------------------------------------------

def test_criterion_2_ricci_reproduction():
    sc = catalog_entry("paper5d")
    payload = tangent_payload(sc, extract_adapted(sc))
    diag = payload["ricci_diagonal"]
    worst = max(abs(diag[label] - float(value))
                for label, value in RICCI_PRINTED.items() if label not in RICCI_DEVIATIONS)
    ok_printed = record(2, "printed Ricci values", worst <= EXACT, f"max dev {worst:.2e}")
    ok_mixed = record(2, "mixed entries vanish", payload["ricci_offdiagonal_max"] <= EXACT,
                      f"{payload['ricci_offdiagonal_max']:.2e}")
    r = oracle.curvature_tensor(oracle.tangent_brackets(sc))
    ric = oracle.ricci(r)
    labels = payload["labels"]
    dev = max(abs(ric[labels.index(lbl), labels.index(lbl)] - float(expected))
              for lbl, (_, expected) in RICCI_DEVIATIONS.items())
    dev = max(dev, max(abs(diag[lbl] - float(exp)) for lbl, (_, exp) in RICCI_DEVIATIONS.items()))
    ok_trace = record(2, "e1c/e1v match trace oracle (-1/2, 1/2)", dev <= EXACT, f"{dev:.2e}")
    flagged = {(d["item"], d["printed"]) for d in payload["known_deviations"]}
    ok_flag = record(2, "printed -3/4 and 0 flagged",
                     {("r~(e1c)", str(Fraction(-3, 4))), ("r~(e1v)", "0")} <= flagged)
    assert ok_printed and ok_mixed and ok_trace and ok_flag


# -- criterion 3 ---------------------------------------------------------------

def test_criterion_3_base_oracle():
    start = time.perf_counter()
    corpus = [extract_adapted(sc) for sc in all_entries()] + fuzz_corpus(
        FUZZ_COUNT, seed=FUZZ_SEED, max_n=8)
    worst = 0.0
    for ad in corpus:
        sc = reconstruct_structure(ad)
        worst = max(worst, float(np.max(np.abs(connection_base(ad).gamma
                                                - oracle.koszul_connection(sc)))))
    elapsed = time.perf_counter() - start
    ok_size = record(3, "corpus size", len(corpus) >= 204 and max(a.n for a in corpus) <= 8,
                     f"{len(corpus)} algebras")
    ok_dev = record(3, "connection vs Koszul", worst <= TOL, f"max dev {worst:.2e}")
    ok_time = record(3, "runtime < 30 s", elapsed < 30.0, f"{elapsed:.2f} s")
    assert ok_size and ok_dev and ok_time


# -- criterion 4 ---------------------------------------------------------------

def test_criterion_4_tangent_oracle(acc_corpus, tensors):
    rng = np.random.default_rng(4)
    conn = cases = sect = 0.0
    for ad, t in zip(acc_corpus, tensors):
        sc = reconstruct_structure(ad)
        ref = oracle.koszul_connection(oracle.tangent_brackets(sc))
        conn = max(conn, float(np.max(np.abs(connection_tangent(ad).gamma - ref))))
        r = t["tangent_oracle"]
        for u, v in p_pairs(ad.m, rng):
            for cid, (needs, _) in LEMMA44_CASES.items():
                if needs == "uv" and v is None:
                    continue
                val = lemma44_case(ad, cid, u, v)
                for X, Y, Z in lemma44_arguments(ad, cid, u, v):
                    ryz = np.einsum("i,j,k,ijkl->l", X, Y, Z, r)
                    cases = max(cases, float(np.max(np.abs(ryz - val))))
            for pair in SECTIONAL_PAIRS:
                if v is None and any(tok[0] == "v" for tok in pair):
                    continue
                x, y = (tangent_vector(ad.n, tok, u, v) for tok in pair)
                sect = max(sect, abs(sectional_tangent_closed(ad, pair, u, v)
                                     - oracle.sectional(r, x, y)))
    ok_c = record(4, "tangent connection vs Koszul", conn <= TOL, f"{conn:.2e}")
    ok_l = record(4, "30 curvature cases", cases <= TOL, f"{cases:.2e}")
    ok_s = record(4, "18 sectional closed forms", sect <= TOL, f"{sect:.2e}")
    assert ok_c and ok_l and ok_s


# -- criterion 5 ---------------------------------------------------------------

def test_criterion_5_ricci_identities(acc_corpus, tensors):
    rng = np.random.default_rng(5)
    worst = 0.0
    for ad, t in zip(acc_corpus, tensors):
        base_ric = oracle.ricci(t["base_oracle"])
        ric = oracle.ricci(t["tangent_oracle"])
        for _ in range(3):
            u, v = rng.normal(size=(2, ad.m))
            if ad.m < 2:
                v = None
            for entry, pairs in RICCI_ENTRIES.items():
                if v is None and entry in (9, 10, 15):
                    continue
                closed = ricci_tangent_closed(ad, entry, base_ric, u, v)
                for p, q in pairs:
                    x = tangent_vector(ad.n, p, u, v)
                    y = tangent_vector(ad.n, q, u, v)
                    worst = max(worst, abs(x @ ric @ y - closed))
    assert record(5, "15 Ricci identities", worst <= TOL, f"max dev {worst:.2e}")


# -- criterion 6 ---------------------------------------------------------------

def test_criterion_6_relations(acc_corpus):
    worst = 0.0
    for ad in acc_corpus:
        rel = curvature_relations(ad)
        worst = max(worst, rel.relation_I, rel.relation_II, rel.relation_III)
    ok_rel = record(6, "relations I-III", worst <= TOL, f"max dev {worst:.2e}")
    rel = curvature_relations(extract_adapted(catalog_entry("paper5d")))
    ok_sign = record(6, "paper5d has +, -, 0",
                     rel.has_positive and rel.has_negative and rel.has_zero)
    assert ok_rel and ok_sign


# -- criterion 7 ---------------------------------------------------------------

def _randers_specs(corpus):
    """1000 specs cycling through lifts; most drifts come from the Berwald space."""
    rng = np.random.default_rng(7)
    lifts = ("none", "complete", "vertical")
    specs = []
    for t in range(RANDERS_SPECS):
        ad = corpus[t % len(corpus)]
        lift = lifts[t % 3]
        space = berwald_drift_space(ad, lift)
        if space.shape[1] and rng.random() < 0.7:
            x = space @ rng.normal(size=space.shape[1])
        else:
            x = rng.normal(size=ad.n)
        specs.append(RandersSpec(ad, 0.9 * rng.random() * x / np.linalg.norm(x), lift))
    return specs


@pytest.fixture(scope="module")
def randers_outcomes(acc_corpus):
    specs = _randers_specs(acc_corpus)
    return [(s.lift, classify(s)) for s in specs]


def _counterexamples(outcomes, lifts):
    hits = [c for lift, c in outcomes if lift in lifts]
    bad = sum(1 for c in hits if c.berwald and not c.douglas)
    return bad, sum(1 for c in hits if c.berwald), len(hits)


def test_criterion_7_berwald_douglas_base_and_complete(randers_outcomes):
    bad, berwald, total = _counterexamples(randers_outcomes, ("none", "complete"))
    assert record(7, "Berwald=>Douglas (none, complete)", bad == 0,
                  f"{bad} counterexamples among {berwald} Berwald of {total}")


@pytest.mark.xfail(strict=True, reason=REASON_VERTICAL)
def test_criterion_7_berwald_douglas_vertical(randers_outcomes):
    bad, berwald, total = _counterexamples(randers_outcomes, ("vertical",))
    assert record(7, "Berwald=>Douglas (vertical)", bad == 0,
                  f"{bad} counterexamples among {berwald} Berwald of {total}")


def test_criterion_7_literal_vs_parallel(acc_corpus):
    worst = 0.0
    for ad in acc_corpus:
        for lift in ("none", "complete"):
            a = berwald_drift_space(ad, lift)
            b = parallel_drift_space(ad, lift)
            worst = max(worst, float(np.max(np.abs(a @ a.T - b @ b.T), initial=0.0)))
    assert record(7, "literal criteria agree with parallelism", worst <= TOL,
                  f"max projector gap {worst:.2e}")


@pytest.mark.xfail(strict=True, reason=REASON_N3)
def test_criterion_7_n3_no_berwald(acc_corpus):
    n3 = [ad for ad in acc_corpus if ad.n == 3] + [rot3()]
    nonempty = [ad.name for ad in n3 if berwald_drift_space(ad).shape[1] > 0]
    assert record(7, "n = 3 drift space empty", not nonempty,
                  f"{len(nonempty)} of {len(n3)} n = 3 algebras admit a drift, e.g. {nonempty[:1]}")


def test_criterion_7_flag_values():
    ad = extract_adapted(catalog_entry("paper5d"))
    u, v = np.eye(3)[0], np.eye(3)[1]
    spec_c = RandersSpec(ad, np.array([0, 0, 0, 0, 0.5]), "complete")
    vals = [
        (flag_curvature(spec_c, FlagQuery(("e1c", "uv"), "e1c", u))[1], -0.75),
        (flag_curvature(spec_c, FlagQuery(("e1c", "uv"), "uv", u))[1], -0.75),
        (flag_curvature(spec_c, FlagQuery(("e2c", "uc"), "e2c", u))[1], 0.25),
    ]
    for drift in (np.array([0, 0, 0, 0, 0.5]), np.array([0, 0.3, 0, 0, -0.4])):
        spec_v = RandersSpec(ad, drift, "vertical")
        expected = -3 / (4 * (1 + drift[2]) ** 2)
        vals.append((flag_curvature(spec_v, FlagQuery(("uv", "vc"), "uv", u, v))[1], expected))
    # the factor itself, evaluated for drifts with a Y1 component
    for g in (0.3, -0.45):
        drift = np.array([0, 0, g, 0, 0.2])
        _, val = flag_case_value(ad, "vertical", ("uv", "vc"), "uv", drift, u, v)
        vals.append((val, -3 / (4 * (1 + g) ** 2)))
    worst = max(abs(a - b) for a, b in vals)
    assert record(7, "flag values -3/4, 1/4, -3/(4(1+g(X,Y1))^2)", worst <= EXACT,
                  f"max dev {worst:.2e}")


# -- criterion 8 ---------------------------------------------------------------

def _scaling_triples(corpus):
    rng = np.random.default_rng(8)
    pool = [ad for ad in corpus if ad.m >= 2]
    triples = []
    for t in range(SCALING_TRIPLES):
        ad = pool[rng.integers(len(pool))]
        q, _ = np.linalg.qr(rng.normal(size=(ad.m, 2)))
        x = rng.normal(size=ad.n)
        x *= 0.95 * rng.random() / np.linalg.norm(x)
        triples.append((ad, q[:, 0], q[:, 1], x))
    return triples


def _scaling_worst(corpus, keys):
    worst, where = 0.0, None
    for ad, u, v, x in _scaling_triples(corpus):
        for key in keys:
            lift, case_id = key
            plane, pole = case_query(lift, case_id)
            _, val = flag_case_value(ad, lift, plane, pole, x, u, v)
            w = {"e1": x[0], "e2": x[1]}.get(pole[:-1], x[2:] @ u)
            dev = abs(val * (1 + w) ** 2 - sectional_tangent_closed(ad, SCALING_PAIRS[key], u, v))
            if dev > worst:
                worst, where = dev, key
    return worst, where


def test_criterion_8_scaling_identities(acc_corpus):
    keys = sorted(set(SCALING_PAIRS) - PRINTED_SCALING_MISMATCH)
    worst, where = _scaling_worst(acc_corpus, keys)
    assert record(8, f"{len(keys)} scaling identities", worst <= TOL,
                  f"max dev {worst:.2e} at {where}")


@pytest.mark.xfail(strict=True, reason=REASON_SCALING)
def test_criterion_8_scaling_vertical_25_26(acc_corpus):
    worst, where = _scaling_worst(acc_corpus, sorted(PRINTED_SCALING_MISMATCH))
    assert record(8, "vertical cases 25, 26", worst <= TOL, f"max dev {worst:.2e} at {where}")


# -- criterion 9 ---------------------------------------------------------------

def test_criterion_9_properties(tensors):
    worst = 0.0
    for t in tensors:
        for r in t.values():
            worst = max(worst, max(oracle.symmetry_defects(r).values()))
    ok_sym = record(9, f"symmetries and Bianchi on {4 * len(tensors)} tensors", worst <= TOL,
                    f"max defect {worst:.2e}")
    exact = all(
        np.array_equal(reconstruct_structure(extract_adapted(sc)).tensor, sc.tensor)
        and extract_adapted(reconstruct_structure(extract_adapted(sc))) == extract_adapted(sc)
        for sc in all_entries())
    ok_rt = record(9, "catalog round trip exact", exact)
    ricci_sym = max(float(np.max(np.abs(ricci_base(curvature_base(
        connection_base(ad), sc)) - ricci_base(curvature_base(connection_base(ad), sc)).T)))
        for sc in all_entries() for ad in [extract_adapted(sc)])
    ok_ric = record(9, "base Ricci symmetric", ricci_sym <= TOL, f"{ricci_sym:.2e}")
    assert ok_sym and ok_rt and ok_ric
