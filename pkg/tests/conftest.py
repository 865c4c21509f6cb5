"""Shared fixtures: catalog algebras, the fuzzed corpus and a few hand-built algebras."""
from __future__ import annotations

import numpy as np
import pytest

from liegeo.algebra import AdaptedData, StructureConstants, extract_adapted, reconstruct_structure
from liegeo.catalog import CATALOG_NAMES, catalog_entry
from liegeo.fuzz import fuzz_corpus

CORPUS_SIZE = 200
CORPUS_SEED = 20240611


@pytest.fixture(scope="session")
def catalog():
    return {name: catalog_entry(name) for name in CATALOG_NAMES}


@pytest.fixture(scope="session")
def catalog_adapted(catalog):
    return {name: extract_adapted(sc) for name, sc in catalog.items()}


@pytest.fixture(scope="session")
def paper5d(catalog_adapted):
    return catalog_adapted["paper5d"]


@pytest.fixture(scope="session")
def corpus():
    """200 fuzzed admissible algebras (n <= 8) cycling through every family."""
    return fuzz_corpus(CORPUS_SIZE, seed=CORPUS_SEED, max_n=8)


@pytest.fixture(scope="session")
def full_corpus(catalog_adapted, corpus):
    return list(catalog_adapted.values()) + list(corpus)


def rot3() -> AdaptedData:
    """Three-dimensional Euclidean motions: ``[Y, e1] = e2``, ``[Y, e2] = -e1``."""
    z = np.zeros((1, 1))
    return AdaptedData(3, np.zeros(1), np.ones(1), -np.ones(1), np.zeros(1), z, z, name="rot3")


def abelian(n: int = 4) -> StructureConstants:
    return StructureConstants.from_entries(n, [], "abelian")


@pytest.fixture
def rot3_data():
    return rot3()


@pytest.fixture
def rot3_sc():
    return reconstruct_structure(rot3())


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, list[tuple[str, bool, str]]] = {}


def record(criterion: int, part: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE_RESULTS.setdefault(criterion, []).append((part, bool(ok), detail))
    return bool(ok)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE_RESULTS):
        parts = ACCEPTANCE_RESULTS[crit]
        verdict = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
        failed = [f"{p} ({d})" if d else p for p, ok, d in parts if not ok]
        tail = f"; failing: {', '.join(failed)}" if failed else ""
        tr.write_line(f"criterion {crit}: {verdict} [{len(parts)} checks]{tail}")
