"""Classify Randers drifts on the catalog algebras and evaluate flag curvatures.

For each lift the literal Berwald criterion is compared with the parallelism
oracle.  The vertical lift shows where the two disagree.

Run: python demos/randers_tour.py
"""
import numpy as np

from liegeo.algebra import extract_adapted
from liegeo.catalog import CATALOG_NAMES, catalog_entry
from liegeo.randers import (
    FlagQuery,
    RandersSpec,
    berwald_drift_space,
    classify,
    flag_curvature,
    parallel_drift_space,
)
from liegeo.report import fmt_number


def show_space(q, labels):
    if q.shape[1] == 0:
        return "{0}"
    vecs = []
    for col in q.T:
        col = col / col[np.argmax(np.abs(col))]
        vecs.append(" + ".join(f"{fmt_number(c)} {labels[i]}" for i, c in enumerate(col) if abs(c) > 1e-12))
    return "span{" + ", ".join(vecs) + "}"


def main():
    for name in CATALOG_NAMES:
        sc = catalog_entry(name)
        ad = extract_adapted(sc)
        print(f"{name}")
        for lift in ("none", "complete", "vertical"):
            lit = show_space(berwald_drift_space(ad, lift), sc.labels)
            par = show_space(parallel_drift_space(ad, lift), sc.labels)
            print(f"  {lift:>8}: criterion {lit:<28} parallel {par}")

    ad = extract_adapted(catalog_entry("paper5d"))
    print("\npaper5d drifts")
    for drift in ([0, 0, 0, 0, 0.5], [0, 0, 0.5, 0, 0], [0.5, 0, 0, 0, 0]):
        cls = classify(RandersSpec(ad, np.array(drift, float)))
        print(f"  X = {drift}: douglas={cls.douglas} berwald={cls.berwald} {list(cls.witnesses)}")
    cls = classify(RandersSpec(ad, np.array([0, 0.5, 0, 0, 0.0]), "vertical"))
    print(f"  X = 1/2 e2, vertical lift: criterion berwald={cls.berwald}, "
          f"douglas={cls.douglas}, parallel={cls.oracle_berwald}")

    u, v = np.eye(3)[0], np.eye(3)[1]
    spec = RandersSpec(ad, np.array([0, 0, 0, 0, 0.5]), "complete")
    print("\nflag curvatures of the complete lift, X = 1/2 Y3")
    for plane, pole in ((("e1c", "uv"), "e1c"), (("e2c", "uc"), "e2c")):
        case, val = flag_curvature(spec, FlagQuery(plane, pole, u))
        print(f"  plane {plane} flagpole {pole}: case {case}, K = {fmt_number(val)}")


if __name__ == "__main__":
    main()
