"""Run the closed-form-versus-oracle comparison over the catalog and a fuzzed batch.

Run: python demos/verify_sweep.py [count]
"""
import sys
import time

from liegeo.algebra import reconstruct_structure
from liegeo.catalog import all_entries
from liegeo.fuzz import fuzz_corpus
from liegeo.verify import full_verify


def main(count: int = 20):
    algebras = all_entries() + [reconstruct_structure(ad) for ad in fuzz_corpus(count, seed=1)]
    start = time.perf_counter()
    worst = 0.0
    for sc in algebras:
        rep = full_verify(sc)
        worst = max(worst, rep.max_abs_deviation)
        notes = ", ".join(d["item"] for d in rep.known_deviations) or "-"
        print(f"{sc.name:<22} n={sc.n}  pass={rep.passed}  max dev={rep.max_abs_deviation:.1e}  "
              f"known deviations: {notes}")
    print(f"\n{len(algebras)} algebras, worst deviation {worst:.1e}, "
          f"{time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 20)
