"""Compare the compiled and pure-Python tuple scans on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]

Workloads:

* ``pipeline``: containment masks from the constrained Radon search of a
  two-plane transversal instance (the solver's real hot loop);
* ``planted-k2``: dense masks whose only valid tuple is the last one scanned;
* ``exhaust-k2`` / ``exhaust-k3``: dense masks with no valid tuple at all
  (``exhaust-k3`` has 130 members, so each bitset spans three 64-bit words).
"""
from __future__ import annotations

import argparse
import random
import timeit

from itertools import combinations

from hyperpierce.gale import center_and_lift, inverse_gale
from hyperpierce.generate import random_mass_instance
from hyperpierce.kernels import compiled_first_valid_tuple, python_first_valid_tuple
from hyperpierce.kneser import SetFamily
from hyperpierce.radon import _member_masks, containment_masks, enumerate_minimal_radon_pairs
from hyperpierce.transversal import Polytope, build_witness_set


def pipeline_workload(seed: int):
    """Masks of the two-plane search behind a two-set equipartition in R^3."""
    inst = random_mass_instance(3, [8, 8], 9, random.Random(seed))
    families = [[Polytope([X[i] for i in A]) for A in combinations(range(8), 3)] for X in inst.sets]
    ws = build_witness_set(families, r=4)
    Y2 = center_and_lift(ws.points).config
    X = inverse_gale(Y2)
    fam = SetFamily(Y2.n, ws.family.members)
    pairs = enumerate_minimal_radon_pairs(X)
    return containment_masks(pairs, _member_masks(fam, X.n)), 2, len(fam.members)


def _dense(rng: random.Random, count: int, members: int, density: float) -> list[tuple[int, int]]:
    def bits():
        return sum(1 << j for j in range(members) if rng.random() < density)
    return [(bits(), bits()) for _ in range(count)]


def planted_workload(seed: int, pairs: int, members: int):
    """Dense masks where only the last two pairs form a valid 2-tuple."""
    rng = random.Random(seed)
    masks = _dense(rng, pairs - 2, members, 0.9)
    half = sum(1 << j for j in range(0, members, 2))
    rest = (1 << members) - 1 - half
    return masks + [(half, 0), (rest, rest)], 2, members


def exhaustive_workload(seed: int, k: int, pairs: int, members: int):
    """Dense masks with no valid tuple, so the scan visits every tuple."""
    rng = random.Random(seed)
    return _dense(rng, pairs, members, 0.97), k, members


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    workloads = {
        "pipeline": pipeline_workload(args.seed),
        "planted-k2": planted_workload(args.seed, 600, 90),
        "exhaust-k2": exhaustive_workload(args.seed, 2, 500, 70),
        "exhaust-k3": exhaustive_workload(args.seed, 3, 80, 130),
    }
    print(f"{'workload':<11} {'pairs':>6} {'members':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, (masks, k, nm) in workloads.items():
        expect = python_first_valid_tuple(masks, k, nm)
        py = min(timeit.repeat(lambda: python_first_valid_tuple(masks, k, nm), number=1, repeat=args.repeat))
        if compiled_first_valid_tuple is None:
            print(f"{name:<11} {len(masks):>6} {nm:>8} {py:>10.4f} {'n/a':>10} {'n/a':>8}")
            continue
        if compiled_first_valid_tuple(masks, k, nm) != expect:
            raise SystemExit(f"{name}: backends disagree")
        cy = min(timeit.repeat(lambda: compiled_first_valid_tuple(masks, k, nm), number=1, repeat=args.repeat))
        print(f"{name:<11} {len(masks):>6} {nm:>8} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
