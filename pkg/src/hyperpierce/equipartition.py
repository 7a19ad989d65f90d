"""Equipartitions of finite point sets by k hyperplanes.

An equipartition leaves at most ``|X_i| / 2^k`` points of every set in
every open orthant.  Solvers go through transversals: k hyperplanes that
pierce the hull of every subset with more than ``|X_i| / 2^k`` points
cannot leave that many points in one open orthant.  Only the
inclusion-minimal such subsets are passed to the transversal solver;
piercing those pierces every superset's hull.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .bounds import DeltaBounds, delta_bounds, required_dimension
from .exact import vec
from .transversal import (AffineHyperplane, Polytope, TransversalCertificate, affine_k_transversal,
                          dolnikov_hyperplane)

__all__ = [
    "MassInstance", "EquipartitionCertificate", "orthant_counts", "is_equipartition",
    "ham_sandwich", "equipartition_search", "moment_curve_instance", "delta_bounds", "DeltaBounds",
]


@dataclass(frozen=True)
class MassInstance:
    dim: int
    sets: tuple

    def __init__(self, dim: int, sets: Sequence[Sequence[Sequence]]):
        clean = []
        for X in sets:
            pts = tuple(vec(p) for p in X)
            if not pts:
                raise ValueError("every point set must be nonempty")
            if any(len(p) != dim for p in pts):
                raise ValueError(f"all points must lie in R^{dim}")
            clean.append(pts)
        if not clean:
            raise ValueError("need at least one point set")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "sets", tuple(clean))

    @property
    def m(self) -> int:
        return len(self.sets)


def sign_vectors(k: int) -> list[tuple]:
    return list(product((1, -1), repeat=k))


def orthant_counts(inst: MassInstance, hps: Sequence[AffineHyperplane]) -> dict[tuple, tuple]:
    """Count points of each set in each open orthant; points on a hyperplane count nowhere."""
    if any(h.dim != inst.dim for h in hps):
        raise ValueError("hyperplane and instance dimensions differ")
    k = len(hps)
    table = {s: [0] * inst.m for s in sign_vectors(k)}
    for i, X in enumerate(inst.sets):
        for p in X:
            s = tuple(h.side(p) for h in hps)
            if 0 in s:
                continue
            table[s][i] += 1
    return {s: tuple(c) for s, c in table.items()}


def is_equipartition(inst: MassInstance, counts: dict[tuple, tuple], k: int) -> bool:
    """Every count at most ``|X_i| / 2^k``, compared exactly as ``count * 2^k <= |X_i|``."""
    return all(c * 2 ** k <= len(X) for row in counts.values() for c, X in zip(row, inst.sets))


@dataclass(frozen=True)
class EquipartitionCertificate:
    hyperplanes: tuple
    counts: dict
    guaranteed: bool
    transversal: TransversalCertificate | None = None

    @property
    def k(self) -> int:
        return len(self.hyperplanes)


def _minimal_majority_polytopes(X: Sequence, k: int) -> list[Polytope]:
    size = len(X) // 2 ** k + 1
    return [Polytope([X[i] for i in A]) for A in combinations(range(len(X)), size)]


def _certify(inst: MassInstance, hps: Sequence[AffineHyperplane], k: int, guaranteed: bool,
             cert: TransversalCertificate) -> EquipartitionCertificate:
    counts = orthant_counts(inst, hps)
    if not is_equipartition(inst, counts, k):
        raise RuntimeError("transversal did not yield an equipartition")
    return EquipartitionCertificate(tuple(hps), counts, guaranteed, cert)


def ham_sandwich(inst: MassInstance) -> EquipartitionCertificate:
    """One hyperplane leaving at most half of each of the d sets in R^d on either open side."""
    if inst.m != inst.dim:
        raise ValueError(f"ham sandwich needs as many sets as dimensions ({inst.m} vs {inst.dim})")
    families = [_minimal_majority_polytopes(X, 1) for X in inst.sets]
    cert = dolnikov_hyperplane(families)
    return _certify(inst, cert.hyperplanes, 1, True, cert)


def equipartition_search(inst: MassInstance, k: int) -> EquipartitionCertificate:
    """k hyperplanes equipartitioning every set, via the transversal solver.

    Outside the proven (m, k) regimes the search still runs; the result is
    then marked ``guaranteed=False``.
    """
    polytopes, coloring = [], []
    for i, X in enumerate(inst.sets):
        ps = _minimal_majority_polytopes(X, k)
        polytopes.extend(ps)
        coloring.extend([i] * len(ps))
    need, _ = required_dimension(inst.m, k)
    cert = affine_k_transversal(polytopes, k, inst.m, coloring, regime_check=False)
    return _certify(inst, cert.hyperplanes, k, inst.dim >= need, cert)


def moment_curve_point(t, d: int) -> tuple:
    t = Fraction(t)
    return tuple(t ** e for e in range(1, d + 1))


def moment_curve_instance(m: int, k: int, d: int, sizes: Sequence[int], seed: int = 0,
                          params: Sequence | None = None) -> MassInstance:
    """Point sets on ``t -> (t, t^2, ..., t^d)`` in m consecutive parameter blocks.

    Parameters are distinct small positive integers drawn from ``seed``
    unless given explicitly; ``k`` is recorded only by the caller.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if len(sizes) != m:
        raise ValueError("one size per set is required")
    total = sum(sizes)
    if params is None:
        rng = random.Random(seed)
        params = sorted(rng.sample(range(1, 4 * total + 1), total))
    else:
        params = sorted(Fraction(p) for p in params)
        if len(set(params)) != total:
            raise ValueError("need one distinct parameter per point")
    sets, start = [], 0
    for s in sizes:
        sets.append([moment_curve_point(t, d) for t in params[start:start + s]])
        start += s
    return MassInstance(d, sets)
