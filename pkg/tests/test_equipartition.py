import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import sign_counts, sweep_bisector
from hyperpierce.equipartition import (MassInstance, equipartition_search, ham_sandwich, is_equipartition,
                                       moment_curve_instance, moment_curve_point, orthant_counts, sign_vectors)
from hyperpierce.generate import random_mass_instance
from hyperpierce.radon import SearchExhausted
from hyperpierce.transversal import AffineHyperplane

CORNERS = MassInstance(2, [[(1, 1), (1, -1), (-1, 1), (-1, -1)]])


def oracle_ok(inst, hps):
    k = len(hps)
    return all(c * 2 ** k <= len(X) for X, cells in zip(inst.sets, sign_counts(inst.sets, hps))
               for c in cells.values())


def test_mass_instance_validation():
    with pytest.raises(ValueError):
        MassInstance(2, [])
    with pytest.raises(ValueError):
        MassInstance(2, [[]])
    with pytest.raises(ValueError):
        MassInstance(2, [[(1,)]])


def test_orthant_counts_examples():
    counts = orthant_counts(CORNERS, [AffineHyperplane([1, 0], 0), AffineHyperplane([0, 1], 0)])
    assert counts == {s: (1,) for s in sign_vectors(2)}
    flat = MassInstance(2, [[(0, 1), (0, 5)]])
    assert set(orthant_counts(flat, [AffineHyperplane([1, 0], 0)]).values()) == {(0,)}
    line = MassInstance(1, [[(0,), (1,), (2,), (3,)]])
    counts = orthant_counts(line, [AffineHyperplane([2], 3)])
    assert counts == {(1,): (2,), (-1,): (2,)} and is_equipartition(line, counts, 1)
    assert not is_equipartition(line, orthant_counts(line, [AffineHyperplane([1], 5)]), 1)
    with pytest.raises(ValueError):
        orthant_counts(line, [AffineHyperplane([1, 0], 0)])


def test_ham_sandwich_on_the_line():
    cert = ham_sandwich(MassInstance(1, [[(0,), (1,), (2,), (3,)]]))
    (h,) = cert.hyperplanes
    assert 1 <= h.offset / h.normal[0] <= 2
    assert cert.guaranteed and all(2 * c[0] <= 4 for c in cert.counts.values())


def test_ham_sandwich_needs_m_equal_d():
    with pytest.raises(ValueError):
        ham_sandwich(CORNERS)


def test_ham_sandwich_with_equal_sets():
    X = [(0, 0), (3, 1), (1, 4), (5, 5)]
    inst = MassInstance(2, [X, X])
    assert oracle_ok(inst, ham_sandwich(inst).hyperplanes)


@given(st.integers(0, 10 ** 6))
def test_ham_sandwich_in_the_plane(seed):
    rng = random.Random(seed)
    inst = random_mass_instance(2, [rng.randint(1, 5), rng.randint(1, 5)], 9, rng)
    cert = ham_sandwich(inst)
    assert oracle_ok(inst, cert.hyperplanes)
    # the sweep oracle only covers hyperplanes through two input points
    found = sweep_bisector(inst.sets, 2)
    if found is not None:
        assert oracle_ok(inst, [found])


def test_single_hyperplane_search_matches_ham_sandwich_contract():
    rng = random.Random(8)
    inst = random_mass_instance(2, [4, 3], 9, rng)
    cert = equipartition_search(inst, 1)
    assert cert.k == 1 and cert.guaranteed and oracle_ok(inst, cert.hyperplanes)


def test_two_planes_for_two_sets_in_space():
    inst = random_mass_instance(3, [8, 8], 9, random.Random(1))
    cert = equipartition_search(inst, 2)
    assert cert.guaranteed and oracle_ok(inst, cert.hyperplanes)
    assert all(c <= 2 for row in cert.counts.values() for c in row)


def test_three_planes_for_one_set_in_space():
    inst = random_mass_instance(3, [8], 9, random.Random(2))
    cert = equipartition_search(inst, 3)
    assert cert.guaranteed and oracle_ok(inst, cert.hyperplanes)
    assert all(c <= 1 for row in cert.counts.values() for c in row)


def test_search_below_the_regime_is_not_guaranteed():
    inst = random_mass_instance(2, [4, 4], 9, random.Random(3))
    try:
        cert = equipartition_search(inst, 2)
    except SearchExhausted:
        pytest.skip("no equipartition among the scanned pairs")
    assert not cert.guaranteed and oracle_ok(inst, cert.hyperplanes)


def test_moment_curve_examples():
    assert moment_curve_point(1, 3) == (1, 1, 1)
    assert moment_curve_point(2, 3) == (2, 4, 8)
    inst = moment_curve_instance(1, 1, 1, [3], params=[5, 2, 7])
    assert inst.sets == (((2,), (5,), (7,)),)
    inst = moment_curve_instance(2, 2, 3, [4, 4], seed=1)
    assert [len(X) for X in inst.sets] == [4, 4]
    ts = [p[0] for X in inst.sets for p in X]
    assert ts == sorted(ts) and len(set(ts)) == 8
    assert all(p == moment_curve_point(p[0], 3) for X in inst.sets for p in X)
    assert moment_curve_instance(2, 2, 3, [4, 4], seed=1) == inst
    with pytest.raises(ValueError):
        moment_curve_instance(2, 2, 3, [4])
    with pytest.raises(ValueError):
        moment_curve_instance(1, 1, 1, [2], params=[1, 1])


def test_moment_curve_instance_is_equipartitioned_at_the_bound():
    inst = moment_curve_instance(1, 2, 2, [8], seed=3)
    cert = equipartition_search(inst, 2)
    assert cert.guaranteed and oracle_ok(inst, cert.hyperplanes)


def test_moment_curve_fractional_parameters():
    assert moment_curve_point(F(1, 2), 2) == (F(1, 2), F(1, 4))
