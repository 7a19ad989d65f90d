import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import sign_counts
from hyperpierce.gale import LinearHyperplane
from hyperpierce.generate import colorable_family, dolnikov_instance, intersecting_family
from hyperpierce.kneser import majority_family
from hyperpierce.transversal import (AffineHyperplane, HypothesisViolation, Missed, Polytope, RegimeViolation,
                                     TransversalCertificate, affine_k_transversal, build_witness_set,
                                     check_certificate, check_pairwise_intersecting, dolnikov_hyperplane,
                                     pierces_verify, polytopes_intersect)


def seg(a, b):
    return Polytope([(F(a),), (F(b),)])


X0 = AffineHyperplane([1], 0)


def test_affine_hyperplane_is_canonical():
    assert AffineHyperplane([-2, 4], 6) == AffineHyperplane([1, -2], -3)
    assert AffineHyperplane([F(1, 2), 0], F(1, 3)).normal == (3, 0)
    with pytest.raises(ValueError):
        AffineHyperplane([0, 0], 1)
    assert X0.side((F(1),)) == 1 and X0.side((F(-1),)) == -1 and X0.side((0,)) == 0


def test_pierces_verify_examples():
    cert = pierces_verify([X0], [seg(-1, 1), seg(0, 2)])
    assert [w.point for w in cert.witnesses] == [(0,), (0,)]
    assert check_certificate(cert, [seg(-1, 1), seg(0, 2)])
    assert pierces_verify([X0], [seg(1, 2)]) == Missed(0)
    with pytest.raises(ValueError):
        pierces_verify([X0], [Polytope([(0, 0)])])
    with pytest.raises(ValueError):
        pierces_verify([], [seg(0, 1)])


def test_two_planes_pierce_straddling_boxes():
    rng = random.Random(3)
    h1, h2 = AffineHyperplane([1, 1, 0], 1), AffineHyperplane([0, 1, -1], 0)
    boxes = []
    for i in range(6):
        h = (h1, h2)[i % 2]
        # a point on h, then a box around it
        while True:
            x = [F(rng.randint(-5, 5)) for _ in range(3)]
            j = next(t for t, a in enumerate(h.normal) if a)
            x[j] = (h.offset - sum(a * v for t, (a, v) in enumerate(zip(h.normal, x)) if t != j)) / h.normal[j]
            break
        s = F(rng.randint(1, 3))
        boxes.append(Polytope([tuple(x[t] + s * e[t] for t in range(3))
                               for e in [(a, b, c) for a in (-1, 1) for b in (-1, 1) for c in (-1, 1)]]))
    cert = pierces_verify([h1, h2], boxes)
    assert isinstance(cert, TransversalCertificate) and check_certificate(cert, boxes)


def test_check_certificate_rejects_tampering():
    polys = [seg(-1, 1), seg(0, 2)]
    cert = pierces_verify([X0], polys)
    w = cert.witnesses[0]
    bad = TransversalCertificate(cert.hyperplanes, (w._replace(point=(F(1, 2),)),) + cert.witnesses[1:])
    assert not check_certificate(bad, polys)
    assert not check_certificate(TransversalCertificate(cert.hyperplanes, cert.witnesses[:1]), polys)
    shifted = TransversalCertificate((AffineHyperplane([1], 1),), cert.witnesses)
    assert not check_certificate(shifted, polys)


def test_lift_is_involutive():
    rng = random.Random(0)
    for _ in range(50):
        h = AffineHyperplane([rng.randint(-5, 5) or 1 for _ in range(3)], rng.randint(-5, 5))
        assert AffineHyperplane.from_linear(h.to_linear()) == h
    with pytest.raises(ValueError):
        AffineHyperplane.from_linear(LinearHyperplane((0, 0, 1)))


def test_witness_set_for_overlapping_intervals():
    # vertices 1 and 2 already lie in both intervals, so no extra point is needed
    for r in (None, 2):
        ws = build_witness_set([[seg(0, 2), seg(1, 3)]], r)
        pts = ws.points.points
        assert set(pts) == {(0,), (2,), (1,), (3,)}
        a, b = (set(m) for m in ws.family.members)
        shared = a & b
        assert shared and all(1 <= pts[i][0] <= 2 for i in shared)


def test_witness_set_adds_the_crossing_point_of_diagonals():
    diag = [Polytope([(0, 0), (1, 1)]), Polytope([(1, 0), (0, 1)])]
    for r in (None, 2):
        ws = build_witness_set([diag], r)
        assert ws.points.n == 5 and ws.points.points[4] == (F(1, 2), F(1, 2))
        a, b = (set(m) for m in ws.family.members)
        assert a & b == {4}


def test_witness_set_without_intersections():
    ws = build_witness_set([[seg(0, 1), seg(2, 3)]])
    assert ws.points.n == 4 and len(ws.family) == 2
    with pytest.raises(HypothesisViolation):
        build_witness_set([[seg(0, 1), seg(2, 3)]], r=2)


def test_witness_set_single_polytope():
    ws = build_witness_set([[Polytope([(0, 0), (1, 0), (0, 1)])]])
    assert ws.points.n == 3 and ws.family.members == ((0, 1, 2),)


def test_witness_set_records_containment_of_other_vertices():
    ws = build_witness_set([[seg(0, 4)], [seg(1, 2)]])
    big = set(ws.family.members[ws.member_of[0]])
    assert big == {0, 1, 2, 3}
    assert ws.member_class == (0, 1)


def test_lazy_witnesses_skip_majority_families():
    pts = [(F(i), F(i * i)) for i in range(5)]
    polys = [Polytope([pts[i] for i in A]) for A in majority_family(5, 1).members]
    ws = build_witness_set([polys], r=2)
    assert ws.points.n == 5


def test_dolnikov_on_three_intervals():
    cert = dolnikov_hyperplane([[seg(0, 2), seg(1, 3), seg(F(3, 2), F(5, 2))]])
    (h,) = cert.hyperplanes
    x = h.offset / h.normal[0]
    assert F(3, 2) <= x <= 2
    assert cert.regime == "dolnikov" and not cert.empirical


def test_dolnikov_with_a_common_point():
    p = (F(1), F(1))
    fam = [Polytope([p, (F(3), F(0))]), Polytope([p, (F(-2), F(5))]), Polytope([(F(0), F(0)), (F(2), F(2))])]
    cert = dolnikov_hyperplane([fam, [Polytope([p])]])
    assert check_certificate(cert, fam + [Polytope([p])])


@given(st.integers(0, 10 ** 6))
def test_dolnikov_in_the_plane(seed):
    pf = dolnikov_instance(2, [3, 3], 6, random.Random(seed))
    cert = dolnikov_hyperplane(pf.classes())
    assert check_certificate(cert, list(pf.polytopes))


def test_dolnikov_rejects_bad_input():
    with pytest.raises(HypothesisViolation):
        dolnikov_hyperplane([[seg(0, 1), seg(2, 3)]])
    with pytest.raises(HypothesisViolation):
        dolnikov_hyperplane([[seg(0, 1)], [seg(0, 1)]])


def test_dolnikov_gives_a_ham_sandwich_cut():
    rng = random.Random(5)
    sets = [[(F(rng.randint(-9, 9)), F(rng.randint(-9, 9))) for _ in range(5)] for _ in range(2)]
    fams = [[Polytope([X[i] for i in A]) for A in majority_family(len(X), 1).members] for X in sets]
    (h,) = dolnikov_hyperplane(fams).hyperplanes
    for X, cells in zip(sets, sign_counts(sets, [h])):
        assert all(2 * c <= len(X) for c in cells.values())


def test_polytopes_intersect_and_pairwise_check():
    assert polytopes_intersect(seg(0, 2), seg(1, 3)) is not None
    assert polytopes_intersect(seg(0, 1), seg(1, 3)) == (1,)
    assert polytopes_intersect(seg(0, 1), seg(2, 3)) is None
    assert check_pairwise_intersecting([seg(0, 2), seg(1, 3), seg(5, 6)]) == (0, 2)
    fam = intersecting_family(2, 4, 5, random.Random(1))
    assert check_pairwise_intersecting(fam) is None


def test_k_one_matches_dolnikov():
    fam = [seg(0, 2), seg(1, 3), seg(F(3, 2), F(5, 2))]
    a = affine_k_transversal(fam, 1, 1, [0, 0, 0])
    b = dolnikov_hyperplane([fam])
    assert a.hyperplanes == b.hyperplanes and a.regime == "dolnikov"


def test_two_planes_for_a_two_colored_family():
    pf = colorable_family(3, 2, [5, 5], 10, 10, random.Random(4))
    cert = affine_k_transversal(list(pf.polytopes), 2, 2, pf.coloring)
    assert len(cert.hyperplanes) == 2 and cert.regime == "two-hyperplanes"
    assert check_certificate(cert, list(pf.polytopes))


def test_three_planes_for_one_class():
    pf = colorable_family(3, 3, [10], 10, 10, random.Random(2))
    cert = affine_k_transversal(list(pf.polytopes), 3, 1, pf.coloring)
    assert len(cert.hyperplanes) == 3 and cert.regime == "three-hyperplanes-m1"
    assert check_certificate(cert, list(pf.polytopes))


def test_regime_and_hypothesis_checks():
    pf = colorable_family(3, 2, [4, 4], 8, 10, random.Random(1))
    with pytest.raises(RegimeViolation):
        affine_k_transversal(list(pf.polytopes), 3, 2, pf.coloring)
    disjoint = [Polytope([(F(i), F(0), F(0))]) for i in range(4)]
    with pytest.raises(HypothesisViolation):
        affine_k_transversal(disjoint, 2, 1, [0] * 4)
    with pytest.raises(ValueError):
        affine_k_transversal(disjoint, 2, 1, [0, 0, 0])
    with pytest.raises(ValueError):
        affine_k_transversal(disjoint, 2, 1, [0, 0, 0, 1])


def test_empirical_mode_outside_the_regime():
    pf = colorable_family(3, 3, [4, 4], 8, 10, random.Random(1))
    cert = affine_k_transversal(list(pf.polytopes), 3, 2, pf.coloring, regime_check=False)
    assert cert.empirical and cert.regime == "empirical"
    assert check_certificate(cert, list(pf.polytopes))
