import pytest

from hyperpierce.bounds import (REGIMES, Regime, binary_split, bounds_markdown, delta_bounds, lower_bound,
                                regime_table, register_regime, required_dimension, upper_bound)


def test_binary_split():
    assert binary_split(1) == (0, 0)
    assert binary_split(5) == (2, 1)
    assert binary_split(8) == (3, 0)
    with pytest.raises(ValueError):
        binary_split(0)


@pytest.mark.parametrize("m,k,expect", [
    ((2), 2, (3, 4, 3)),
    (4, 3, (10, 16, 10)),
    (5, 2, (8, 9, 8)),
    (1, 1, (1, 1, 1)),
    (1, 3, (3, 4, 3)),
    (2, 3, (5, 8, 5)),
    (3, 2, (5, 5, 5)),
    (7, 2, (11, 11, 11)),
    (9, 2, (14, 17, 14)),
    (6, 2, (9, 10, None)),
])
def test_delta_bounds_table(m, k, expect):
    assert tuple(delta_bounds(m, k)) == expect


def test_bounds_are_ordered():
    for m in range(1, 20):
        for k in range(1, 5):
            b = delta_bounds(m, k)
            assert b.lower <= b.upper
            if b.exact is not None:
                assert b.lower <= b.exact <= b.upper


def test_single_hyperplane_is_ham_sandwich():
    for m in range(1, 10):
        assert delta_bounds(m, 1) == (m, m, m)


def test_bounds_reject_nonpositive():
    with pytest.raises(ValueError):
        delta_bounds(0, 1)


def test_required_dimension():
    assert required_dimension(3, 1) == (3, "dolnikov")
    assert required_dimension(2, 2) == (3, "two-hyperplanes")
    assert required_dimension(1, 3) == (3, "three-hyperplanes-m1")
    assert required_dimension(6, 2) == (10, "general-upper")
    assert required_dimension(3, 3) == (upper_bound(3, 3), "general-upper")


def test_regime_dimension_never_beats_the_lower_bound():
    for m, k, c, _ in regime_table(12, 4):
        assert c >= lower_bound(m, k)


def test_register_regime_extends_the_table():
    before = list(REGIMES)
    try:
        register_regime(Regime("test-only", lambda m, k: (m, k) == (6, 2), lambda m, k: 9))
        assert required_dimension(6, 2) == (9, "test-only")
    finally:
        REGIMES[:] = before
    assert required_dimension(6, 2)[1] == "general-upper"


def test_markdown_table():
    text = bounds_markdown(2, 2)
    assert text.splitlines()[0] == "| m | k | lower | upper | exact |"
    assert "| 2 | 2 | 3 | 4 | 3 |" in text
    assert len(text.splitlines()) == 6
