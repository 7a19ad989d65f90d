from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


@st.composite
def rational_matrices(draw, max_rows=8, max_cols=8):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    # mix in zero entries so low-rank matrices show up
    entry = st.one_of(st.just(Fraction(0)), small_rationals)
    return [[draw(entry) for _ in range(c)] for _ in range(r)]
