"""Equipartition dimension bounds and the table of proven transversal regimes.

``delta`` below is the least dimension in which any ``m`` finite point sets
admit an equipartition by ``k`` hyperplanes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple


def binary_split(m: int) -> tuple[int, int]:
    """``m = 2^p + q`` with ``0 <= q < 2^p``."""
    if m < 1:
        raise ValueError("m must be positive")
    p = m.bit_length() - 1
    return p, m - (1 << p)


def lower_bound(m: int, k: int) -> int:
    """Moment-curve lower bound ``ceil((2^k - 1) m / k)``."""
    return -(-((2 ** k - 1) * m) // k)


def upper_bound(m: int, k: int) -> int:
    """General upper bound ``2^(k+p-1) + q``."""
    p, q = binary_split(m)
    return 2 ** (k + p - 1) + q


def _power_of_two_exponent(x: int) -> int | None:
    if x >= 1 and x & (x - 1) == 0:
        return x.bit_length() - 1
    return None


def known_exact(m: int, k: int) -> int | None:
    """Exact values established in the literature for k = 2, 3."""
    if k == 2:
        s = _power_of_two_exponent(m + 1)
        if s is not None and s >= 1:
            return 3 * 2 ** (s - 1) - 1
        s = _power_of_two_exponent(m - 1)
        if s is not None and s >= 2:
            return 3 * 2 ** (s - 1) + 2
        s = _power_of_two_exponent(m)
        if s is not None and s >= 1:
            return 3 * 2 ** (s - 1)
    if k == 3:
        return {1: 3, 2: 5, 4: 10}.get(m)
    return None


class DeltaBounds(NamedTuple):
    lower: int
    upper: int
    exact: int | None


def delta_bounds(m: int, k: int) -> DeltaBounds:
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    lo, up = lower_bound(m, k), upper_bound(m, k)
    exact = known_exact(m, k)
    if exact is None and lo == up:
        exact = lo
    if not lo <= up:  # pragma: no cover
        raise ArithmeticError(f"lower bound {lo} exceeds upper bound {up}")
    return DeltaBounds(lo, up, exact)


def bounds_markdown(max_m: int, max_k: int) -> str:
    lines = ["| m | k | lower | upper | exact |", "|---|---|---|---|---|"]
    for k in range(1, max_k + 1):
        for m in range(1, max_m + 1):
            b = delta_bounds(m, k)
            exact = "?" if b.exact is None else str(b.exact)
            lines.append(f"| {m} | {k} | {b.lower} | {b.upper} | {exact} |")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Regime:
    """A proven (m, k) -> c transversal statement.

    ``applies(m, k)`` selects the instances it covers and ``dimension(m, k)``
    is the ambient dimension from which k hyperplanes are guaranteed to
    pierce any family whose KG^(2^k) is m-colorable.
    """

    tag: str
    applies: Callable[[int, int], bool]
    dimension: Callable[[int, int], int]


def _two_hyperplane_case(m: int, k: int) -> bool:
    if k != 2:
        return False
    return any(_power_of_two_exponent(m - t) not in (None, 0) for t in (-1, 0, 1))


REGIMES: list[Regime] = [
    Regime("dolnikov", lambda m, k: k == 1, lambda m, k: m),
    Regime("general-upper", lambda m, k: True, upper_bound),
    Regime("two-hyperplanes", _two_hyperplane_case, lambda m, k: -(-3 * m // 2)),
    Regime("three-hyperplanes-m1", lambda m, k: k == 3 and m == 1, lambda m, k: 3),
]


def register_regime(regime: Regime) -> None:
    REGIMES.append(regime)


def required_dimension(m: int, k: int) -> tuple[int, str]:
    """Smallest guaranteed ambient dimension over applicable regimes, with its tag."""
    best = None
    for reg in REGIMES:
        if reg.applies(m, k):
            c = reg.dimension(m, k)
            if best is None or c < best[0]:
                best = (c, reg.tag)
    assert best is not None
    return best


def regime_table(max_m: int, max_k: int) -> list[tuple[int, int, int, str]]:
    return [(m, k, *required_dimension(m, k)) for k in range(1, max_k + 1) for m in range(1, max_m + 1)]
