"""Radon pairs: exact convex-hull intersection, search, minimality, enumeration.

Indices are 0-based throughout the Python API; JSON uses 1-based indices.

Minimal Radon pairs of a configuration are in bijection (up to swapping
the sides) with the circuits of its lifted vector matroid, i.e. with the
cocircuits of the Gale dual.  :func:`enumerate_minimal_radon_pairs` uses
that: every linear hyperplane spanned by dual points gives one pair, whose
coefficients are read off ``t_j = <b_j, alpha>``.  The exhaustive
disjoint-subset scan with one LP per candidate is kept as ``method="scan"``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import NamedTuple, Sequence

from . import kernels
from .exact import ZERO, Vector, combination, rref_nullspace
from .gale import DegenerateConfiguration, PointConfig, gale_matrix
from .bounds import required_dimension
from .kneser import MAX_CHROMATIC_MEMBERS, SetFamily, least_coloring, r_pairwise_disjoint_witness
from .lp import LPProblem, lp_feasible

MAX_SCAN_POINTS = 16
MAX_CIRCUIT_SUBSETS = 2_000_000


class GuardExceeded(ValueError):
    """Instance is larger than the exhaustive routines accept."""


class NoAffineDependence(ValueError):
    """The configuration is affinely independent, so it has no Radon pair."""


class InvalidRadonPair(ValueError):
    pass


class SearchExhausted(RuntimeError):
    """Every candidate was scanned without a hit.

    On instances that satisfy the hypotheses of a proven regime this is a
    falsification event, not an expected outcome; callers surface it.
    """

    def __init__(self, message: str, candidates: int = 0):
        super().__init__(message)
        self.candidates = candidates


@dataclass(frozen=True)
class RadonPair:
    """Two disjoint index sets with positive convex weights whose combinations agree."""

    plus: tuple
    minus: tuple
    lambda_plus: tuple
    lambda_minus: tuple

    def __init__(self, plus, minus, lambda_plus, lambda_minus):
        plus = tuple(int(i) for i in plus)
        minus = tuple(int(i) for i in minus)
        if not plus or not minus:
            raise InvalidRadonPair("both sides must be nonempty")
        if set(plus) & set(minus):
            raise InvalidRadonPair("sides must be disjoint")
        if len(set(plus)) != len(plus) or len(set(minus)) != len(minus):
            raise InvalidRadonPair("repeated index")
        lp = tuple(Fraction(x) for x in lambda_plus)
        lm = tuple(Fraction(x) for x in lambda_minus)
        if len(lp) != len(plus) or len(lm) != len(minus):
            raise InvalidRadonPair("one coefficient per index is required")
        order_p = sorted(range(len(plus)), key=plus.__getitem__)
        order_m = sorted(range(len(minus)), key=minus.__getitem__)
        object.__setattr__(self, "plus", tuple(plus[i] for i in order_p))
        object.__setattr__(self, "minus", tuple(minus[i] for i in order_m))
        object.__setattr__(self, "lambda_plus", tuple(lp[i] for i in order_p))
        object.__setattr__(self, "lambda_minus", tuple(lm[i] for i in order_m))

    @property
    def support(self) -> frozenset:
        return frozenset(self.plus) | frozenset(self.minus)

    @property
    def sides(self) -> tuple[frozenset, frozenset]:
        return frozenset(self.plus), frozenset(self.minus)

    def same_supports(self, other: "RadonPair") -> bool:
        """Equal as an unordered pair of index sets."""
        return {self.sides[0], self.sides[1]} == {other.sides[0], other.sides[1]}

    def swapped(self) -> "RadonPair":
        return RadonPair(self.minus, self.plus, self.lambda_minus, self.lambda_plus)

    def canonical(self) -> "RadonPair":
        """Orientation with the smallest index on the plus side."""
        return self if min(self.plus) < min(self.minus) else self.swapped()

    def common_point(self, cfg: PointConfig) -> Vector:
        return combination(self.lambda_plus, [cfg.points[i] for i in self.plus], cfg.dim)

    def signed_coefficients(self, n: int) -> Vector:
        """The dependence ``t``: +lambda on plus, -lambda on minus, 0 elsewhere."""
        t = [ZERO] * n
        for i, lam in zip(self.plus, self.lambda_plus):
            t[i] = lam
        for i, lam in zip(self.minus, self.lambda_minus):
            t[i] = -lam
        return tuple(t)

    def verify(self, cfg: PointConfig) -> bool:
        """Exact check: indices in range, weights positive and summing to 1, points agree."""
        if any(not 0 <= i < cfg.n for i in self.plus + self.minus):
            return False
        if any(x <= 0 for x in self.lambda_plus + self.lambda_minus):
            return False
        if sum(self.lambda_plus) != 1 or sum(self.lambda_minus) != 1:
            return False
        q = combination(self.lambda_minus, [cfg.points[i] for i in self.minus], cfg.dim)
        return self.common_point(cfg) == q


class RadonTuple(NamedTuple):
    pairs: tuple

    def intersections(self) -> dict:
        """Map each sign vector in {+1,-1}^k to the intersection of the chosen sides."""
        out = {}
        k = len(self.pairs)
        for mask in range(2 ** k):
            signs = tuple(-1 if (mask >> (k - 1 - j)) & 1 else 1 for j in range(k))
            acc = None
            for s, p in zip(signs, self.pairs):
                side = frozenset(p.plus if s > 0 else p.minus)
                acc = side if acc is None else acc & side
            out[signs] = acc
        return out


class HullWitness(NamedTuple):
    point: Vector
    lam: Vector
    mu: Vector


def _check_indices(cfg: PointConfig, idx: Sequence[int]) -> tuple:
    idx = tuple(int(i) for i in idx)
    if not idx:
        raise ValueError("index set must be nonempty")
    for i in idx:
        if not 0 <= i < cfg.n:
            raise IndexError(f"index {i} out of range for {cfg.n} points")
    return idx


def hulls_intersect(cfg: PointConfig, A: Sequence[int], B: Sequence[int],
                    strict: bool = False) -> HullWitness | None:
    """Common point of ``conv(A)`` and ``conv(B)`` with both weight vectors, or None.

    With ``strict=True`` every weight must be positive.
    """
    A = _check_indices(cfg, A)
    B = _check_indices(cfg, B)
    na, nb = len(A), len(B)
    rows = []
    for k in range(cfg.dim):
        coeffs = [cfg.points[i][k] for i in A] + [-cfg.points[j][k] for j in B]
        rows.append((coeffs, 0))
    rows.append(([1] * na + [0] * nb, 1))
    rows.append(([0] * na + [1] * nb, 1))
    sol = lp_feasible(LPProblem(na + nb, rows, [True] * (na + nb), [strict] * (na + nb)))
    if sol is None:
        return None
    lam, mu = sol[:na], sol[na:]
    return HullWitness(combination(lam, [cfg.points[i] for i in A], cfg.dim), lam, mu)


def _pair_from_dependence(t: Sequence[Fraction]) -> RadonPair:
    plus = [i for i, x in enumerate(t) if x > 0]
    minus = [i for i, x in enumerate(t) if x < 0]
    sp = sum(t[i] for i in plus)
    sm = -sum(t[i] for i in minus)
    return RadonPair(plus, minus, [t[i] / sp for i in plus], [-t[i] / sm for i in minus])


def _interleaved(plus: list[int], minus: list[int]) -> list[tuple[int, int]]:
    out = []
    for j in range(max(len(plus), len(minus))):
        if j < len(plus):
            out.append((0, plus[j]))
        if j < len(minus):
            out.append((1, minus[j]))
    return out


def minimalize(cfg: PointConfig, pair: RadonPair) -> RadonPair:
    """Shrink a Radon pair until every single-index drop separates the hulls.

    Candidates are tried by ascending index, alternating sides and starting
    with the plus side; after each successful removal the scan restarts.
    The final weights come from a strictly positive LP solution.
    """
    if not pair.verify(cfg):
        raise InvalidRadonPair("pair does not verify on this configuration")
    sides = [list(pair.plus), list(pair.minus)]
    changed = True
    while changed:
        changed = False
        for s, idx in _interleaved(sides[0], sides[1]):
            if len(sides[s]) == 1:
                continue
            trial = [list(sides[0]), list(sides[1])]
            trial[s].remove(idx)
            if hulls_intersect(cfg, trial[0], trial[1]) is not None:
                sides = trial
                changed = True
                break
    witness = hulls_intersect(cfg, sides[0], sides[1], strict=True)
    if witness is None:  # pragma: no cover - a verified minimal pair has positive weights
        raise ArithmeticError("minimal pair without a strictly positive witness")
    return RadonPair(sides[0], sides[1], witness.lam, witness.mu)


def is_minimal(cfg: PointConfig, pair: RadonPair) -> bool:
    """LP certificate of minimality: every single-index drop gives disjoint hulls."""
    if not pair.verify(cfg):
        return False
    plus, minus = list(pair.plus), list(pair.minus)
    for s, idx in _interleaved(plus, minus):
        side = plus if s == 0 else minus
        if len(side) == 1:
            continue
        rest = [i for i in side if i != idx]
        args = (rest, minus) if s == 0 else (plus, rest)
        if hulls_intersect(cfg, *args) is not None:
            return False
    return True


def _require_dependence(cfg: PointConfig) -> None:
    if not cfg.affinely_spans:
        raise DegenerateConfiguration(
            f"points span an affine subspace of dimension {cfg.affine_rank} < {cfg.dim}")
    if cfg.n <= cfg.dim + 1:
        raise NoAffineDependence(f"{cfg.n} affinely spanning points in R^{cfg.dim}: no affine dependence")


def find_minimal_radon_pair(cfg: PointConfig) -> RadonPair:
    """First canonical affine dependence, split by sign, then minimalized."""
    _require_dependence(cfg)
    t = rref_nullspace(cfg.lifted_matrix())[0]
    return minimalize(cfg, _pair_from_dependence(t))


def _bareiss_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if n else 1


def _cofactor_normal(vs: list[tuple[int, ...]], r: int) -> list[int]:
    """Generalized cross product of r-1 vectors in Z^r; zero exactly when they are dependent."""
    return [(-1) ** i * _bareiss_det([[v[c] for c in range(r) if c != i] for v in vs]) for i in range(r)]


def _circuit_pairs(cfg: PointConfig) -> list[RadonPair]:
    rows = gale_matrix(cfg)
    r = len(rows)
    if r == 0:
        return []
    # one common positive scale keeps every sign and every normalized weight
    scale = lcm(*(x.denominator for row in rows for x in row))
    dual = [tuple(int(row[j] * scale) for row in rows) for j in range(cfg.n)]
    count = comb(cfg.n, r - 1)
    if count > MAX_CIRCUIT_SUBSETS:
        raise GuardExceeded(f"{count} spanning subsets exceed the limit {MAX_CIRCUIT_SUBSETS}")
    seen: dict[tuple, tuple] = {}
    for subset in combinations(range(cfg.n), r - 1):
        normal = _cofactor_normal([dual[j] for j in subset], r)
        if not any(normal):
            continue
        t = [sum(a * b for a, b in zip(dual[j], normal)) for j in range(cfg.n)]
        plus = tuple(j for j, x in enumerate(t) if x > 0)
        minus = tuple(j for j, x in enumerate(t) if x < 0)
        if minus[0] < plus[0]:
            plus, minus, t = minus, plus, [-x for x in t]
        seen.setdefault((plus, minus), t)
    out = []
    for (plus, minus), t in seen.items():
        sp = sum(t[i] for i in plus)
        out.append(RadonPair(plus, minus, [Fraction(t[i], sp) for i in plus], [Fraction(-t[i], sp) for i in minus]))
    return out


def _scan_pairs(cfg: PointConfig, max_support: int) -> list[RadonPair]:
    if cfg.n > MAX_SCAN_POINTS:
        raise GuardExceeded(f"exhaustive scan accepts at most {MAX_SCAN_POINTS} points, got {cfg.n}")
    found = []
    n = cfg.n
    # assign each index to plus (1), minus (2) or neither (0); smallest used index goes plus
    for code in range(3 ** n):
        plus, minus = [], []
        c = code
        for i in range(n):
            c, digit = divmod(c, 3)
            if digit == 1:
                plus.append(i)
            elif digit == 2:
                minus.append(i)
        if not plus or not minus or min(plus) > min(minus):
            continue
        if len(plus) + len(minus) > max_support:
            continue
        w = hulls_intersect(cfg, plus, minus, strict=True)
        if w is None:
            continue
        pair = RadonPair(plus, minus, w.lam, w.mu)
        if is_minimal(cfg, pair):
            found.append(pair)
    return found


def _order_key(pair: RadonPair):
    return (pair.plus, pair.minus)


def enumerate_minimal_radon_pairs(cfg: PointConfig, max_support: int | None = None,
                                  method: str = "circuits") -> list[RadonPair]:
    """All minimal Radon pairs with total support at most ``max_support``.

    Pairs are oriented with their smallest index on the plus side and sorted
    by ``(plus, minus)``.
    """
    if max_support is None:
        max_support = cfg.n
    if not cfg.affinely_spans:
        raise DegenerateConfiguration(
            f"points span an affine subspace of dimension {cfg.affine_rank} < {cfg.dim}")
    if method == "circuits":
        pairs = [p for p in _circuit_pairs(cfg) if len(p.support) <= max_support]
    elif method == "scan":
        pairs = _scan_pairs(cfg, max_support)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    return sorted(pairs, key=_order_key)


def _member_masks(family: SetFamily, n: int) -> list[int]:
    if family.n != n:
        raise ValueError(f"family ground set has {family.n} elements, configuration has {n} points")
    return [sum(1 << i for i in m) for m in family.members]


def containment_masks(pairs: Sequence[RadonPair], member_masks: Sequence[int]) -> list[tuple[int, int]]:
    """For each pair, bitsets over members contained in its plus / minus side."""
    out = []
    for p in pairs:
        sides = []
        for side in (p.plus, p.minus):
            s = sum(1 << i for i in side)
            bits = 0
            for j, m in enumerate(member_masks):
                if m & ~s == 0:
                    bits |= 1 << j
            sides.append(bits)
        out.append((sides[0], sides[1]))
    return out


def tuple_avoids(rt: RadonTuple, family: SetFamily) -> bool:
    """Direct check: no orthant intersection contains a member of the family."""
    for inter in rt.intersections().values():
        for m in family.members:
            if set(m) <= inter:
                return False
    return True


def tuple_guaranteed(cfg: PointConfig, family: SetFamily, k: int) -> bool:
    """Does a proven regime promise an avoiding k-tuple for this instance?

    The Gale dual side has dimension ``c = n - d - 2``; a tuple is promised
    when KG^(2^k)(family) has an m-coloring with ``required_dimension(m, k) <= c``.
    Returns False when the chromatic number is too costly to decide.
    """
    c = cfg.n - cfg.dim - 2
    r = 2 ** k
    if r_pairwise_disjoint_witness(family, r) is None:
        return required_dimension(1, k)[0] <= c
    m = 0
    while required_dimension(m + 1, k)[0] <= c:
        m += 1
    if m < 2 or len(family.members) > MAX_CHROMATIC_MEMBERS:
        return False
    return least_coloring(family, r, m) is not None


def find_constrained_radon_tuple(cfg: PointConfig, family: SetFamily, k: int,
                                 max_support: int | None = None,
                                 pairs: Sequence[RadonPair] | None = None) -> RadonTuple:
    """Lexicographically first k-tuple of minimal Radon pairs avoiding ``family``.

    Tuples are scanned as nondecreasing index sequences into the enumerated
    pair list (a pair may be repeated).  A tuple qualifies when none of the
    ``2^k`` intersections of chosen sides contains a member of ``family``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_dependence(cfg)
    if pairs is None:
        pairs = enumerate_minimal_radon_pairs(cfg, max_support)
    if not pairs:
        raise SearchExhausted("configuration has no minimal Radon pair within the support cap", 0)
    masks = containment_masks(pairs, _member_masks(family, cfg.n))
    hit = kernels.first_valid_tuple(masks, k, len(family.members))
    if hit is None:
        exc = SearchExhausted(
            f"no {k}-tuple among {len(pairs)} minimal Radon pairs avoids the family", len(pairs))
        exc.anomaly = max_support is None and tuple_guaranteed(cfg, family, k)
        raise exc
    rt = RadonTuple(tuple(pairs[i] for i in hit))
    if not all(p.verify(cfg) for p in rt.pairs) or not tuple_avoids(rt, family):
        raise ArithmeticError("kernel returned a tuple that fails direct verification")
    return rt
