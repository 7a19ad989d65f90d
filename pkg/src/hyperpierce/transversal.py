"""Hyperplane transversals of polytope families through Gale duality.

Pipeline for k hyperplanes in R^c:

1. collect all vertices plus one intersection point for every pair of
   same-class polytopes that meet without sharing a vertex; each polytope
   becomes the index set of collected points it contains;
2. lift the points to height 1 in R^(c+1), pad and close to zero sum;
3. take the inverse Gale transform and search k minimal Radon pairs such
   that no intersection of chosen sides contains a polytope's index set;
4. turn each pair into a linear hyperplane of R^(c+1) and cut it with the
   height-1 copy of R^c.

Every answer is re-verified by :func:`pierces_verify` before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple, Sequence

from .bounds import required_dimension
from .duality import hyperplane_from_radon
from .exact import ONE, Vector, combination, dot, primitive_integer_vector, vec
from .gale import LinearHyperplane, PointConfig, center_and_lift, inverse_gale
from .kneser import SetFamily, verify_coloring
from .lp import LPProblem, lp_feasible
from .radon import SearchExhausted, find_constrained_radon_tuple, hulls_intersect


class HypothesisViolation(ValueError):
    """Input does not satisfy the combinatorial hypothesis of the solver."""


class RegimeViolation(ValueError):
    """(c, m, k) lies outside every proven regime."""


class VerificationFailure(RuntimeError):
    """A solver produced an answer that failed independent verification."""


@dataclass(frozen=True)
class Polytope:
    """Convex hull of finitely many rational points."""

    vertices: tuple

    def __init__(self, vertices: Sequence[Sequence]):
        vs = tuple(vec(v) for v in vertices)
        if not vs:
            raise ValueError("a polytope needs at least one vertex")
        if any(len(v) != len(vs[0]) for v in vs):
            raise ValueError("vertices must share a dimension")
        object.__setattr__(self, "vertices", vs)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def lifted(self) -> "Polytope":
        return Polytope([v + (ONE,) for v in self.vertices])


@dataclass(frozen=True)
class AffineHyperplane:
    """``{x : <normal, x> = offset}``, scaled to coprime integers, first normal entry positive."""

    normal: tuple
    offset: object

    def __init__(self, normal: Sequence, offset):
        normal = vec(normal)
        if not any(normal):
            raise ValueError("affine hyperplane needs a nonzero normal")
        canon = primitive_integer_vector(normal + vec([offset]))
        object.__setattr__(self, "normal", canon[:-1])
        object.__setattr__(self, "offset", canon[-1])

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x: Sequence) -> object:
        return dot(self.normal, x) - self.offset

    def side(self, x: Sequence) -> int:
        v = self.value(x)
        return (v > 0) - (v < 0)

    def to_linear(self) -> LinearHyperplane:
        """The linear hyperplane of R^(d+1) meeting height 1 in this hyperplane."""
        return LinearHyperplane(self.normal + (-self.offset,))

    @classmethod
    def from_linear(cls, H: LinearHyperplane) -> "AffineHyperplane":
        a, last = H.normal[:-1], H.normal[-1]
        if not any(a):
            raise ValueError("linear hyperplane is parallel to the height-1 slice")
        return cls(a, -last)


class PiercingWitness(NamedTuple):
    polytope: int
    hyperplane: int
    point: Vector
    coefficients: Vector


@dataclass(frozen=True)
class TransversalCertificate:
    hyperplanes: tuple
    witnesses: tuple
    regime: str = ""
    empirical: bool = False
    radon_pairs: tuple = field(default=())


class Missed(NamedTuple):
    """Index of a polytope that no hyperplane meets."""

    polytope: int


def _hp_value_offset(h) -> tuple[Vector, object]:
    if isinstance(h, AffineHyperplane):
        return h.normal, h.offset
    if isinstance(h, LinearHyperplane):
        return h.normal, 0
    raise TypeError(f"not a hyperplane: {h!r}")


def meet_point(h, P: Polytope) -> PiercingWitness | None:
    """Point of ``P`` on ``h`` with its convex weights, by LP, or None."""
    a, b = _hp_value_offset(h)
    if len(a) != P.dim:
        raise ValueError(f"hyperplane in R^{len(a)} vs polytope in R^{P.dim}")
    nv = len(P.vertices)
    rows = [([dot(a, v) for v in P.vertices], b), ([1] * nv, 1)]
    sol = lp_feasible(LPProblem(nv, rows, [True] * nv))
    if sol is None:
        return None
    return PiercingWitness(-1, -1, combination(sol, P.vertices, P.dim), sol)


def pierces_verify(hps: Sequence, polytopes: Sequence[Polytope]):
    """Certificate that the union of ``hps`` meets every polytope, or :class:`Missed`."""
    if not hps:
        raise ValueError("need at least one hyperplane")
    dims = {_hp_value_offset(h)[0].__len__() for h in hps} | {P.dim for P in polytopes}
    if len(dims) > 1:
        raise ValueError(f"dimension mismatch: {sorted(dims)}")
    witnesses = []
    for i, P in enumerate(polytopes):
        for j, h in enumerate(hps):
            w = meet_point(h, P)
            if w is not None:
                witnesses.append(w._replace(polytope=i, hyperplane=j))
                break
        else:
            return Missed(i)
    return TransversalCertificate(tuple(hps), tuple(witnesses))


def check_certificate(cert: TransversalCertificate, polytopes: Sequence[Polytope]) -> bool:
    """Independent exact re-check of every stored witness (no LP)."""
    covered = set()
    for w in cert.witnesses:
        if not 0 <= w.polytope < len(polytopes) or not 0 <= w.hyperplane < len(cert.hyperplanes):
            return False
        P = polytopes[w.polytope]
        lam = w.coefficients
        if len(lam) != len(P.vertices) or any(x < 0 for x in lam) or sum(lam) != 1:
            return False
        if combination(lam, P.vertices, P.dim) != tuple(w.point):
            return False
        a, b = _hp_value_offset(cert.hyperplanes[w.hyperplane])
        if dot(a, w.point) != b:
            return False
        covered.add(w.polytope)
    return covered == set(range(len(polytopes)))


class WitnessSet(NamedTuple):
    """Collected points, the induced index family, and bookkeeping.

    ``member_of[i]`` is the family member for flattened polytope ``i``;
    ``member_class[j]`` the class (input family) of member ``j``.
    """

    points: PointConfig
    family: SetFamily
    member_of: tuple
    member_class: tuple
    polytopes: tuple


def _contains(P: Polytope, y: Vector) -> bool:
    nv = len(P.vertices)
    rows = [([v[k] for v in P.vertices], y[k]) for k in range(P.dim)]
    rows.append(([1] * nv, 1))
    return lp_feasible(LPProblem(nv, rows, [True] * nv)) is not None


def polytopes_intersect(P: Polytope, Q: Polytope) -> Vector | None:
    """A common point (the LP kernel's deterministic one), or None."""
    shared = set(P.vertices) & set(Q.vertices)
    if shared:
        return min(shared)
    cfg = PointConfig(P.dim, P.vertices + Q.vertices)
    w = hulls_intersect(cfg, range(len(P.vertices)), range(len(P.vertices), cfg.n))
    return None if w is None else w.point


def build_witness_set(families: Sequence[Sequence[Polytope]], r: int | None = None) -> WitnessSet:
    """Points and index family whose Kneser hypergraphs match the polytopes'.

    With ``r=None`` every intersecting same-family pair whose vertex sets are
    disjoint gets one LP witness point.  With ``r`` given, witnesses are
    added lazily: only while some family still holds ``r`` members with
    pairwise disjoint index sets, and then only for one intersecting pair
    among them.  If such a hyperedge contains no intersecting pair the
    polytopes themselves violate the hypothesis and
    :class:`HypothesisViolation` is raised.  Each new point is added to
    every polytope containing it.
    """
    flat: list[Polytope] = []
    cls: list[int] = []
    for f, fam in enumerate(families):
        if not fam:
            raise ValueError("each family must be nonempty")
        for P in fam:
            flat.append(P)
            cls.append(f)
    dims = {P.dim for P in flat}
    if len(dims) != 1:
        raise ValueError(f"polytopes of mixed dimensions {sorted(dims)}")
    dim = dims.pop()

    index: dict[Vector, int] = {}
    points: list[Vector] = []
    inside: list[set[int]] = []

    def add(p: Vector) -> int:
        if p in index:
            return index[p]
        y = index[p] = len(points)
        points.append(p)
        for i, P in enumerate(flat):
            if _contains(P, p):
                inside[i].add(y)
        return y

    for P in flat:
        s = set()
        for v in P.vertices:
            if v not in index:
                index[v] = len(points)
                points.append(v)
            s.add(index[v])
        inside.append(s)
    for i, P in enumerate(flat):
        for y, p in enumerate(points):
            if y not in inside[i] and _contains(P, p):
                inside[i].add(y)

    if r is None:
        for i, j in combinations(range(len(flat)), 2):
            if cls[i] != cls[j] or inside[i] & inside[j]:
                continue
            w = polytopes_intersect(flat[i], flat[j])
            if w is not None:
                add(w)
    else:
        while True:
            fam = SetFamily.deduplicated(len(points), inside)
            keys = [tuple(sorted(s)) for s in inside]
            first = {}
            for i, key in enumerate(keys):
                first.setdefault(key, i)
            reps = [first[key] for key in fam.members]
            bad = verify_coloring(fam, [cls[i] for i in reps], r)
            if bad is None:
                break
            hyperedge = [reps[j] for j in bad]
            for i, j in combinations(hyperedge, 2):
                w = polytopes_intersect(flat[i], flat[j])
                if w is not None:
                    add(w)
                    break
            else:
                raise HypothesisViolation(
                    f"class {cls[hyperedge[0]]} has {r} pairwise disjoint polytopes {tuple(hyperedge)}")

    members: list[tuple] = []
    pos: dict[tuple, int] = {}
    member_of = []
    member_class = []
    for i, s in enumerate(inside):
        key = tuple(sorted(s))
        if key not in pos:
            pos[key] = len(members)
            members.append(key)
            member_class.append(cls[i])
        member_of.append(pos[key])
    fam = SetFamily(len(points), members)
    return WitnessSet(PointConfig(dim, points), fam, tuple(member_of), tuple(member_class), tuple(flat))


def _pipeline(ws: WitnessSet, k: int, max_support: int | None):
    balanced = center_and_lift(ws.points)
    Y2 = balanced.config
    X = inverse_gale(Y2)
    fam = SetFamily(Y2.n, ws.family.members)
    rt = find_constrained_radon_tuple(X, fam, k, max_support=max_support)
    hyperplanes = []
    for pair in rt.pairs:
        H, _ = hyperplane_from_radon(Y2, pair, X)
        hyperplanes.append(AffineHyperplane.from_linear(H))
    return hyperplanes, rt.pairs


def _solve(ws: WitnessSet, polytopes: Sequence[Polytope], k: int, regime: str, empirical: bool,
           max_support: int | None) -> TransversalCertificate:
    try:
        hyperplanes, pairs = _pipeline(ws, k, max_support)
    except SearchExhausted as exc:
        exc.anomaly = not empirical
        raise
    cert = pierces_verify(hyperplanes, polytopes)
    if isinstance(cert, Missed):
        raise VerificationFailure(f"computed hyperplanes miss polytope {cert.polytope}")
    return TransversalCertificate(cert.hyperplanes, cert.witnesses, regime, empirical, tuple(pairs))


def check_pairwise_intersecting(family: Sequence[Polytope]) -> tuple[int, int] | None:
    """First disjoint pair of positions, or None."""
    for i, j in combinations(range(len(family)), 2):
        if polytopes_intersect(family[i], family[j]) is None:
            return (i, j)
    return None


def dolnikov_hyperplane(families: Sequence[Sequence[Polytope]],
                        max_support: int | None = None) -> TransversalCertificate:
    """One affine hyperplane meeting every polytope of d intersecting families in R^d."""
    if not families:
        raise ValueError("need at least one family")
    d = families[0][0].dim
    if len(families) > d:
        raise HypothesisViolation(f"{len(families)} families in R^{d}; at most {d} are covered")
    for f, fam in enumerate(families):
        bad = check_pairwise_intersecting(fam)
        if bad is not None:
            raise HypothesisViolation(f"family {f} is not intersecting: polytopes {bad} are disjoint")
    ws = build_witness_set(families, r=2)
    flat = [P for fam in families for P in fam]
    return _solve(ws, flat, 1, "dolnikov", False, max_support)


def affine_k_transversal(polytopes: Sequence[Polytope], k: int, m: int, coloring: Sequence[int],
                         regime_check: bool = True,
                         max_support: int | None = None) -> TransversalCertificate:
    """k affine hyperplanes piercing a family whose KG^(2^k) is m-colored by ``coloring``."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    if len(coloring) != len(polytopes):
        raise ValueError("coloring must assign a class to every polytope")
    if any(not 0 <= c < m for c in coloring):
        raise ValueError(f"colors must lie in range({m})")
    c_dim = polytopes[0].dim
    need, tag = required_dimension(m, k)
    empirical = c_dim < need
    if empirical and regime_check:
        raise RegimeViolation(f"k={k}, m={m} is guaranteed only from dimension {need} ({tag}); got {c_dim}")

    classes: list[list[int]] = [[] for _ in range(m)]
    for i, col in enumerate(coloring):
        classes[col].append(i)
    order = [i for cl in classes for i in cl]
    families = [[polytopes[i] for i in cl] for cl in classes if cl]
    # raises HypothesisViolation when a class holds 2^k pairwise disjoint polytopes
    ws = build_witness_set(families, r=2 ** k)
    ordered = [polytopes[i] for i in order]
    cert = _solve(ws, ordered, k, "empirical" if empirical else tag, empirical, max_support)
    # reindex witnesses to the caller's polytope order
    witnesses = tuple(w._replace(polytope=order[w.polytope]) for w in cert.witnesses)
    witnesses = tuple(sorted(witnesses, key=lambda w: w.polytope))
    return TransversalCertificate(cert.hyperplanes, witnesses, cert.regime, cert.empirical, cert.radon_pairs)
