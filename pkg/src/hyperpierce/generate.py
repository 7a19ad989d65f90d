"""Seeded random instances.

Every generator is a deterministic function of its parameters and seed
(``random.Random(seed)`` is the only randomness).  Families that are
supposed to satisfy a hypothesis are validated before they are returned.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .equipartition import MassInstance, moment_curve_instance
from .gale import PointConfig
from .io import InstanceFile, PolytopeFamily
from .kneser import SetFamily, r_pairwise_disjoint_witness
from .transversal import Polytope, check_pairwise_intersecting, polytopes_intersect

MAX_ATTEMPTS = 200


class GeneratorError(ValueError):
    """Parameters are invalid, or no valid instance was found."""


def _point(rng: random.Random, d: int, coord_range: int) -> tuple:
    return tuple(Fraction(rng.randint(-coord_range, coord_range)) for _ in range(d))


def _check_positive(**params) -> None:
    for name, v in params.items():
        if not isinstance(v, int) or v < 1:
            raise GeneratorError(f"{name} must be a positive integer, got {v!r}")


def random_point_config(d: int, n: int, coord_range: int, rng: random.Random) -> PointConfig:
    """n integer points in ``[-coord_range, coord_range]^d`` that affinely span ``R^d``."""
    _check_positive(d=d, coord_range=coord_range)
    if n < d + 1:
        raise GeneratorError(f"{n} points cannot span R^{d}")
    for _ in range(MAX_ATTEMPTS):
        cfg = PointConfig(d, [_point(rng, d, coord_range) for _ in range(n)])
        if cfg.affinely_spans:
            return cfg
    raise GeneratorError("could not draw a spanning configuration; widen the coordinate range")


def _jitter(rng: random.Random, d: int, scale: int) -> tuple:
    while True:
        u = tuple(Fraction(rng.randint(-scale, scale), 2) for _ in range(d))
        if any(u):
            return u


def intersecting_family(d: int, size: int, coord_range: int, rng: random.Random) -> list[Polytope]:
    """``size`` pairwise intersecting polytopes in ``R^d``.

    Every pair (a, b) gets a random meeting point q.  Either q becomes a
    vertex of both polytopes, or each polytope receives its own segment
    through q (so the pair meets without sharing a vertex).
    """
    _check_positive(d=d, size=size, coord_range=coord_range)
    verts: list[list[tuple]] = [[] for _ in range(size)]
    for a, b in combinations(range(size), 2):
        q = _point(rng, d, coord_range)
        if rng.random() < 0.5:
            verts[a].append(q)
            verts[b].append(q)
        else:
            for i in (a, b):
                u = _jitter(rng, d, coord_range)
                verts[i].extend([tuple(x + y for x, y in zip(q, u)), tuple(x - y for x, y in zip(q, u))])
    for v in verts:
        if not v:  # a lone polytope
            v.append(_point(rng, d, coord_range))
    family = [Polytope(sorted(set(v))) for v in verts]
    if check_pairwise_intersecting(family) is not None:  # pragma: no cover - holds by construction
        raise GeneratorError("generated family is not pairwise intersecting")
    return family


def dolnikov_instance(d: int, sizes: Sequence[int], coord_range: int, rng: random.Random) -> PolytopeFamily:
    """``len(sizes)`` pairwise intersecting families in ``R^d``; the coloring is the family index."""
    if len(sizes) > d:
        raise GeneratorError(f"at most {d} families in R^{d}")
    polys, coloring = [], []
    for f, s in enumerate(sizes):
        fam = intersecting_family(d, s, coord_range, rng)
        polys.extend(fam)
        coloring.extend([f] * len(fam))
    return PolytopeFamily(d, tuple(polys), tuple(coloring))


def _has_disjoint_clique(polys: Sequence[Polytope], r: int) -> bool:
    """Are there ``r`` pairwise disjoint polytopes (decided with exact LPs)?"""
    n = len(polys)
    if n < r:
        return False
    # encode "intersects" as a shared bit, so disjoint polytopes become disjoint sets
    members = [set() for _ in range(n)]
    for e, (i, j) in enumerate(combinations(range(n), 2)):
        if polytopes_intersect(polys[i], polys[j]) is not None:
            members[i].add(e)
            members[j].add(e)
    for i in range(n):
        members[i].add(n * n + i)  # keeps members nonempty and distinct
    F = SetFamily(n * n + n, members)
    return r_pairwise_disjoint_witness(F, r) is not None


def colorable_family(c: int, k: int, class_sizes: Sequence[int], pool_size: int, coord_range: int,
                     rng: random.Random, max_vertices: int = 3) -> PolytopeFamily:
    """Small polytopes in ``R^c`` colored so no class holds ``2^k`` pairwise disjoint members.

    Vertices come from one random pool of ``pool_size`` points so the
    witness set stays small.  Each class is drawn until the geometric
    Kneser condition holds; the first two polytopes of a class share a
    pool point, so every class has an intersecting pair.
    """
    _check_positive(c=c, k=k, pool_size=pool_size, coord_range=coord_range)
    r = 2 ** k
    pool = [_point(rng, c, coord_range) for _ in range(pool_size)]
    if len(set(pool)) < pool_size:
        pool = sorted(set(pool))
    polys, coloring = [], []
    for col, s in enumerate(class_sizes):
        _check_positive(class_size=s)
        for _ in range(MAX_ATTEMPTS):
            cls = []
            seen = set()
            while len(cls) < s:
                nv = rng.randint(1, min(max_vertices, len(pool)))
                verts = tuple(sorted(rng.sample(pool, nv)))
                if len(cls) == 1 and not set(verts) & set(cls[0].vertices):
                    verts = tuple(sorted(set(verts[1:]) | {cls[0].vertices[0]}))
                if verts in seen:
                    continue
                seen.add(verts)
                cls.append(Polytope(verts))
            if not _has_disjoint_clique(cls, r):
                break
        else:
            raise GeneratorError(f"could not draw class {col} without {r} pairwise disjoint polytopes")
        polys.extend(cls)
        coloring.extend([col] * s)
    return PolytopeFamily(c, tuple(polys), tuple(coloring))


def random_mass_instance(d: int, sizes: Sequence[int], coord_range: int, rng: random.Random) -> MassInstance:
    _check_positive(d=d, coord_range=coord_range)
    return MassInstance(d, [[_point(rng, d, coord_range) for _ in range(s)] for s in sizes])


def kneser_free_family(n: int, r: int, members: int, max_size: int, rng: random.Random) -> SetFamily:
    """Random members of ``range(n)``, keeping one only if no ``r`` pairwise disjoint members arise.

    The result has chromatic number 1 for KG^r.
    """
    _check_positive(n=n, members=members, max_size=max_size)
    if r < 2:
        raise GeneratorError("r must be at least 2")
    chosen: list[tuple] = []
    for _ in range(MAX_ATTEMPTS * members):
        if len(chosen) == members:
            break
        size = rng.randint(1, min(max_size, n))
        m = tuple(sorted(rng.sample(range(n), size)))
        if m in chosen:
            continue
        trial = SetFamily(n, chosen + [m])
        if r_pairwise_disjoint_witness(trial, r) is None:
            chosen.append(m)
    if not chosen:
        raise GeneratorError("no member could be kept")
    return SetFamily(n, chosen)


def random_set_family(n: int, members: int, max_size: int, rng: random.Random) -> SetFamily:
    _check_positive(n=n, members=members, max_size=max_size)
    seen: dict[tuple, None] = {}
    for _ in range(MAX_ATTEMPTS * members):
        if len(seen) == members:
            break
        size = rng.randint(1, min(max_size, n))
        seen.setdefault(tuple(sorted(rng.sample(range(n), size))), None)
    return SetFamily(n, seen.keys())


def _ints(params: dict, key: str, default=None) -> list[int]:
    v = params.get(key, default)
    if v is None:
        raise GeneratorError(f"missing parameter {key!r}")
    if isinstance(v, int):
        return [v]
    return [int(x) for x in v]


def _int(params: dict, key: str, default=None) -> int:
    v = params.get(key, default)
    if v is None:
        raise GeneratorError(f"missing parameter {key!r}")
    if isinstance(v, bool) or not isinstance(v, int):
        raise GeneratorError(f"parameter {key!r} must be an integer")
    return v


def generate(kind: str, params: dict, seed: int) -> InstanceFile:
    """Instance file for ``kind`` with the given parameters, reproducible from ``seed``.

    ``params["mode"]`` selects a variant:

    * pointConfig: ``d``, ``n``, ``range``
    * polytopeFamily, mode ``intersecting``: ``d``, ``sizes`` (one per family), ``range``
    * polytopeFamily, mode ``colorable``: ``c``, ``k``, ``sizes`` (one per class), ``pool``, ``range``
    * massInstance, mode ``random``: ``d``, ``sizes``, ``range``
    * massInstance, mode ``momentCurve``: ``m``, ``k``, ``d``, ``sizes``
    * setFamily, mode ``random``: ``n``, ``members``, ``maxSize``
    * setFamily, mode ``kneserFree``: ``n``, ``r``, ``members``, ``maxSize``
    """
    rng = random.Random(seed)
    mode = params.get("mode")
    meta = {"generator": f"{kind}/{mode}" if mode else kind, "seed": seed,
            "params": {k: params[k] for k in sorted(params)}}
    if kind == "pointConfig":
        payload = random_point_config(_int(params, "d"), _int(params, "n"), _int(params, "range", 10), rng)
    elif kind == "polytopeFamily":
        mode = mode or "intersecting"
        if mode == "intersecting":
            d = _int(params, "d")
            payload = dolnikov_instance(d, _ints(params, "sizes", [3] * d), _int(params, "range", 10), rng)
            meta["regime"] = "dolnikov"
        elif mode == "colorable":
            k = _int(params, "k")
            payload = colorable_family(_int(params, "c"), k, _ints(params, "sizes"), _int(params, "pool", 8),
                                       _int(params, "range", 10), rng, _int(params, "maxVertices", 3))
        else:
            raise GeneratorError(f"unknown polytopeFamily mode {mode!r}")
    elif kind == "massInstance":
        mode = mode or "random"
        if mode == "random":
            payload = random_mass_instance(_int(params, "d"), _ints(params, "sizes"), _int(params, "range", 10), rng)
        elif mode == "momentCurve":
            m = _int(params, "m")
            payload = moment_curve_instance(m, _int(params, "k"), _int(params, "d"),
                                            _ints(params, "sizes", [4] * m), seed)
        else:
            raise GeneratorError(f"unknown massInstance mode {mode!r}")
    elif kind == "setFamily":
        mode = mode or "random"
        if mode == "random":
            payload = random_set_family(_int(params, "n"), _int(params, "members"), _int(params, "maxSize", 3), rng)
        elif mode == "kneserFree":
            payload = kneser_free_family(_int(params, "n"), _int(params, "r"), _int(params, "members"),
                                         _int(params, "maxSize", 3), rng)
        else:
            raise GeneratorError(f"unknown setFamily mode {mode!r}")
    else:
        raise GeneratorError(f"unknown kind {kind!r}")
    return InstanceFile(kind, payload, meta)
