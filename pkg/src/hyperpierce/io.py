"""JSON instance and certificate formats.

Rationals are strings ``"p/q"`` (``"p"`` when ``q = 1``).  Point and
member indices are 1-based in files and 0-based in Python.  Output is
written with sorted keys and a fixed indent, so equal objects give equal
bytes.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from .bounds import DeltaBounds
from .equipartition import EquipartitionCertificate, MassInstance
from .exact import format_rational, to_rational
from .gale import LinearHyperplane, PointConfig, SignPattern
from .kneser import SetFamily
from .radon import RadonPair, RadonTuple
from .transversal import AffineHyperplane, PiercingWitness, Polytope, TransversalCertificate

KINDS = ("pointConfig", "massInstance", "polytopeFamily", "setFamily")


class FormatError(ValueError):
    """Malformed instance or certificate file."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def digest(obj: Any) -> str:
    """sha256 of the canonical serialization."""
    return hashlib.sha256(dumps(obj).encode()).hexdigest()


def _q(x) -> str:
    return format_rational(x)


def _vec_out(v) -> list[str]:
    return [_q(x) for x in v]


def _vec_in(raw, dim: int | None = None) -> tuple:
    if not isinstance(raw, list):
        raise FormatError(f"expected a list of rationals, got {raw!r}")
    try:
        v = tuple(to_rational(x) for x in raw)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(str(exc)) from exc
    if dim is not None and len(v) != dim:
        raise FormatError(f"expected {dim} coordinates, got {len(v)}")
    return v


def _int(raw, what: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise FormatError(f"{what} must be an integer, got {raw!r}")
    return raw


def _indices_in(raw, n: int | None = None) -> tuple:
    if not isinstance(raw, list):
        raise FormatError(f"expected a list of indices, got {raw!r}")
    out = []
    for i in raw:
        i = _int(i, "index")
        if i < 1 or (n is not None and i > n):
            raise FormatError(f"index {i} out of range 1..{n}")
        out.append(i - 1)
    return tuple(out)


def _indices_out(idx) -> list[int]:
    return [i + 1 for i in sorted(idx)]


def _require(obj: dict, *keys: str) -> None:
    if not isinstance(obj, dict):
        raise FormatError(f"expected an object, got {type(obj).__name__}")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise FormatError(f"missing field(s) {', '.join(missing)}")


# --- point configurations -------------------------------------------------

def point_config_to_json(cfg: PointConfig) -> dict:
    return {"d": cfg.dim, "points": [_vec_out(p) for p in cfg.points],
            "synthetic": _indices_out(cfg.synthetic)}


def point_config_from_json(obj: dict) -> PointConfig:
    _require(obj, "d", "points")
    d = _int(obj["d"], "d")
    pts = [_vec_in(p, d) for p in obj["points"]]
    if not pts:
        raise FormatError("a configuration needs at least one point")
    syn = _indices_in(obj.get("synthetic", []), len(pts))
    return PointConfig(d, pts, syn)


# --- Radon pairs ----------------------------------------------------------

def radon_pair_to_json(p: RadonPair) -> dict:
    return {"plus": [i + 1 for i in p.plus], "minus": [i + 1 for i in p.minus],
            "lambdaPlus": _vec_out(p.lambda_plus), "lambdaMinus": _vec_out(p.lambda_minus)}


def radon_pair_from_json(obj: dict) -> RadonPair:
    _require(obj, "plus", "minus", "lambdaPlus", "lambdaMinus")
    return RadonPair(_indices_in(obj["plus"]), _indices_in(obj["minus"]),
                     _vec_in(obj["lambdaPlus"]), _vec_in(obj["lambdaMinus"]))


def radon_tuple_to_json(rt: RadonTuple) -> dict:
    return {"pairs": [radon_pair_to_json(p) for p in rt.pairs]}


def radon_tuple_from_json(obj: dict) -> RadonTuple:
    _require(obj, "pairs")
    return RadonTuple(tuple(radon_pair_from_json(p) for p in obj["pairs"]))


# --- set families ---------------------------------------------------------

def set_family_to_json(F: SetFamily) -> dict:
    return {"n": F.n, "members": [_indices_out(m) for m in F.members]}


def set_family_from_json(obj: dict) -> SetFamily:
    _require(obj, "n", "members")
    n = _int(obj["n"], "n")
    return SetFamily(n, [_indices_in(m, n) for m in obj["members"]])


# --- polytope families ----------------------------------------------------

@dataclass(frozen=True)
class PolytopeFamily:
    c: int
    polytopes: tuple
    coloring: tuple

    @property
    def m(self) -> int:
        return max(self.coloring) + 1 if self.coloring else 0

    def classes(self) -> list[list[Polytope]]:
        """Polytopes grouped by color, empty colors dropped."""
        out: list[list[Polytope]] = [[] for _ in range(self.m)]
        for P, col in zip(self.polytopes, self.coloring):
            out[col].append(P)
        return [c for c in out if c]


def polytope_family_to_json(pf: PolytopeFamily) -> dict:
    return {"c": pf.c, "polytopes": [{"vertices": [_vec_out(v) for v in P.vertices]} for P in pf.polytopes],
            "coloring": list(pf.coloring)}


def polytope_family_from_json(obj: dict) -> PolytopeFamily:
    _require(obj, "c", "polytopes")
    c = _int(obj["c"], "c")
    polys = []
    for P in obj["polytopes"]:
        _require(P, "vertices")
        if not P["vertices"]:
            raise FormatError("a polytope needs at least one vertex")
        polys.append(Polytope([_vec_in(v, c) for v in P["vertices"]]))
    if not polys:
        raise FormatError("empty polytope family")
    coloring = tuple(_int(x, "color") for x in obj.get("coloring", [0] * len(polys)))
    if len(coloring) != len(polys):
        raise FormatError("coloring must have one entry per polytope")
    if any(x < 0 for x in coloring):
        raise FormatError("colors must be nonnegative")
    return PolytopeFamily(c, tuple(polys), coloring)


# --- mass instances -------------------------------------------------------

def mass_instance_to_json(inst: MassInstance) -> dict:
    return {"d": inst.dim, "sets": [[_vec_out(p) for p in X] for X in inst.sets]}


def mass_instance_from_json(obj: dict) -> MassInstance:
    _require(obj, "d", "sets")
    d = _int(obj["d"], "d")
    sets = [[_vec_in(p, d) for p in X] for X in obj["sets"]]
    try:
        return MassInstance(d, sets)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# --- hyperplanes and certificates -----------------------------------------

def hyperplane_to_json(h) -> dict:
    if isinstance(h, AffineHyperplane):
        return {"normal": _vec_out(h.normal), "offset": _q(h.offset)}
    return {"normal": _vec_out(h.normal)}


def hyperplane_from_json(obj: dict):
    _require(obj, "normal")
    if "offset" in obj:
        return AffineHyperplane(_vec_in(obj["normal"]), to_rational(obj["offset"]))
    return LinearHyperplane(_vec_in(obj["normal"]))


def sign_pattern_to_json(s: SignPattern) -> str:
    return str(s)


def transversal_certificate_to_json(cert: TransversalCertificate) -> dict:
    return {
        "hyperplanes": [hyperplane_to_json(h) for h in cert.hyperplanes],
        "witnesses": [{"polytope": w.polytope + 1, "hyperplane": w.hyperplane + 1,
                       "point": _vec_out(w.point), "coefficients": _vec_out(w.coefficients)}
                      for w in cert.witnesses],
        "regime": cert.regime,
        "empirical": cert.empirical,
    }


def transversal_certificate_from_json(obj: dict) -> TransversalCertificate:
    _require(obj, "hyperplanes", "witnesses")
    hps = tuple(hyperplane_from_json(h) for h in obj["hyperplanes"])
    ws = []
    for w in obj["witnesses"]:
        _require(w, "polytope", "hyperplane", "point", "coefficients")
        ws.append(PiercingWitness(_int(w["polytope"], "polytope") - 1, _int(w["hyperplane"], "hyperplane") - 1,
                                  _vec_in(w["point"]), _vec_in(w["coefficients"])))
    return TransversalCertificate(hps, tuple(ws), obj.get("regime", ""), bool(obj.get("empirical", False)))


def _signs_key(s: tuple) -> str:
    return "".join("+" if x > 0 else "-" for x in s)


def equipartition_certificate_to_json(cert: EquipartitionCertificate) -> dict:
    return {
        "hyperplanes": [hyperplane_to_json(h) for h in cert.hyperplanes],
        "orthants": {_signs_key(s): list(c) for s, c in cert.counts.items()},
        "guaranteed": cert.guaranteed,
    }


def equipartition_hyperplanes_from_json(obj: dict) -> tuple:
    _require(obj, "hyperplanes")
    return tuple(hyperplane_from_json(h) for h in obj["hyperplanes"])


def delta_bounds_to_json(m: int, k: int, b: DeltaBounds) -> dict:
    return {"m": m, "k": k, "lower": b.lower, "upper": b.upper, "exact": b.exact}


# --- instance files -------------------------------------------------------

_WRITERS = {
    "pointConfig": point_config_to_json,
    "massInstance": mass_instance_to_json,
    "polytopeFamily": polytope_family_to_json,
    "setFamily": set_family_to_json,
}
_READERS = {
    "pointConfig": point_config_from_json,
    "massInstance": mass_instance_from_json,
    "polytopeFamily": polytope_family_from_json,
    "setFamily": set_family_from_json,
}


@dataclass(frozen=True)
class InstanceFile:
    kind: str
    payload: Any
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FormatError(f"unknown kind {self.kind!r}")

    def to_json(self) -> dict:
        return {"kind": self.kind, "metadata": dict(self.metadata), "payload": _WRITERS[self.kind](self.payload)}

    def payload_json(self) -> dict:
        return _WRITERS[self.kind](self.payload)


def _guess_kind(obj: dict) -> str:
    for key, kind in (("points", "pointConfig"), ("sets", "massInstance"),
                      ("polytopes", "polytopeFamily"), ("members", "setFamily")):
        if key in obj:
            return kind
    raise FormatError("cannot tell the instance kind; add a \"kind\" field")


def instance_from_json(obj: Any) -> InstanceFile:
    """Parse a wrapped instance file, or a bare payload whose kind is inferred from its keys."""
    if not isinstance(obj, dict):
        raise FormatError("instance file must hold a JSON object")
    if "kind" in obj:
        _require(obj, "payload")
        kind = obj["kind"]
        if kind not in KINDS:
            raise FormatError(f"unknown kind {kind!r}")
        meta = obj.get("metadata", {})
        if not isinstance(meta, dict):
            raise FormatError("metadata must be an object")
        return InstanceFile(kind, _READERS[kind](obj["payload"]), meta)
    kind = _guess_kind(obj)
    return InstanceFile(kind, _READERS[kind](obj), {})


def load_instance(path: str) -> InstanceFile:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from exc
    return instance_from_json(obj)


def save_json(obj: Any, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
