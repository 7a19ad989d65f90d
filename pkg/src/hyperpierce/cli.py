"""Command line interface: ``hyperpierce <command> [instance] [flags]``.

Every command prints a run report (JSON or markdown).  The verification
status in the report is recomputed from the instance and the certificate
after the solver returns.  Exit codes: 0 verified, 1 usage or I/O error,
2 hypothesis violation, 3 exhausted search or failed verification.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import io as hio
from .bounds import bounds_markdown, delta_bounds, regime_table
from .duality import NotSeparating
from .equipartition import MassInstance, equipartition_search, ham_sandwich
from .exact import ONE, dot, rank_of_vectors
from .gale import DegenerateConfiguration, PointConfig, gale_transform, inverse_gale
from .generate import GeneratorError, generate
from .kneser import (MAX_CHROMATIC_MEMBERS, is_face, least_coloring, nonface_complex,
                     verify_coloring)
from .radon import (GuardExceeded, InvalidRadonPair, NoAffineDependence, RadonTuple, SearchExhausted,
                    enumerate_minimal_radon_pairs, find_constrained_radon_tuple, find_minimal_radon_pair,
                    is_minimal, tuple_avoids)
from .transversal import (HypothesisViolation, RegimeViolation, TransversalCertificate, VerificationFailure,
                          affine_k_transversal, check_certificate, dolnikov_hyperplane)

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_ANOMALY = 0, 1, 2, 3

HYPOTHESIS_ERRORS = (HypothesisViolation, RegimeViolation, NoAffineDependence, DegenerateConfiguration,
                     NotSeparating, InvalidRadonPair)


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    input_digest: str | None = None
    certificate: Any = None
    verified: bool = False
    status: str = "error"
    anomalies: list = field(default_factory=list)
    message: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"command": self.command, "inputDigest": self.input_digest, "certificate": self.certificate,
                "verified": self.verified, "status": self.status, "anomalies": list(self.anomalies),
                "message": self.message, "seconds": round(self.seconds, 6)}


# --- independent re-verification --------------------------------------------

def _dual_ok(primal: PointConfig, dual: PointConfig) -> bool:
    """``A B^T = 0`` and ``rank B = n - d - 1``: the dual spans the affine dependences."""
    if primal.n != dual.n or dual.dim != primal.n - primal.dim - 1:
        return False
    lifted = [p + (ONE,) for p in primal.points]
    for r in range(dual.dim):
        row = [b[r] for b in dual.points]
        if any(sum(row[j] * lifted[j][i] for j in range(primal.n)) != 0 for i in range(primal.dim + 1)):
            return False
    return dual.dim == 0 or rank_of_vectors(dual.points, dual.dim) == dual.dim


def _recount(inst: MassInstance, hps, k: int) -> bool:
    """Open-orthant counts by direct sign evaluation, compared as ``count * 2^k <= |X_i|``."""
    for X in inst.sets:
        cells: dict[tuple, int] = {}
        for p in X:
            vals = [dot(h.normal, p) - h.offset for h in hps]
            if any(v == 0 for v in vals):
                continue
            key = tuple(v > 0 for v in vals)
            cells[key] = cells.get(key, 0) + 1
        if any(c * 2 ** k > len(X) for c in cells.values()):
            return False
    return True


# --- command handlers ---------------------------------------------------------
# each returns (certificate json, verified flag, extra message)

def _need(inst: hio.InstanceFile | None, kind: str):
    if inst is None:
        raise UsageError("this command needs an instance file")
    if inst.kind != kind:
        raise UsageError(f"expected a {kind} instance, got {inst.kind}")
    return inst.payload


def cmd_gale(args, inst):
    primal = _need(inst, "pointConfig")
    dual = gale_transform(primal)
    return hio.point_config_to_json(dual), _dual_ok(primal, dual), ""


def cmd_inverse_gale(args, inst):
    dual = _need(inst, "pointConfig")
    primal = inverse_gale(dual)
    return hio.point_config_to_json(primal), _dual_ok(primal, dual), ""


def cmd_radon(args, inst):
    cfg = _need(inst, "pointConfig")
    pair = find_minimal_radon_pair(cfg)
    ok = pair.verify(cfg) and is_minimal(cfg, pair)
    cert = hio.radon_pair_to_json(pair)
    cert["commonPoint"] = hio._vec_out(pair.common_point(cfg))
    return cert, ok, ""


def cmd_radon_enum(args, inst):
    cfg = _need(inst, "pointConfig")
    pairs = enumerate_minimal_radon_pairs(cfg, args.max_support)
    ok = all(p.verify(cfg) and is_minimal(cfg, p) for p in pairs)
    return {"pairs": [hio.radon_pair_to_json(p) for p in pairs]}, ok, f"{len(pairs)} minimal pairs"


def cmd_constrained_radon(args, inst):
    cfg = _need(inst, "pointConfig")
    if not args.family:
        raise UsageError("constrained-radon needs --family FILE (a setFamily over the points)")
    fam_file = hio.load_instance(args.family)
    F = _need(fam_file, "setFamily")
    if F.n != cfg.n:
        raise UsageError(f"family ground set {F.n} differs from the {cfg.n} points")
    rt = find_constrained_radon_tuple(cfg, F, args.k, args.max_support)
    ok = all(p.verify(cfg) and is_minimal(cfg, p) for p in rt.pairs) and tuple_avoids(rt, F)
    return hio.radon_tuple_to_json(rt), ok, ""


def cmd_dolnikov(args, inst):
    pf = _need(inst, "polytopeFamily")
    cert = dolnikov_hyperplane(pf.classes(), args.max_support)
    # the solver numbers polytopes class by class; map back to file order
    order = sorted(range(len(pf.polytopes)), key=lambda i: pf.coloring[i])
    witnesses = sorted((w._replace(polytope=order[w.polytope]) for w in cert.witnesses), key=lambda w: w.polytope)
    cert = TransversalCertificate(cert.hyperplanes, tuple(witnesses), cert.regime, cert.empirical, cert.radon_pairs)
    return hio.transversal_certificate_to_json(cert), check_certificate(cert, pf.polytopes), ""


def cmd_transversal(args, inst):
    pf = _need(inst, "polytopeFamily")
    cert = affine_k_transversal(list(pf.polytopes), args.k, pf.m, pf.coloring,
                                regime_check=args.regime_check == "on", max_support=args.max_support)
    msg = "outside every proven regime; result is empirical" if cert.empirical else ""
    return hio.transversal_certificate_to_json(cert), check_certificate(cert, pf.polytopes), msg


def cmd_hamsandwich(args, inst):
    mi = _need(inst, "massInstance")
    if mi.m != mi.dim:
        raise HypothesisViolation(f"ham sandwich needs d sets in R^d, got {mi.m} sets in R^{mi.dim}")
    cert = ham_sandwich(mi)
    return hio.equipartition_certificate_to_json(cert), _recount(mi, cert.hyperplanes, 1), ""


def cmd_equipartition(args, inst):
    mi = _need(inst, "massInstance")
    cert = equipartition_search(mi, args.k)
    msg = "" if cert.guaranteed else "dimension below the proven bound; result is empirical"
    return hio.equipartition_certificate_to_json(cert), _recount(mi, cert.hyperplanes, args.k), msg


def cmd_kneser_chi(args, inst):
    F = _need(inst, "setFamily")
    if len(F.members) > MAX_CHROMATIC_MEMBERS:
        raise GuardExceeded(f"chromatic search accepts at most {MAX_CHROMATIC_MEMBERS} members")
    coloring = least_coloring(F, args.r, args.max_colors)
    if coloring is None:
        return {"r": args.r, "chromaticNumber": None, "maxColors": args.max_colors}, True, \
            f"more than {args.max_colors} colors needed"
    chi = max(coloring) + 1 if coloring else 0
    ok = verify_coloring(F, coloring, args.r) is None
    return {"r": args.r, "chromaticNumber": chi, "coloring": [c + 1 for c in coloring]}, ok, ""


def cmd_nonface(args, inst):
    F = _need(inst, "setFamily")
    facets = nonface_complex(F)
    ok = all(is_face(F, f) and all(not is_face(F, set(f) | {i}) for i in range(F.n) if i not in f)
             for f in facets)
    return {"facets": [[i + 1 for i in f] for f in facets]}, ok, ""


def cmd_bounds(args, inst):
    if args.m is None or args.k is None:
        raise UsageError("bounds needs --m and --k")
    if args.m < 1 or args.k < 1:
        raise UsageError("--m and --k must be positive")
    b = delta_bounds(args.m, args.k)
    cert = hio.delta_bounds_to_json(args.m, args.k, b)
    if args.table:
        cert["table"] = [hio.delta_bounds_to_json(m, k, delta_bounds(m, k))
                         for k in range(1, args.k + 1) for m in range(1, args.m + 1)]
        cert["regimes"] = [{"m": m, "k": k, "c": c, "regime": tag} for m, k, c, tag in regime_table(args.m, args.k)]
    ok = b.lower <= b.upper and (b.exact is None or b.lower <= b.exact <= b.upper)
    return cert, ok, ""


def cmd_verify(args, inst):
    if not args.certificate:
        raise UsageError("verify needs --certificate FILE (a saved report or certificate)")
    with open(args.certificate, encoding="utf-8") as fh:
        obj = json.load(fh)
    if "command" in obj and "certificate" in obj:
        cert = obj["certificate"]
        if cert is None:
            raise UsageError("report holds no certificate")
    else:
        cert = obj
    if inst is None:
        raise UsageError("verify needs the instance file the certificate refers to")
    p = inst.payload
    if inst.kind == "pointConfig" and "pairs" in cert:
        pairs = [hio.radon_pair_from_json(x) for x in cert["pairs"]]
        ok = all(q.verify(p) and is_minimal(p, q) for q in pairs)
        if args.family:
            F = _need(hio.load_instance(args.family), "setFamily")
            ok = ok and tuple_avoids(RadonTuple(tuple(pairs)), F)
        return cert, ok, "radon pairs"
    if inst.kind == "pointConfig" and "plus" in cert:
        q = hio.radon_pair_from_json(cert)
        return cert, q.verify(p) and is_minimal(p, q), "radon pair"
    if inst.kind == "pointConfig" and "points" in cert:
        other = hio.point_config_from_json(cert)
        return cert, _dual_ok(p, other) or _dual_ok(other, p), "gale pair"
    if inst.kind == "polytopeFamily" and "witnesses" in cert:
        tc = hio.transversal_certificate_from_json(cert)
        return cert, check_certificate(tc, p.polytopes), "transversal"
    if inst.kind == "massInstance" and "hyperplanes" in cert:
        hps = hio.equipartition_hyperplanes_from_json(cert)
        return cert, _recount(p, hps, len(hps)), "equipartition"
    if inst.kind == "setFamily" and "coloring" in cert:
        coloring = [c - 1 for c in cert["coloring"]]
        return cert, verify_coloring(p, coloring, int(cert["r"])) is None, "coloring"
    raise UsageError("certificate type does not match the instance kind")


def _parse_params(pairs: list[str]) -> dict:
    params: dict[str, Any] = {}
    for item in pairs:
        if "=" not in item:
            raise UsageError(f"generator parameter {item!r} is not key=value")
        key, raw = item.split("=", 1)
        if raw.isdigit() or (raw.startswith("-") and raw[1:].isdigit()):
            params[key] = int(raw)
        elif "," in raw and all(x.strip().lstrip("-").isdigit() for x in raw.split(",")):
            params[key] = [int(x) for x in raw.split(",")]
        else:
            params[key] = raw
    return params


COMMANDS: dict[str, Callable] = {
    "gale": cmd_gale,
    "inverse-gale": cmd_inverse_gale,
    "radon": cmd_radon,
    "radon-enum": cmd_radon_enum,
    "constrained-radon": cmd_constrained_radon,
    "dolnikov": cmd_dolnikov,
    "transversal": cmd_transversal,
    "hamsandwich": cmd_hamsandwich,
    "equipartition": cmd_equipartition,
    "kneser-chi": cmd_kneser_chi,
    "nonface": cmd_nonface,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperpierce", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=sorted(list(COMMANDS) + ["generate"]))
    ap.add_argument("input", nargs="?", help="instance file (JSON); for generate, the kind")
    ap.add_argument("params", nargs="*", help="generate only: key=value parameters")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-support", type=int, default=None, help="cap on |plus| + |minus| of Radon pairs")
    ap.add_argument("--out", default=None, help="write the report (or generated instance) here")
    ap.add_argument("--format", choices=("json", "md"), default="json")
    ap.add_argument("--regime-check", choices=("on", "off"), default="on")
    ap.add_argument("--k", type=int, default=1, help="number of hyperplanes / Radon pairs")
    ap.add_argument("--m", type=int, default=None)
    ap.add_argument("--r", type=int, default=2, help="Kneser uniformity")
    ap.add_argument("--max-colors", type=int, default=6)
    ap.add_argument("--family", default=None, help="setFamily file for constrained-radon / verify")
    ap.add_argument("--certificate", default=None, help="certificate or report file for verify")
    ap.add_argument("--table", action="store_true", help="bounds: include the full m <= M, k <= K table")
    return ap


def _markdown(report: RunReport, args) -> str:
    lines = [f"# hyperpierce {report.command}", "",
             f"- status: **{report.status}**", f"- verified: {report.verified}"]
    if report.input_digest:
        lines.append(f"- input sha256: `{report.input_digest}`")
    if report.anomalies:
        lines.append(f"- anomalies: {', '.join(report.anomalies)}")
    if report.message:
        lines.append(f"- message: {report.message}")
    lines.append(f"- seconds: {report.seconds:.3f}")
    if report.command == "bounds" and args.table and report.certificate:
        lines += ["", bounds_markdown(args.m, args.k).rstrip()]
    if report.certificate is not None:
        lines += ["", "```json", hio.dumps(report.certificate).rstrip(), "```"]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> tuple[RunReport | None, int]:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return None, EXIT_OK if exc.code == 0 else EXIT_USAGE

    if args.command == "generate":
        try:
            if not args.input:
                raise UsageError("generate needs a kind")
            inst = generate(args.input, _parse_params(args.params), args.seed)
        except (UsageError, GeneratorError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return None, EXIT_USAGE
        _emit(hio.dumps(inst.to_json()), args.out)
        return None, EXIT_OK

    report = RunReport(args.command)
    code = EXIT_USAGE
    t0 = time.perf_counter()
    try:
        if args.params:
            raise UsageError("extra positional arguments")
        inst = None
        if args.input:
            inst = hio.load_instance(args.input)
            report.input_digest = hio.digest(inst.payload_json())
        cert, ok, msg = COMMANDS[args.command](args, inst)
        report.certificate, report.verified, report.message = cert, bool(ok), msg
        if ok:
            report.status, code = "verified", EXIT_OK
        else:
            report.status, code = "verification-failed", EXIT_ANOMALY
            report.anomalies.append("verification-failed")
    except SearchExhausted as exc:
        anomaly = getattr(exc, "anomaly", True)
        report.message = str(exc)
        if anomaly:
            report.status, code = "exhausted", EXIT_ANOMALY
            report.anomalies.append("exhausted")
        else:
            report.status, code = "not-found-outside-guarantee", EXIT_HYPOTHESIS
    except VerificationFailure as exc:
        report.status, code, report.message = "verification-failed", EXIT_ANOMALY, str(exc)
        report.anomalies.append("verification-failed")
    except HYPOTHESIS_ERRORS as exc:
        report.status, code, report.message = "hypothesis-violation", EXIT_HYPOTHESIS, str(exc)
    except (UsageError, hio.FormatError, GuardExceeded, OSError, json.JSONDecodeError, ValueError) as exc:
        report.status, code, report.message = "usage-error", EXIT_USAGE, str(exc)
    report.seconds = time.perf_counter() - t0
    text = _markdown(report, args) if args.format == "md" else hio.dumps(report.to_json())
    _emit(text, args.out)
    if code == EXIT_USAGE:
        print(f"error: {report.message}", file=sys.stderr)
    return report, code


def main(argv: list[str] | None = None) -> int:
    return run(argv)[1]


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
