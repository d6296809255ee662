"""Command-line entry point.

Exit codes: 0 pass, 1 violation found, 2 input error, 3 undecided (search budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import formats
from .bicross import bicrossed_ring, verify_exact_factorization
from .crossact import CrossedActionData, pointed_crossed_action, verify_crossed_action
from .dualgt import dual_ring_group_theoretical
from .equivar import equivariantize_pointed, extension_checks
from .errors import SearchTimeout, ValidationError, ZSFusionError
from .fusring import find_based_iso, fpdim, validate_fusion_ring
from .grp import exact_factorizations, make_subgroup
from .matched import MatchedPair, derive_matched_pair, verify_matched_pair, zappa_szep
from .numlin import DEFAULT_TOL

EXIT = {"pass": 0, "violation": 1, "input-error": 2, "undecided": 3}


@dataclass
class RunReport:
    command: str
    status: str = "pass"
    findings: list = field(default_factory=list)
    result: object = None
    ms: float | None = None

    def fail(self, finding: dict) -> None:
        self.findings.append(finding)
        if self.status == "pass":
            self.status = "violation"

    def to_json(self) -> dict:
        return {"command": self.command, "status": self.status, "findings": self.findings,
                "result": self.result, "ms": self.ms}


def _plain(x):
    """JSON-safe copy (tuples -> lists, numpy scalars -> Python)."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "item"):
        return x.item()
    return x


def _elements(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}") from None


def _load(path, kind=None):
    return formats.load(path, kind)[1]


def _as_crossed_action(path) -> CrossedActionData:
    kind, obj = formats.load(path)
    if kind == "matched-pair":
        return pointed_crossed_action(obj)
    if kind == "crossed-action":
        return obj
    raise ZSFusionError(f"expected a matched pair or crossed action, got {kind}")


def cmd_verify(args, rep: RunReport) -> None:
    try:
        kind, obj = formats.load(args.path, args.kind)
    except ValidationError as exc:
        # a well-formed table failing the group axioms is a finding, not bad input
        rep.fail({"check": str(exc), "witness": _plain(exc.witness)})
        return
    rep.result = {"kind": kind}
    if kind == "matched-pair":
        items = verify_matched_pair(obj)
    elif kind == "fusion-ring":
        items = validate_fusion_ring(obj)
    elif kind == "crossed-action":
        items = verify_crossed_action(obj)
    else:
        items = []
        rep.result["order"] = obj.n
    for item in items:
        rep.fail(_plain(item))


def cmd_factorize(args, rep: RunReport) -> None:
    S = _load(args.path, "group")
    pairs = exact_factorizations(S, args.max_generators)
    rep.result = [{"G": list(G.elements), "Gamma": list(K.elements)} for G, K in pairs]


def cmd_derive(args, rep: RunReport) -> None:
    S = _load(args.path, "group")
    if args.index is not None:
        pairs = exact_factorizations(S)
        if not 0 <= args.index < len(pairs):
            raise ZSFusionError(f"factorization index {args.index} out of range (0..{len(pairs) - 1})")
        G, K = pairs[args.index]
    else:
        if args.G is None or args.Gamma is None:
            raise ZSFusionError("give --index or both --G and --Gamma")
        G, K = make_subgroup(S, args.G), make_subgroup(S, args.Gamma)
    rep.result = formats.dump(derive_matched_pair(S, G, K))


def cmd_zappa(args, rep: RunReport) -> None:
    mp = _load(args.path, "matched-pair")
    rep.result = formats.dump(zappa_szep(mp))


def cmd_bicross(args, rep: RunReport) -> None:
    d = _as_crossed_action(args.path)
    B = bicrossed_ring(d)
    rep.result = formats.dump(B.ring)
    for item in verify_exact_factorization(B.ring, B.group_labels(), B.base_labels(), args.tol_fp):
        rep.fail(_plain(item))


def cmd_equivariantize(args, rep: RunReport) -> None:
    d = _as_crossed_action(args.path)
    E = equivariantize_pointed(d, seed=args.seed, tol=args.tol, workers=args.workers)
    rep.result = {"ring": formats.dump(E.ring),
                  "simples": [{"orbit": list(S.orbit), "dim": S.dim, "fp": S.fp} for S in E.simples]}
    for item in validate_fusion_ring(E.ring):
        rep.fail(_plain(item))


def cmd_dual_gt(args, rep: RunReport) -> None:
    S = _load(args.path, "group")
    H = make_subgroup(S, args.H)
    D = dual_ring_group_theoretical(S, H, seed=args.seed, tol=args.tol, workers=args.workers)
    rep.result = {"ring": formats.dump(D.ring),
                  "simples": [{"rep": S_.rep, "dim": S_.dim} for S_ in D.simples]}
    for item in validate_fusion_ring(D.ring):
        rep.fail(_plain(item))


def cmd_compare(args, rep: RunReport) -> None:
    R1 = _load(args.first, "fusion-ring")
    R2 = _load(args.second, "fusion-ring")
    iso = find_based_iso(R1, R2, args.max_nodes)
    if iso is None:
        rep.fail({"check": "based-ring isomorphism", "witness": None})
    else:
        rep.result = {"perm": list(iso.perm), "via_dual": iso.via_dual}


def theorem1(mp: MatchedPair, seed: int = 0, tol: float = DEFAULT_TOL, workers: int = 1,
             max_nodes: int = 10 ** 7, tol_fp: float = 1e-6) -> RunReport:
    """Crossed extension of vec_Gamma versus the dual of vec_Sigma w.r.t. G, at ring level."""
    rep = RunReport("theorem1")
    bad = verify_matched_pair(mp)
    if bad:
        raise ValidationError(f"invalid matched pair: {bad[0]['axiom']}", witness=bad[0])
    d = pointed_crossed_action(mp)
    K1 = equivariantize_pointed(d, seed=seed, tol=tol, workers=workers)
    Sigma = zappa_szep(mp)
    H = make_subgroup(Sigma, [mp.pair_index(g, mp.Gamma.identity) for g in range(mp.G.n)])
    K2 = dual_ring_group_theoretical(Sigma, H, seed=seed, tol=tol, workers=workers)
    iso = find_based_iso(K1.ring, K2.ring, max_nodes)
    if iso is None:
        rep.fail({"check": "K(crossed extension) ≅ K(dual model)", "witness": None})
    for item in extension_checks(K1.ring, K1.simples, d, seed):
        rep.fail(_plain(item))
    B = bicrossed_ring(d)
    for item in verify_exact_factorization(B.ring, B.group_labels(), B.base_labels(), tol_fp):
        rep.fail(_plain(item))
    for name, R in (("crossed extension", K1.ring), ("dual model", K2.ring)):
        for item in validate_fusion_ring(R):
            rep.fail({"check": f"{name}: {item['axiom']}", "witness": _plain(item["witness"])})
    rep.result = {
        "rank": K1.ring.rank,
        "fp_dims": list(fpdim(K1.ring).dims),
        "crossed_extension_labels": list(K1.ring.labels),
        "dual_model_labels": list(K2.ring.labels),
        "bijection": None if iso is None else list(iso.perm),
        "via_dual": None if iso is None else iso.via_dual,
    }
    return rep


def cmd_theorem1(args, rep: RunReport) -> None:
    mp = _load(args.path, "matched-pair")
    out = theorem1(mp, args.seed, args.tol, args.workers, args.max_nodes, args.tol_fp)
    rep.status, rep.findings, rep.result = out.status, out.findings, out.result


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--seed", type=int, default=0, help="seed for the random splittings")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="linear algebra tolerance")
    common.add_argument("--tol-fp", type=float, default=1e-6, help="tolerance for FP-dimension checks")
    common.add_argument("--workers", type=int, default=1, help="threads for independent solves")
    common.add_argument("--max-nodes", type=int, default=10 ** 7, help="isomorphism search budget")
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock time from reports")

    p = argparse.ArgumentParser(prog="zsfusion", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="validate a group, matched pair, ring or crossed action")
    s.add_argument("path")
    s.add_argument("--kind", choices=formats.KINDS)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("factorize", parents=[common], help="list exact factorizations of a group")
    s.add_argument("path")
    s.add_argument("--max-generators", type=int, default=2, choices=(1, 2, 3))
    s.set_defaults(func=cmd_factorize)

    s = sub.add_parser("derive", parents=[common], help="matched pair from an exact factorization")
    s.add_argument("path")
    s.add_argument("--index", type=int, help="use the n-th factorization listed by 'factorize'")
    s.add_argument("--G", type=_elements, help="comma-separated element indices")
    s.add_argument("--Gamma", type=_elements, help="comma-separated element indices")
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("zappa", parents=[common], help="Zappa–Szép product of a matched pair")
    s.add_argument("path")
    s.set_defaults(func=cmd_zappa)

    s = sub.add_parser("bicross", parents=[common], help="bicrossed product ring")
    s.add_argument("path", help="crossed action, or matched pair for the pointed case")
    s.set_defaults(func=cmd_bicross)

    s = sub.add_parser("equivariantize", parents=[common], help="crossed extension ring of a pointed crossed action")
    s.add_argument("path", help="crossed action, or matched pair for the pointed case")
    s.set_defaults(func=cmd_equivariantize)

    s = sub.add_parser("dual-gt", parents=[common], help="dual ring of vec_Sigma w.r.t. a subgroup")
    s.add_argument("path")
    s.add_argument("--H", type=_elements, required=True, help="comma-separated element indices")
    s.set_defaults(func=cmd_dual_gt)

    s = sub.add_parser("compare", parents=[common], help="based-ring isomorphism between two rings")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("theorem1", parents=[common], help="crossed extension vs dual model for a matched pair")
    s.add_argument("path")
    s.set_defaults(func=cmd_theorem1)
    return p


def _print_human(rep: RunReport, out) -> None:
    print(f"{rep.command}: {rep.status}", file=out)
    for f in rep.findings:
        if "error" in f:
            print(f"  error: {f['error']}", file=out)
        else:
            what = f.get("axiom") or f.get("check")
            print(f"  violation: {what}  witness={f.get('witness')}", file=out)
    if rep.result is not None and rep.command != "verify":
        print(json.dumps(_plain(rep.result), ensure_ascii=False), file=out)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    rep = RunReport(args.command)
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
    except SearchTimeout as exc:
        rep.status = "undecided"
        rep.findings = [{"check": "isomorphism search", "error": str(exc)}]
    except ValidationError as exc:
        rep.status = "input-error"
        rep.findings = [{"error": str(exc), "witness": _plain(exc.witness)}]
    except ZSFusionError as exc:
        rep.status = "input-error"
        rep.findings = [{"error": str(exc)}]
    rep.ms = None if args.no_timing else round((time.perf_counter() - t0) * 1000, 3)
    if args.json:
        print(json.dumps(_plain(rep.to_json()), ensure_ascii=False, sort_keys=True))
    else:
        _print_human(rep, sys.stdout)
    return EXIT[rep.status]


if __name__ == "__main__":
    sys.exit(main())
