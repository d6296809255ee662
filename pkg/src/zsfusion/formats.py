"""JSON documents for groups, matched pairs, fusion rings, gradings and crossed actions.

group           {"table": [[...]]} or {"permutations": [[2,1,3], ...]}, optional "names"
matched pair    {"G": group, "Gamma": group, "lact": [[...]], "ract": [[...]]}   tables [k][g]
fusion ring     {"rank": r, "unit": u, "dual": [...], "N": [[a,b,c,mult], ...]}, optional "labels"
grading         {"group": group, "deg": [...]}
crossed action  {"ring": ring, "matched_pair": mp, "grading": grading, "act": [[...]]}   [label][g]
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .crossact import CrossedActionData
from .errors import FormatError, ZSFusionError
from .fusring import FusionRing, Grading
from .grp import FiniteGroup, group_from_permutations, group_from_table
from .matched import MatchedPair

KINDS = ("group", "matched-pair", "fusion-ring", "crossed-action")


def _need(doc, key, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"{kind} document needs a {key!r} field")
    return doc[key]


def group_to_json(G: FiniteGroup) -> dict:
    out = {"table": G.table.tolist()}
    if G.names:
        out["names"] = list(G.names)
    return out


def group_from_json(doc) -> FiniteGroup:
    if not isinstance(doc, dict):
        raise FormatError("group document must be an object")
    names = doc.get("names")
    if "table" in doc:
        return group_from_table(doc["table"], names)
    if "permutations" in doc:
        try:
            gens = [[int(x) for x in p] for p in doc["permutations"]]
        except (TypeError, ValueError) as exc:
            raise FormatError(f"bad permutation list: {exc}") from None
        return group_from_permutations(gens)
    raise FormatError("group document needs 'table' or 'permutations'")


def matched_pair_to_json(mp: MatchedPair) -> dict:
    return {"G": group_to_json(mp.G), "Gamma": group_to_json(mp.Gamma),
            "lact": mp.lact.tolist(), "ract": mp.ract.tolist()}


def matched_pair_from_json(doc) -> MatchedPair:
    G = group_from_json(_need(doc, "G", "matched pair"))
    K = group_from_json(_need(doc, "Gamma", "matched pair"))
    try:
        lact = np.array(_need(doc, "lact", "matched pair"), dtype=np.int64)
        ract = np.array(_need(doc, "ract", "matched pair"), dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"action tables must be integer arrays: {exc}") from None
    return MatchedPair(G, K, lact, ract)


def ring_to_json(R: FusionRing) -> dict:
    triples = [[int(a), int(b), int(c), int(R.N[a, b, c])] for a, b, c in np.argwhere(R.N)]
    return {"rank": R.rank, "unit": R.unit, "dual": list(R.dual), "labels": list(R.labels),
            "N": triples}


def ring_from_json(doc) -> FusionRing:
    r = _need(doc, "rank", "fusion ring")
    unit = _need(doc, "unit", "fusion ring")
    dual = _need(doc, "dual", "fusion ring")
    if not isinstance(r, int) or r <= 0:
        raise FormatError("rank must be a positive integer")
    if not isinstance(dual, list) or len(dual) != r:
        raise FormatError(f"dual must list {r} labels")
    N = np.zeros((r, r, r), dtype=np.int64)
    for entry in _need(doc, "N", "fusion ring"):
        if not isinstance(entry, list) or len(entry) != 4:
            raise FormatError(f"N entries are [a, b, c, multiplicity], got {entry!r}")
        a, b, c, m = entry
        if not all(isinstance(x, int) and 0 <= x < r for x in (a, b, c)) or not isinstance(m, int):
            raise FormatError(f"bad N entry {entry!r}")
        N[a, b, c] = m
    if not isinstance(unit, int) or not 0 <= unit < r:
        raise FormatError("unit out of range")
    if not all(isinstance(x, int) and 0 <= x < r for x in dual):
        raise FormatError("dual entries out of range")
    return FusionRing(N, unit, dual, doc.get("labels"))


def grading_to_json(gr: Grading) -> dict:
    return {"group": group_to_json(gr.group), "deg": list(gr.deg)}


def grading_from_json(doc) -> Grading:
    G = group_from_json(_need(doc, "group", "grading"))
    deg = _need(doc, "deg", "grading")
    if not isinstance(deg, list) or not all(isinstance(x, int) and 0 <= x < G.n for x in deg):
        raise FormatError("grading degrees must be element indices")
    return Grading(G, tuple(deg))


def crossed_action_to_json(d: CrossedActionData) -> dict:
    return {"ring": ring_to_json(d.C), "matched_pair": matched_pair_to_json(d.mp),
            "grading": grading_to_json(d.grading), "act": d.act.tolist()}


def crossed_action_from_json(doc) -> CrossedActionData:
    C = ring_from_json(_need(doc, "ring", "crossed action"))
    mp = matched_pair_from_json(_need(doc, "matched_pair", "crossed action"))
    gr = grading_from_json(_need(doc, "grading", "crossed action"))
    try:
        act = np.array(_need(doc, "act", "crossed action"), dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"act must be an integer table: {exc}") from None
    return CrossedActionData(C, mp, gr, act)


def detect_kind(doc) -> str:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    if "act" in doc:
        return "crossed-action"
    if "lact" in doc or "ract" in doc:
        return "matched-pair"
    if "N" in doc:
        return "fusion-ring"
    if "table" in doc or "permutations" in doc:
        return "group"
    raise FormatError("cannot tell what kind of document this is")


_READERS = {"group": group_from_json, "matched-pair": matched_pair_from_json,
            "fusion-ring": ring_from_json, "crossed-action": crossed_action_from_json}


def parse(doc, kind: str | None = None):
    kind = kind or detect_kind(doc)
    if kind not in _READERS:
        raise FormatError(f"unknown kind {kind!r}")
    try:
        return kind, _READERS[kind](doc)
    except ZSFusionError:
        raise
    except (TypeError, ValueError, KeyError, IndexError) as exc:
        raise FormatError(f"malformed {kind} document: {exc}") from None


def load(path, kind: str | None = None):
    """Read a file and return ``(kind, object)``."""
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from None
    return parse(doc, kind)


def dump(obj) -> dict:
    if isinstance(obj, FiniteGroup):
        return group_to_json(obj)
    if isinstance(obj, MatchedPair):
        return matched_pair_to_json(obj)
    if isinstance(obj, FusionRing):
        return ring_to_json(obj)
    if isinstance(obj, CrossedActionData):
        return crossed_action_to_json(obj)
    if isinstance(obj, Grading):
        return grading_to_json(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")
