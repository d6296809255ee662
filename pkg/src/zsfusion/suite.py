"""The bundled test suite: small groups, their exact factorizations, and a few crossed actions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .crossact import CrossedActionData
from .fusring import tambara_yamagami
from .grp import (FiniteGroup, Subgroup, cyclic_group, direct_product, exact_factorizations,
                  group_from_permutations, group_from_table, trivial_subgroup, whole_group)
from .matched import MatchedPair, derive_matched_pair, trivial_matched_pair


def quaternion_group() -> FiniteGroup:
    """Q8 from unit quaternion arithmetic; order 1, -1, i, -i, j, -j, k, -k."""
    basis = {"1": (1, 0, 0, 0), "i": (0, 1, 0, 0), "j": (0, 0, 1, 0), "k": (0, 0, 0, 1)}
    els, names = [], []
    for b in "1ijk":
        for sign in (1, -1):
            els.append(tuple(sign * x for x in basis[b]))
            names.append(("" if sign > 0 else "-") + b)

    def qmul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    pos = {e: i for i, e in enumerate(els)}
    table = [[pos[qmul(p, q)] for q in els] for p in els]
    return group_from_table(table, names)


def suite_groups() -> dict[str, FiniteGroup]:
    z2 = cyclic_group(2)
    return {
        "Z6": cyclic_group(6),
        "S3": group_from_permutations([[2, 1, 3], [2, 3, 1]]),
        "D8": group_from_permutations([[2, 3, 4, 1], [4, 3, 2, 1]]),
        "Q8": quaternion_group(),
        "A4": group_from_permutations([[2, 3, 1, 4], [2, 1, 4, 3]]),
        "S4": group_from_permutations([[2, 1, 3, 4], [2, 3, 4, 1]]),
        "Z2xZ2": direct_product(z2, z2),
    }


@dataclass(frozen=True, eq=False)
class SuitePair:
    name: str
    S: FiniteGroup
    G: Subgroup
    Gamma: Subgroup
    mp: MatchedPair


def suite_matched_pairs() -> list[SuitePair]:
    out = []
    for name, S in suite_groups().items():
        for i, (G, K) in enumerate(exact_factorizations(S)):
            out.append(SuitePair(f"{name}#{i}", S, G, K, derive_matched_pair(S, G, K)))
    return out


def _pick(S: FiniteGroup, g_order: int, pred) -> tuple[Subgroup, Subgroup]:
    for G, K in exact_factorizations(S):
        if G.order == g_order and pred(G, K):
            return G, K
    raise LookupError("no factorization with the requested shape")


def _cyclic(H: Subgroup) -> bool:
    return any(H.parent.element_order(x) == H.order for x in H.elements)


def theorem_pairs() -> dict[str, MatchedPair]:
    """Matched pairs used for the crossed-extension vs dual-model comparison."""
    gs = suite_groups()
    S3, A4, S4 = gs["S3"], gs["A4"], gs["S4"]
    out = {}
    G, K = _pick(S3, 2, lambda G, K: True)
    out["S3=Z2.Z3"] = derive_matched_pair(S3, G, K)
    G, K = _pick(A4, 3, lambda G, K: True)
    out["A4=Z3.V4"] = derive_matched_pair(A4, G, K)
    G, K = _pick(S4, 4, lambda G, K: _cyclic(G) and not K.as_group().is_abelian())
    out["S4=Z4.S3"] = derive_matched_pair(S4, G, K)
    # controls: no G at all, and a direct product with both actions trivial
    out["trivial-G"] = derive_matched_pair(S3, trivial_subgroup(S3), whole_group(S3))
    out["Z2xZ3-trivial"] = trivial_matched_pair(cyclic_group(2), cyclic_group(3))
    return out


def ty_inversion_action(n: int) -> CrossedActionData:
    """Z2 acting on TY(Z_n) by a -> -a and m -> m; trivial matched pair with the Z2 grading."""
    A = cyclic_group(n)
    C = tambara_yamagami(A)
    grading = C.meta["grading"]
    mp = trivial_matched_pair(cyclic_group(2), grading.group)
    act = np.zeros((C.rank, 2), dtype=np.int64)
    act[:, 0] = np.arange(C.rank)
    act[:n, 1] = A.inv
    act[n, 1] = n
    return CrossedActionData(C, mp, grading, act)
