"""Bicrossed product rings K(vec_G ⋈ C) and exact-factorization checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .crossact import CrossedActionData, verify_crossed_action
from .errors import AxiomError, SubringError, ValidationError
from .fusring import FusionRing, fpdim, solve_duals, validate_fusion_ring


@dataclass(frozen=True, eq=False)
class BicrossedRing:
    ring: FusionRing
    provenance: CrossedActionData

    def index(self, g: int, a: int) -> int:
        return g * self.provenance.C.rank + a

    def group_labels(self) -> list[int]:
        C = self.provenance.C
        return [self.index(g, C.unit) for g in range(self.provenance.G.n)]

    def base_labels(self) -> list[int]:
        return [self.index(self.provenance.G.identity, a) for a in range(self.provenance.C.rank)]


def bicrossed_ring(d: CrossedActionData, check: bool = True) -> BicrossedRing:
    """N[(g,a)][(g',a')][(h,c)] = δ(h, g (|a| ▶ g')) N_C[a ◁ g'][a'][c].

    Label (g, a) has index ``g * rank(C) + a``.
    """
    bad = verify_crossed_action(d)
    if bad:
        raise AxiomError(f"invalid crossed action: {bad[0]['axiom']} at {bad[0]['witness']}",
                         witness=bad[0])
    G, C = d.G, d.C
    r = C.rank
    n = G.n * r
    N = np.zeros((n, n, n), dtype=np.int64)
    for g in range(G.n):
        for a in range(r):
            x = g * r + a
            for g2 in range(G.n):
                h = G.mul(g, d.mp.left(d.deg(a), g2))
                moved = C.N[d.act[a, g2]]          # [a', c]
                N[x, g2 * r:(g2 + 1) * r, h * r:(h + 1) * r] = moved
    unit = G.identity * r + C.unit
    dual = solve_duals(N, unit)
    labels = [f"{G.name(g)}⋈{C.label(a)}" for g in range(G.n) for a in range(r)]
    ring = FusionRing(N, unit, dual, labels)
    if check:
        bad = validate_fusion_ring(ring)
        if bad:
            raise ValidationError(f"bicrossed ring fails {bad[0]['axiom']} at {bad[0]['witness']}",
                                  witness=bad[0])
    return BicrossedRing(ring, d)


def _check_closed(B: FusionRing, labels: Sequence[int], name: str) -> None:
    inside = set(labels)
    if B.unit not in inside:
        raise SubringError(f"{name} does not contain the unit")
    for a in labels:
        for b in labels:
            out = set(np.nonzero(B.N[a, b])[0].tolist())
            if not out <= inside:
                raise SubringError(f"{name} is not closed under ⊗ at ({B.label(a)}, {B.label(b)})",
                                   witness=(a, b))


def verify_exact_factorization(B: FusionRing, A_labels: Sequence[int],
                               C_labels: Sequence[int], tol: float = 1e-6) -> list[dict]:
    A_labels, C_labels = list(A_labels), list(C_labels)
    _check_closed(B, A_labels, "A")
    _check_closed(B, C_labels, "C")
    out = []
    common = sorted(set(A_labels) & set(C_labels))
    if common != [B.unit]:
        out.append({"check": "A ∩ C = {unit}", "witness": tuple(common)})
    d = fpdim(B).dims
    tot = sum(x * x for x in d)
    fa = sum(d[a] ** 2 for a in A_labels)
    fc = sum(d[c] ** 2 for c in C_labels)
    if abs(tot - fa * fc) > tol:
        out.append({"check": "FPdim(B) = FPdim(A) FPdim(C)", "witness": (tot, fa * fc)})
    hit = np.zeros(B.rank, dtype=bool)
    for a in A_labels:
        for c in C_labels:
            hit |= B.N[a, c] > 0
    if not hit.all():
        out.append({"check": "every label occurs in some a ⊗ c",
                    "witness": tuple(int(x) for x in np.nonzero(~hit)[0])})
    return out
