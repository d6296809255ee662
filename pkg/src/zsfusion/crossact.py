"""(G, Gamma)-crossed actions on fusion rings, strictified to label level.

``act[a][g]`` is the label ``a ◁ g``. All coherence isomorphisms are taken to
be identities, so only their existence constraints on N are checked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AxiomError, FormatError
from .fusring import FusionRing, Grading, group_ring, verify_grading
from .grp import FiniteGroup
from .matched import MatchedPair, verify_matched_pair


@dataclass(frozen=True, eq=False)
class CrossedActionData:
    C: FusionRing
    mp: MatchedPair
    grading: Grading
    act: np.ndarray   # [label][g] -> label

    def __post_init__(self):
        act = np.asarray(self.act, dtype=np.int64)
        shape = (self.C.rank, self.mp.G.n)
        if act.shape != shape:
            raise FormatError(f"act must have shape {shape}, got {act.shape}")
        if act.min() < 0 or act.max() >= self.C.rank:
            raise FormatError("act entries out of range")
        object.__setattr__(self, "act", act)
        if self.grading.group.n != self.mp.Gamma.n or len(self.grading.deg) != self.C.rank:
            raise FormatError("grading must be by Gamma with one degree per label")

    @property
    def G(self) -> FiniteGroup:
        return self.mp.G

    @property
    def Gamma(self) -> FiniteGroup:
        return self.mp.Gamma

    def deg(self, a: int) -> int:
        return self.grading.deg[a]


def pointed_crossed_action(mp: MatchedPair) -> CrossedActionData:
    """C = group ring of Gamma, graded by itself, with G acting by ◀."""
    C = group_ring(mp.Gamma)
    grading = Grading(mp.Gamma, tuple(range(mp.Gamma.n)))
    return CrossedActionData(C, mp, grading, mp.ract.copy())


def trivial_crossed_action(C: FusionRing, grading: Grading, G: FiniteGroup) -> CrossedActionData:
    from .matched import trivial_matched_pair
    mp = trivial_matched_pair(G, grading.group)
    act = np.tile(np.arange(C.rank)[:, None], (1, G.n))
    return CrossedActionData(C, mp, grading, act)


def verify_crossed_action(d: CrossedActionData) -> list[dict]:
    out = []

    def report(axiom, witness):
        out.append({"axiom": axiom, "witness": tuple(int(x) for x in witness)})

    for item in verify_matched_pair(d.mp):
        out.append({"axiom": "matched pair: " + item["axiom"], "witness": item["witness"]})
    for item in verify_grading(d.C, d.grading):
        out.append({"axiom": "grading: " + item["axiom"], "witness": item["witness"]})
    if out:
        return out
    C, G, act = d.C, d.G, d.act
    r = C.rank
    for a in range(r):
        if act[a, G.identity] != a:
            report("a ◁ e = a", (a,))
        for g in range(G.n):
            for h in range(G.n):
                if act[act[a, g], h] != act[a, G.mul(g, h)]:
                    report("(a ◁ g) ◁ h = a ◁ gh", (a, g, h))
    for g in range(G.n):
        if act[C.unit, g] != C.unit:
            report("unit ◁ g = unit", (g,))
        for a in range(r):
            if d.deg(act[a, g]) != d.mp.right(d.deg(a), g):
                report("deg(a ◁ g) = deg(a) ◀ g", (a, g))
    N = C.N
    for g in range(G.n):
        for b in range(r):
            h = d.mp.left(d.deg(b), g)
            # N[a][b][c] = N[a ◁ (deg(b) ▶ g)][b ◁ g][c ◁ g]
            moved = N[np.ix_(act[:, h], [act[b, g]], act[:, g])][:, 0, :]
            bad = np.argwhere(N[:, b, :] != moved)
            for a, c in bad:
                report("twisted multiplicativity: N[a][b][c] = N[a◁(|b|▶g)][b◁g][c◁g]",
                       (a, b, c, g))
    for g in range(G.n):
        for a in range(r):
            h = d.mp.left(d.deg(C.dual[a]), g)
            if C.dual[act[a, h]] != act[C.dual[a], g]:
                report("dual compatibility: (a ◁ (|a*| ▶ g))* = a* ◁ g", (a, g))
    return out


def is_automorphism_action(d: CrossedActionData) -> bool:
    """Each ``- ◁ g`` is a based-ring automorphism (label permutation preserving N)."""
    N = d.C.N
    for g in range(d.G.n):
        p = d.act[:, g]
        if sorted(p.tolist()) != list(range(d.C.rank)):
            return False
        if not np.array_equal(N, N[np.ix_(p, p, p)]):
            return False
    return True


@dataclass(frozen=True, eq=False)
class FusionMatchedPair:
    """Matched pair (vec_G, C): labels of vec_G are elements of G.

    ``left[k][g]`` is k ▷ g (equal to k ▶ g) and ``right[a][g]`` is a ◁ g.
    The remaining structure maps are identities.
    """

    G: FiniteGroup
    Gamma: FiniteGroup
    left: np.ndarray
    right: np.ndarray
    gamma_identity: bool = True
    eta_identity: bool = True
    gamma0_identity: bool = True
    eta0_identity: bool = True


def matched_pair_fc(d: CrossedActionData) -> FusionMatchedPair:
    bad = verify_crossed_action(d)
    if bad:
        raise AxiomError(f"invalid crossed action: {bad[0]['axiom']} at {bad[0]['witness']}",
                         witness=bad[0])
    return FusionMatchedPair(d.G, d.Gamma, d.mp.lact.copy(), d.act.copy())
