"""Matched pairs of groups and Zappa–Szép products.

A matched pair ``(G, Gamma, lact, ract)`` stores the left action of Gamma on
the set G as ``lact[k][g]`` and the right action of G on the set Gamma as
``ract[k][g]``. The product of the Zappa–Szép group on G x Gamma is

    (h, k)(g, t) = (h (k ▶ g), (k ◀ g) t)

and pair ``(g, k)`` gets index ``g * |Gamma| + k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AxiomError, FactorizationError, FormatError
from .grp import FiniteGroup, Subgroup, group_from_table, make_subgroup


@dataclass(frozen=True, eq=False)
class MatchedPair:
    G: FiniteGroup
    Gamma: FiniteGroup
    lact: np.ndarray   # [k][g] -> element of G
    ract: np.ndarray   # [k][g] -> element of Gamma

    def __post_init__(self):
        shape = (self.Gamma.n, self.G.n)
        for name in ("lact", "ract"):
            arr = np.asarray(getattr(self, name), dtype=np.int64)
            if arr.shape != shape:
                raise FormatError(f"{name} must have shape {shape}, got {arr.shape}")
            object.__setattr__(self, name, arr)
        if self.lact.min() < 0 or self.lact.max() >= self.G.n:
            raise FormatError("lact entries out of range")
        if self.ract.min() < 0 or self.ract.max() >= self.Gamma.n:
            raise FormatError("ract entries out of range")

    def left(self, k: int, g: int) -> int:
        return int(self.lact[k, g])

    def right(self, k: int, g: int) -> int:
        return int(self.ract[k, g])

    def pair_index(self, g: int, k: int) -> int:
        return g * self.Gamma.n + k

    def is_trivial(self) -> bool:
        g_idx = np.arange(self.G.n)[None, :]
        k_idx = np.arange(self.Gamma.n)[:, None]
        return bool((self.lact == g_idx).all() and (self.ract == k_idx).all())


def trivial_matched_pair(G: FiniteGroup, Gamma: FiniteGroup) -> MatchedPair:
    lact = np.tile(np.arange(G.n), (Gamma.n, 1))
    ract = np.tile(np.arange(Gamma.n)[:, None], (1, G.n))
    return MatchedPair(G, Gamma, lact, ract)


def derive_matched_pair(S: FiniteGroup, G: Subgroup, Gamma: Subgroup) -> MatchedPair:
    """Read off the actions from the unique factorization k·g = g'·k' in S."""
    G = make_subgroup(S, G.elements)
    Gamma = make_subgroup(S, Gamma.elements)
    common = set(G.elements) & set(Gamma.elements)
    if len(common) != 1 or G.order * Gamma.order != S.n:
        raise FactorizationError(
            f"not an exact factorization: |G ∩ Gamma| = {len(common)}, "
            f"|G||Gamma| = {G.order * Gamma.order}, |S| = {S.n}",
            witness=sorted(common))
    split = {}
    for i, g in enumerate(G.elements):
        for j, k in enumerate(Gamma.elements):
            split[S.mul(g, k)] = (i, j)
    lact = np.zeros((Gamma.order, G.order), dtype=np.int64)
    ract = np.zeros((Gamma.order, G.order), dtype=np.int64)
    for j, k in enumerate(Gamma.elements):
        for i, g in enumerate(G.elements):
            lact[j, i], ract[j, i] = split[S.mul(k, g)]
    mp = MatchedPair(G.as_group(), Gamma.as_group(), lact, ract)
    return mp


def verify_matched_pair(mp: MatchedPair) -> list[dict]:
    """All violated axioms, each with a witness tuple; empty means valid."""
    G, K = mp.G, mp.Gamma
    L, R = mp.lact, mp.ract
    out = []

    def report(axiom, witness):
        out.append({"axiom": axiom, "witness": tuple(int(x) for x in witness)})

    for g in range(G.n):
        if L[K.identity, g] != g:
            report("left action identity: e ▶ g = g", (g,))
    for k in range(K.n):
        if R[k, G.identity] != k:
            report("right action identity: k ◀ e = k", (k,))
        if L[k, G.identity] != G.identity:
            report("unit: k ▶ e = e", (k,))
    for g in range(G.n):
        if R[K.identity, g] != K.identity:
            report("unit: e ◀ g = e", (g,))
    for k in range(K.n):
        for t in range(K.n):
            kt = K.mul(k, t)
            for g in range(G.n):
                if L[kt, g] != L[k, L[t, g]]:
                    report("left action: (kt) ▶ g = k ▶ (t ▶ g)", (k, t, g))
                lhs = R[kt, g]
                rhs = K.mul(R[k, L[t, g]], R[t, g])
                if lhs != rhs:
                    report("compatibility 1: (kt) ◀ g = (k ◀ (t ▶ g))(t ◀ g)", (k, t, g))
    for k in range(K.n):
        for g in range(G.n):
            for h in range(G.n):
                gh = G.mul(g, h)
                if R[k, gh] != R[R[k, g], h]:
                    report("right action: k ◀ (gh) = (k ◀ g) ◀ h", (k, g, h))
                lhs = L[k, gh]
                rhs = G.mul(L[k, g], L[R[k, g], h])
                if lhs != rhs:
                    report("compatibility 2: k ▶ (gh) = (k ▶ g)((k ◀ g) ▶ h)", (k, g, h))
    return out


def zappa_szep(mp: MatchedPair) -> FiniteGroup:
    bad = verify_matched_pair(mp)
    if bad:
        raise AxiomError(f"invalid matched pair: {bad[0]['axiom']} at {bad[0]['witness']}",
                         witness=bad[0])
    G, K = mp.G, mp.Gamma
    m = K.n
    n = G.n * m
    table = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        h, k = divmod(a, m)
        for b in range(n):
            g, t = divmod(b, m)
            table[a, b] = G.mul(h, mp.left(k, g)) * m + K.mul(mp.right(k, g), t)
    names = None
    if G.names or K.names:
        names = [f"({G.name(a // m)},{K.name(a % m)})" for a in range(n)]
    return group_from_table(table, names)


def product_map_is_isomorphism(S: FiniteGroup, G: Subgroup, Gamma: Subgroup,
                               Z: FiniteGroup) -> bool:
    """Whether (g, k) -> g·k is an isomorphism from Z = zappa_szep(...) onto S."""
    m = Gamma.order
    phi = [S.mul(G.elements[a // m], Gamma.elements[a % m]) for a in range(Z.n)]
    if len(set(phi)) != S.n:
        return False
    return all(phi[Z.mul(a, b)] == S.mul(phi[a], phi[b])
               for a in range(Z.n) for b in range(Z.n))
