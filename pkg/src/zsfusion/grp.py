"""Finite groups given by multiplication tables.

Elements are the integers ``0..n-1`` and ``table[a][b]`` is the product
``a * b``. For permutation groups the product ``p * q`` means "apply ``p``,
then ``q``".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import ContainmentError, FormatError, SizeError, ValidationError

MAX_ORDER = 64


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    identity: int
    inv: tuple[int, ...]
    names: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return self.table.shape[0]

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def prod(self, *elems: int) -> int:
        x = self.identity
        for e in elems:
            x = int(self.table[x, e])
        return x

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def elements(self) -> range:
        return range(self.n)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def conjugacy_classes(self) -> list[list[int]]:
        seen = set()
        classes = []
        for a in range(self.n):
            if a in seen:
                continue
            cls = sorted({self.prod(self.inv[g], a, g) for g in range(self.n)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def generators(self) -> list[int]:
        """A small generating set, picked greedily."""
        gens: list[int] = []
        span = {self.identity}
        for a in range(self.n):
            if a not in span:
                gens.append(a)
                span = set(subgroup_generated(self, gens).elements)
            if len(span) == self.n:
                break
        return gens

    def regular_matrices(self) -> list[np.ndarray]:
        """Left-regular permutation matrices, L[g] e_x = e_{g x}."""
        mats = []
        for g in range(self.n):
            M = np.zeros((self.n, self.n))
            M[self.table[g], np.arange(self.n)] = 1.0
            mats.append(M)
        return mats

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.n})"


def group_from_table(table, names: Sequence[str] | None = None) -> FiniteGroup:
    try:
        T = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"table is not a rectangular integer array: {exc}") from None
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
        raise FormatError(f"table must be a non-empty square array, got shape {T.shape}")
    n = T.shape[0]
    if n > MAX_ORDER:
        raise SizeError(f"group order {n} exceeds {MAX_ORDER}")
    if T.min() < 0 or T.max() >= n:
        raise FormatError("table entries out of range")
    idx = np.arange(n)
    # associativity first so that a single corrupted entry is reported as a triple
    lhs = T[T]
    rhs = T[idx[:, None, None], T[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, b, c = (int(x) for x in bad[0])
        raise ValidationError(f"associativity fails at ({a}, {b}, {c})", witness=(a, b, c))
    for r in range(n):
        if len(set(T[r].tolist())) != n or len(set(T[:, r].tolist())) != n:
            raise FormatError(f"table is not a Latin square (row/column {r})")
    ids = [e for e in range(n) if np.array_equal(T[e], idx) and np.array_equal(T[:, e], idx)]
    if not ids:
        raise FormatError("no identity element")
    e = ids[0]
    inv = tuple(int(np.nonzero(T[a] == e)[0][0]) for a in range(n))
    for a in range(n):
        if T[inv[a], a] != e:
            raise FormatError(f"element {a} has no two-sided inverse")
    if names is not None:
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise FormatError("names must have one entry per element")
    T.setflags(write=False)
    return FiniteGroup(T, e, inv, names)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # p then q
    return tuple(q[p[i]] for i in range(len(p)))


def group_from_permutations(generators: Iterable[Sequence[int]],
                            cap: int = MAX_ORDER) -> FiniteGroup:
    """Close permutations (1-based image lists) under composition."""
    gens = [tuple(int(x) - 1 for x in g) for g in generators]
    degree = max((len(g) for g in gens), default=1)
    gens = [g + tuple(range(len(g), degree)) for g in gens]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise FormatError(f"not a permutation: {[x + 1 for x in g]}")
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = _compose(p, g)
            if q not in index:
                if len(elems) >= cap:
                    raise SizeError(f"closure exceeds {cap} elements")
                index[q] = len(elems)
                elems.append(q)
                queue.append(q)
    table = [[index[_compose(p, q)] for q in elems] for p in elems]
    names = ["".join(str(x + 1) for x in p) for p in elems]
    return group_from_table(table, names)


def perm_from_cycles(cycles: Sequence[Sequence[int]], degree: int) -> list[int]:
    """1-based image list of a product of disjoint cycles, e.g. [(1, 2, 3)]."""
    img = list(range(1, degree + 1))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x - 1] = cyc[(i + 1) % len(cyc)]
    return img


def cyclic_group(n: int) -> FiniteGroup:
    return group_from_table([[(a + b) % n for b in range(n)] for a in range(n)])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Element (g, h) has index g * |H| + h."""
    m = H.n
    table = [[G.mul(a // m, b // m) * m + H.mul(a % m, b % m)
              for b in range(G.n * m)] for a in range(G.n * m)]
    return group_from_table(table)


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a in self._members

    @property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def position(self, a: int) -> int:
        return self.elements.index(a)

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group; element i is ``elements[i]``."""
        pos = {a: i for i, a in enumerate(self.elements)}
        table = [[pos[self.parent.mul(a, b)] for b in self.elements] for a in self.elements]
        names = None
        if self.parent.names:
            names = [self.parent.names[a] for a in self.elements]
        return group_from_table(table, names)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.elements == self.elements)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, elements={list(self.elements)})"


def make_subgroup(G: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    """Validate that ``elems`` is a subgroup of ``G``."""
    s = sorted(set(int(a) for a in elems))
    members = set(s)
    if any(a < 0 or a >= G.n for a in s):
        raise ContainmentError("element index out of range")
    if G.identity not in members:
        raise ContainmentError("subset does not contain the identity")
    for a in s:
        if G.inv[a] not in members:
            raise ContainmentError(f"not closed under inverses at {a}", witness=(a,))
        for b in s:
            if G.mul(a, b) not in members:
                raise ContainmentError(f"not closed under products at ({a}, {b})", witness=(a, b))
    return Subgroup(G, tuple(s))


def subgroup_generated(G: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    gens = [int(a) for a in elems]
    for a in gens:
        if a < 0 or a >= G.n:
            raise IndexError(f"element {a} out of range")
    span = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in span:
                    span.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(sorted(span)))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.n)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (G.identity,))


@dataclass(frozen=True)
class DoubleCoset:
    elements: tuple[int, ...]
    rep: int
    stabilizer: Subgroup


def double_cosets(S: FiniteGroup, H: Subgroup) -> list[DoubleCoset]:
    """Partition of ``S`` into double cosets ``H s H``.

    Each part carries its smallest element as representative and the
    subgroup ``H ∩ s H s^-1``.
    """
    make_subgroup(S, H.elements)
    seen = set()
    parts = []
    members = set(H.elements)
    for s in range(S.n):
        if s in seen:
            continue
        part = sorted({S.prod(a, s, b) for a in H.elements for b in H.elements})
        seen.update(part)
        stab = tuple(a for a in H.elements if S.prod(S.inv[s], a, s) in members)
        parts.append(DoubleCoset(tuple(part), s, Subgroup(S, stab)))
    return parts


def subgroups(G: FiniteGroup, max_generators: int = 2) -> list[Subgroup]:
    """Subgroups generated by at most ``max_generators`` elements, plus ``G``.

    Complete for groups whose subgroups all need at most that many
    generators; the bundled suite satisfies this with the default of 2.
    """
    if not 1 <= max_generators <= 3:
        raise ValueError("max_generators must be 1, 2 or 3")
    if G.n > MAX_ORDER:
        raise SizeError(f"group order {G.n} exceeds {MAX_ORDER}")
    found: dict[tuple[int, ...], Subgroup] = {}
    for a in range(G.n):
        H = subgroup_generated(G, [a])
        found.setdefault(H.elements, H)
    for k in range(2, max_generators + 1):
        for gens in combinations(range(G.n), k):
            H = subgroup_generated(G, gens)
            found.setdefault(H.elements, H)
    found.setdefault(tuple(range(G.n)), whole_group(G))
    return sorted(found.values(), key=lambda H: (H.order, H.elements))


def exact_factorizations(S: FiniteGroup, max_generators: int = 2) -> list[tuple[Subgroup, Subgroup]]:
    """Ordered pairs (G, Gamma) with G ∩ Gamma = {e} and |G||Gamma| = |S|."""
    subs = subgroups(S, max_generators)
    out = []
    for G in subs:
        if S.n % G.order:
            continue
        for K in subs:
            if G.order * K.order != S.n:
                continue
            if set(G.elements) & set(K.elements) == {S.identity}:
                out.append((G, K))
    return out
