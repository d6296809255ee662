"""Fusion rings (based rings): validation, FP-dimensions, gradings,
standard constructions and based-ring isomorphism search.

``N[a, b, c]`` is the multiplicity of ``c`` in ``a ⊗ b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (DomainError, NumericError, RigidityError, SearchTimeout,
                     SizeError, ValidationError)
from .grp import FiniteGroup, group_from_table
from .numlin import round_int, split_commutant

MAX_RANK = 64
FP_TOL = 1e-12
FP_MAX_ITER = 100_000


@dataclass(frozen=True, eq=False)
class FusionRing:
    N: np.ndarray
    unit: int
    dual: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        N = np.asarray(self.N, dtype=np.int64)
        if N.ndim != 3 or len(set(N.shape)) != 1:
            raise ValueError(f"N must be a cube, got shape {N.shape}")
        if N.shape[0] > MAX_RANK:
            raise SizeError(f"rank {N.shape[0]} exceeds {MAX_RANK}")
        N.setflags(write=False)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "dual", tuple(int(x) for x in self.dual))
        if len(self.dual) != N.shape[0]:
            raise ValueError("dual must have one entry per label")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def rank(self) -> int:
        return self.N.shape[0]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def product(self, a: int, b: int) -> dict[int, int]:
        row = self.N[a, b]
        return {int(c): int(row[c]) for c in np.nonzero(row)[0]}

    def with_N(self, N) -> "FusionRing":
        return FusionRing(np.array(N), self.unit, self.dual, self.labels, dict(self.meta))

    def opposite(self) -> "FusionRing":
        return FusionRing(self.N.transpose(1, 0, 2), self.unit, self.dual, self.labels)

    def subring(self, labels: Sequence[int]) -> "FusionRing":
        """Restriction to a ⊗-closed, dual-closed label subset (in the given order)."""
        idx = list(labels)
        pos = {a: i for i, a in enumerate(idx)}
        if self.unit not in pos:
            raise ValueError("subset must contain the unit")
        rest = [c for c in range(self.rank) if c not in pos]
        for a in idx:
            if self.dual[a] not in pos:
                raise ValueError(f"subset not closed under duals at {self.label(a)}")
            for b in idx:
                if rest and self.N[a, b, rest].any():
                    raise ValueError(f"subset not closed under ⊗ at ({self.label(a)}, {self.label(b)})")
        N = self.N[np.ix_(idx, idx, idx)]
        labels = [self.label(a) for a in idx]
        return FusionRing(N, pos[self.unit], [pos[self.dual[a]] for a in idx], labels)


def solve_duals(N: np.ndarray, unit: int) -> list[int]:
    """For each x the unique y with N[x, y, unit] = 1, else a rigidity error."""
    out = []
    for x in range(N.shape[0]):
        ys = np.nonzero(N[x, :, unit])[0]
        if len(ys) != 1 or N[x, ys[0], unit] != 1:
            raise RigidityError(f"label {x} has no unique dual (candidates {ys.tolist()})",
                                witness=(x,))
        out.append(int(ys[0]))
    return out


def validate_fusion_ring(R: FusionRing) -> list[dict]:
    out = []

    def report(axiom, witness):
        out.append({"axiom": axiom, "witness": tuple(int(x) for x in witness)})

    N, u, r = R.N, R.unit, R.rank
    if not 0 <= u < r:
        report("unit index in range", (u,))
        return out
    if (N < 0).any():
        report("nonnegative coefficients", tuple(np.argwhere(N < 0)[0]))
    eye = np.eye(r, dtype=np.int64)
    bad = np.argwhere(N[u] != eye)
    if len(bad):
        report("left unit: N[1][b][c] = δ(b,c)", bad[0])
    bad = np.argwhere(N[:, u, :] != eye)
    if len(bad):
        report("right unit: N[a][1][c] = δ(a,c)", bad[0])
    d = R.dual
    if any(not 0 <= x < r for x in d):
        report("dual labels in range", (next(a for a in range(r) if not 0 <= d[a] < r),))
        return out
    for a in range(r):
        if d[d[a]] != a:
            report("dual is an involution", (a,))
    if d[u] != u:
        report("dual(unit) = unit", (u,))
    expected = np.zeros((r, r), dtype=np.int64)
    expected[np.arange(r), list(d)] = 1
    bad = np.argwhere(N[:, :, u] != expected)
    if len(bad):
        report("dual pairing: N[a][b][1] = δ(b, a*)", bad[0])
    for a, b, c, dd in associativity_violations(N, limit=1):
        report("associativity: (a⊗b)⊗c = a⊗(b⊗c)", (a, b, c, dd))
    return out


def associativity_violations(N: np.ndarray, limit: int | None = None) -> list[tuple]:
    """Exhaustive scan of Σ_x N[a,b,x] N[x,c,d] = Σ_y N[b,c,y] N[a,y,d]."""
    r = N.shape[0]
    out = []
    for a in range(r):
        lhs = np.einsum("bx,xcd->bcd", N[a], N)
        rhs = np.einsum("bcy,yd->bcd", N, N[a])
        bad = np.argwhere(lhs != rhs)
        for b, c, d in bad:
            out.append((a, int(b), int(c), int(d)))
            if limit is not None and len(out) >= limit:
                return out
    return out


@dataclass(frozen=True)
class FPDims:
    dims: tuple[float, ...]
    total: float


def fpdim(R: FusionRing, tol: float = FP_TOL, max_iter: int = FP_MAX_ITER) -> FPDims:
    """Perron–Frobenius dimensions by power iteration on Σ_a N_a."""
    M = R.N.sum(axis=0).astype(float)
    v = np.ones(R.rank) / np.sqrt(R.rank)
    prev = np.inf
    for _ in range(max_iter):
        w = M @ v
        lam = np.linalg.norm(w)
        if lam == 0.0:
            raise NumericError("zero fusion matrix")
        w /= lam
        step = np.linalg.norm(w - v)
        v = w
        # keep iterating past tol while the iterate still improves
        if step <= 1e-15 or (np.linalg.norm(M @ v - lam * v) <= tol * lam and step >= prev):
            break
        prev = step
    else:
        raise NumericError(f"power iteration did not converge in {max_iter} steps")
    d = v / v[R.unit]
    lhs = np.einsum("a,b->ab", d, d)
    rhs = np.einsum("abc,c->ab", R.N, d)
    if np.abs(lhs - rhs).max() > 1e-9 * max(1.0, float(np.abs(rhs).max())):
        raise NumericError("FP-dimensions do not satisfy d(a)d(b) = Σ N[a][b][c] d(c)")
    d = np.round(d, 12)
    return FPDims(tuple(float(x) for x in d), round(float(np.sum(d ** 2)), 12))


@dataclass(frozen=True, eq=False)
class Grading:
    group: FiniteGroup
    deg: tuple[int, ...]


def verify_grading(R: FusionRing, grading: Grading) -> list[dict]:
    out = []
    G, deg = grading.group, grading.deg
    if len(deg) != R.rank:
        return [{"axiom": "one degree per label", "witness": (len(deg),)}]
    if deg[R.unit] != G.identity:
        out.append({"axiom": "deg(unit) = e", "witness": (R.unit,)})
    for a in range(R.rank):
        if deg[R.dual[a]] != G.inv[deg[a]]:
            out.append({"axiom": "deg(a*) = deg(a)^-1", "witness": (a,)})
    for a, b, c in np.argwhere(R.N > 0):
        if deg[c] != G.mul(deg[a], deg[b]):
            out.append({"axiom": "N[a][b][c] > 0 implies deg(c) = deg(a)deg(b)",
                        "witness": (int(a), int(b), int(c))})
    missing = sorted(set(range(G.n)) - set(deg))
    if missing:
        out.append({"axiom": "faithful: every degree occurs", "witness": tuple(missing)})
    return out


def universal_grading(R: FusionRing) -> tuple[FiniteGroup, Grading]:
    r = R.rank
    adj = {R.unit}
    for a in range(r):
        adj.update(np.nonzero(R.N[a, R.dual[a]])[0].tolist())
    frontier = list(adj)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(adj):
                for c in np.nonzero(R.N[x, y] + R.N[y, x])[0].tolist():
                    if c not in adj:
                        adj.add(c)
                        nxt.append(c)
        frontier = nxt
    adj_list = sorted(adj)
    comp_of = [-1] * r
    comps: list[list[int]] = []
    for a in range(r):
        if comp_of[a] >= 0:
            continue
        members = sorted(set(np.nonzero(R.N[a][adj_list].sum(axis=0))[0].tolist()))
        for c in members:
            if comp_of[c] >= 0 and comp_of[c] != len(comps):
                raise ValidationError("components of the adjoint action overlap", witness=(a, c))
            comp_of[c] = len(comps)
        comps.append(members)
    k = len(comps)
    table = [[-1] * k for _ in range(k)]
    for i, ci in enumerate(comps):
        for j, cj in enumerate(comps):
            targets = set()
            for a in ci:
                for b in cj:
                    targets.update(comp_of[c] for c in np.nonzero(R.N[a, b])[0])
            if len(targets) != 1:
                raise ValidationError("grading product not well defined", witness=(i, j))
            table[i][j] = targets.pop()
    group = group_from_table(table)
    grading = Grading(group, tuple(comp_of))
    if verify_grading(R, grading):
        raise ValidationError("universal grading failed its own checks")
    return group, grading


def group_ring(G: FiniteGroup) -> FusionRing:
    n = G.n
    N = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        N[a, np.arange(n), G.table[a]] = 1
    labels = [G.name(a) for a in range(n)]
    return FusionRing(N, G.identity, G.inv, labels)


def tambara_yamagami(A: FiniteGroup) -> FusionRing:
    """Labels are the elements of A followed by m (index |A|)."""
    if not A.is_abelian():
        raise DomainError("Tambara–Yamagami rings need an abelian group")
    n = A.n
    r = n + 1
    m = n
    N = np.zeros((r, r, r), dtype=np.int64)
    for a in range(n):
        N[a, np.arange(n), A.table[a]] = 1
        N[a, m, m] = 1
        N[m, a, m] = 1
    N[m, m, :n] = 1
    z2 = group_from_table([[0, 1], [1, 0]])
    grading = Grading(z2, tuple([0] * n + [1]))
    labels = [A.name(a) for a in range(n)] + ["m"]
    return FusionRing(N, A.identity, list(A.inv) + [m], labels, {"grading": grading})


@dataclass(frozen=True)
class CharacterTable:
    classes: tuple[tuple[int, ...], ...]
    chars: np.ndarray   # rows: irreducible characters, columns: classes

    @property
    def degrees(self) -> list[int]:
        return [int(round(x.real)) for x in self.chars[:, 0]]


def character_table(G: FiniteGroup, seed: int = 0) -> CharacterTable:
    """Irreducible characters from the class-sum algebra.

    Left multiplication by each class sum on the centre of the group algebra
    is split into one-dimensional blocks with ``split_commutant``; each block
    is a common eigenvector, whose eigenvalues are the central characters.
    """
    classes = sorted(G.conjugacy_classes(), key=lambda c: (G.identity not in c, c[0]))
    k = len(classes)
    cls_of = np.empty(G.n, dtype=np.int64)
    for i, c in enumerate(classes):
        cls_of[c] = i
    sizes = np.array([len(c) for c in classes], dtype=float)
    # a[i, j, l] = #{(x, y) in K_i x K_j : x y = z_l} for a fixed z_l in K_l
    a = np.zeros((k, k, k))
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            for x in ci:
                for y in cj:
                    a[i, j, cls_of[G.mul(x, y)]] += 1
    a /= sizes[None, None, :]
    scale = np.sqrt(sizes)
    mats = [a[i].T * scale[:, None] / scale[None, :] for i in range(k)]
    split = split_commutant(mats, seed=seed)
    if split.dims != [1] * k:
        raise NumericError(f"class algebra split into blocks {split.dims}, expected {k} lines")
    chars = []
    for _, B in split.blocks:
        v = B[:, 0]
        omega = np.array([v.conj() @ M @ v for M in mats])
        deg2 = G.n / np.sum(np.abs(omega) ** 2 / sizes)
        deg = round_int(np.sqrt(deg2))
        chars.append(omega * deg / sizes)
    chars = np.array(chars)

    def key(row):
        return (int(round(row[0].real)),) + tuple(
            v for z in row for v in (-round(z.real, 6) + 0.0, -round(z.imag, 6) + 0.0))

    order = sorted(range(k), key=lambda i: key(chars[i]))
    chars = chars[order]
    if abs(np.sum(np.abs(chars[:, 0]) ** 2) - G.n) > 1e-6:
        raise NumericError("degrees do not satisfy Σ deg² = |G|")
    return CharacterTable(tuple(tuple(c) for c in classes), chars)


def rep_ring(G: FiniteGroup, seed: int = 0) -> FusionRing:
    ct = character_table(G, seed)
    sizes = np.array([len(c) for c in ct.classes], dtype=float)
    X = ct.chars
    k = X.shape[0]
    raw = np.einsum("ai,bi,ci,i->abc", X, X, X.conj(), sizes) / G.n
    N = np.zeros((k, k, k), dtype=np.int64)
    for idx in np.ndindex(k, k, k):
        N[idx] = round_int(raw[idx])
    if np.abs(raw - N).max() > 1e-6:
        raise NumericError("character products are not integral")
    dual = []
    for a in range(k):
        conj = [b for b in range(k) if np.allclose(X[b], X[a].conj(), atol=1e-6)]
        dual.append(conj[0])
    labels = [f"χ{a}[{int(round(X[a, 0].real))}]" for a in range(k)]
    return FusionRing(N, 0, dual, labels, {"characters": ct})


@dataclass(frozen=True)
class BasedRingIso:
    perm: tuple[int, ...]
    via_dual: bool = False


def is_based_iso(R1: FusionRing, R2: FusionRing, perm: Sequence[int]) -> bool:
    p = list(perm)
    if sorted(p) != list(range(R2.rank)) or R1.rank != R2.rank:
        return False
    if p[R1.unit] != R2.unit:
        return False
    if any(p[R1.dual[a]] != R2.dual[p[a]] for a in range(R1.rank)):
        return False
    return bool(np.array_equal(R1.N, R2.N[np.ix_(p, p, p)]))


def _fingerprints(R: FusionRing) -> list[tuple]:
    fp = fpdim(R).dims
    rows = R.N.sum(axis=2)
    out = []
    for a in range(R.rank):
        out.append((round(fp[a], 6), R.dual[a] == a, tuple(sorted(rows[a].tolist())),
                    tuple(sorted(rows[:, a].tolist()))))
    return out


def _search(R1: FusionRing, R2: FusionRing, max_nodes: int) -> list[int] | None:
    r = R1.rank
    f1, f2 = _fingerprints(R1), _fingerprints(R2)
    if sorted(f1) != sorted(f2):
        return None
    cands = [[b for b in range(r) if f2[b] == f1[a]] for a in range(r)]
    if R2.unit not in cands[R1.unit]:
        return None
    cands[R1.unit] = [R2.unit]
    # order labels so that each new one is tied to earlier ones by N
    conn = (R1.N > 0)
    order = [R1.unit]
    rest = set(range(r)) - {R1.unit}
    while rest:
        placed = order
        def score(c):
            links = (conn[np.ix_(placed, placed, [c])].sum() + conn[np.ix_(placed, [c], placed)].sum()
                     + conn[np.ix_([c], placed, placed)].sum())
            return (-int(links), len(cands[c]), c)
        nxt = min(rest, key=score)
        order.append(nxt)
        rest.remove(nxt)

    N1, N2 = R1.N, R2.N
    phi = [-1] * r
    used = [False] * r
    nodes = 0

    def consistent(depth: int) -> bool:
        P = order[:depth + 1]
        Q = [phi[x] for x in P]
        a, b = P[-1], Q[-1]
        return (np.array_equal(N1[np.ix_(P, P, [a])], N2[np.ix_(Q, Q, [b])])
                and np.array_equal(N1[np.ix_(P, [a], P)], N2[np.ix_(Q, [b], Q)])
                and np.array_equal(N1[np.ix_([a], P, P)], N2[np.ix_([b], Q, Q)]))

    def extend(depth: int) -> bool:
        nonlocal nodes
        if depth == r:
            return True
        a = order[depth]
        for b in cands[a]:
            if used[b]:
                continue
            nodes += 1
            if nodes > max_nodes:
                raise SearchTimeout(f"isomorphism search exceeded {max_nodes} nodes")
            phi[a] = b
            used[b] = True
            if consistent(depth) and extend(depth + 1):
                return True
            used[b] = False
            phi[a] = -1
        return False

    return list(phi) if extend(0) else None


def find_based_iso(R1: FusionRing, R2: FusionRing, max_nodes: int = 10 ** 7) -> BasedRingIso | None:
    """A label bijection preserving unit, duals and N, or None.

    Raises SearchTimeout when the node budget runs out (undecided).
    """
    if R1.rank != R2.rank:
        return None
    perm = _search(R1, R2, max_nodes)
    if perm is not None:
        if not is_based_iso(R1, R2, perm):
            raise ValidationError("isomorphism search returned a non-isomorphism")
        return BasedRingIso(tuple(perm))
    # opposite-convention mismatch: R1 ≅ R2^op, then compose with the dual of R2
    perm = _search(R1, R2.opposite(), max_nodes)
    if perm is None:
        return None
    perm = [R2.dual[p] for p in perm]
    if not is_based_iso(R1, R2, perm):
        raise ValidationError("dual composite is not an isomorphism")
    return BasedRingIso(tuple(perm), via_dual=True)
