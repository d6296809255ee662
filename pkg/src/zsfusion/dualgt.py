"""Dual of vec_Sigma with respect to the module category of a subgroup H.

The dual is modelled directly as H-bimodules inside Sigma-graded vector
spaces: a basis vector of degree s goes to degree h s under ``L[h]`` and to
degree s h under ``R[h]``. Composition of module functors is the tensor
product over the group algebra of H. Nothing here relies on the crossed
extension side, so comparing the two rings is a genuine check.

Matrices act on column vectors. ``L`` is a left action (L[gh] = L[g] L[h]);
``R`` is a right action written on columns, so R[gh] = R[h] R[g].
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError, NumericError, SplittingError
from .fusring import FusionRing, solve_duals
from .grp import FiniteGroup, Subgroup, double_cosets, make_subgroup
from .numlin import DEFAULT_TOL, intertwiners, nullspace, split_commutant

MAX_SIGMA = 24
MAX_FREE = 144    # dimension of the free bimodule H x H, for the full fusion table
MAX_FREE_SPLIT = 576    # splitting alone stays cheap up to H = S4


@dataclass(frozen=True, eq=False)
class BimoduleObject:
    deg: tuple[int, ...]
    L: tuple[np.ndarray, ...]   # indexed by position in H
    R: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return len(self.deg)


@dataclass(frozen=True, eq=False)
class BimoduleSimple:
    rep: int          # double coset representative in Sigma
    dim: int
    object: BimoduleObject

    def fp(self, h_order: int) -> float:
        return self.dim / h_order


@dataclass(frozen=True, eq=False)
class DualModel:
    ring: FusionRing
    simples: list[BimoduleSimple]
    H: Subgroup


def _perm(images, n: int) -> np.ndarray:
    P = np.zeros((n, n), dtype=complex)
    P[np.asarray(images), np.arange(n)] = 1.0
    return P


def unit_bimodule(H: Subgroup) -> BimoduleObject:
    S = H.parent
    els = H.elements
    pos = {x: i for i, x in enumerate(els)}
    n = len(els)
    L = tuple(_perm([pos[S.mul(h, a)] for a in els], n) for h in els)
    R = tuple(_perm([pos[S.mul(a, h)] for a in els], n) for h in els)
    return BimoduleObject(tuple(els), L, R)


def free_bimodule(H: Subgroup, s: int) -> BimoduleObject:
    """Basis (a, b) in H x H, degree a s b, index ``i * |H| + j``."""
    S = H.parent
    els = H.elements
    m = len(els)
    pos = {x: i for i, x in enumerate(els)}
    deg = tuple(S.prod(a, s, b) for a in els for b in els)
    L, R = [], []
    for h in els:
        L.append(_perm([pos[S.mul(h, a)] * m + j for a in els for j in range(m)], m * m))
        R.append(_perm([i * m + pos[S.mul(b, h)] for i in range(m) for b in els], m * m))
    return BimoduleObject(deg, tuple(L), tuple(R))


def _middle_translations(H: Subgroup, s: int) -> list[np.ndarray]:
    """(a, b) -> (a k^-1, s^-1 k s b) for k in H ∩ s H s^-1: these span End of the free bimodule."""
    S = H.parent
    els = H.elements
    m = len(els)
    pos = {x: i for i, x in enumerate(els)}
    out = []
    for k in els:
        k2 = S.prod(S.inv[s], k, s)
        if k2 not in pos:
            continue
        images = [pos[S.mul(a, S.inv[k])] * m + pos[S.mul(k2, b)] for a in els for b in els]
        out.append(_perm(images, m * m))
    return out


def _gens(H: Subgroup) -> list[int]:
    """Positions in H of a generating set."""
    g = H.as_group().generators()
    return g or [0]


def _actions(X: BimoduleObject, gens: list[int]) -> list[np.ndarray]:
    return [X.L[i] for i in gens] + [X.R[i] for i in gens]


def bimodule_hom_dim(X: BimoduleObject, Y: BimoduleObject, gens: list[int],
                     tol: float = DEFAULT_TOL) -> int:
    if X.dim == 0 or Y.dim == 0:
        return 0
    mask = np.equal.outer(np.array(Y.deg), np.array(X.deg))
    if not mask.any():
        return 0
    return len(intertwiners(_actions(X, gens), _actions(Y, gens), mask, tol))


def bimodule_isomorphism(X: BimoduleObject, Y: BimoduleObject, H: Subgroup,
                         tol: float = DEFAULT_TOL) -> np.ndarray | None:
    """An invertible degree-preserving intertwiner X -> Y, if the two are simple and isomorphic."""
    if X.dim != Y.dim:
        return None
    mask = np.equal.outer(np.array(Y.deg), np.array(X.deg))
    gens = _gens(H)
    basis = intertwiners(_actions(X, gens), _actions(Y, gens), mask, tol)
    if not basis:
        return None
    rng = np.random.default_rng(0)
    F = sum(c * B for c, B in zip(rng.standard_normal(len(basis)), basis))
    if np.linalg.matrix_rank(F, tol=1e-8 * max(1.0, np.abs(F).max())) < X.dim:
        return None
    return F


def _restrict(X: BimoduleObject, B: np.ndarray) -> BimoduleObject:
    rows = np.argmax(np.abs(B), axis=0)
    Bh = B.conj().T
    return BimoduleObject(tuple(X.deg[r] for r in rows),
                          tuple(Bh @ M @ B for M in X.L), tuple(Bh @ M @ B for M in X.R))


def bimodule_tensor(X: BimoduleObject, Y: BimoduleObject, H: Subgroup,
                    tol: float = DEFAULT_TOL) -> BimoduleObject:
    """X ⊗_H Y: X ⊗ Y modulo x·h ⊗ y - x ⊗ h·y, realised on the orthogonal complement."""
    S = H.parent
    dx, dy = X.dim, Y.dim
    deg = np.array([S.mul(a, b) for a in X.deg for b in Y.deg], dtype=np.int64)
    Ix, Iy = np.eye(dx), np.eye(dy)
    rel = np.hstack([np.kron(X.R[i], Iy) - np.kron(Ix, Y.L[i]) for i in _gens(H)])
    cols = []
    for s in np.unique(deg):
        idx = np.nonzero(deg == s)[0]
        block = rel[idx]
        block = block[:, np.any(np.abs(block) > tol, axis=0)]
        comp = nullspace(block.conj().T, tol) if block.shape[1] else np.eye(len(idx))
        for v in comp.T:
            q = np.zeros(dx * dy, dtype=complex)
            q[idx] = v
            cols.append(q)
    expected, rem = divmod(dx * dy, H.order)
    if rem or len(cols) != expected:
        raise ConsistencyError(f"quotient has dimension {len(cols)}, expected {dx * dy}/{H.order}")
    if not cols:
        return BimoduleObject((), tuple(np.zeros((0, 0)) for _ in H.elements),
                              tuple(np.zeros((0, 0)) for _ in H.elements))
    Q = np.array(cols).T
    Qh = Q.conj().T
    out_deg = tuple(int(deg[np.argmax(np.abs(q))]) for q in cols)
    L = tuple(Qh @ np.kron(A, Iy) @ Q for A in X.L)
    R = tuple(Qh @ np.kron(Ix, B) @ Q for B in Y.R)
    return BimoduleObject(out_deg, L, R)


def decompose_bimodule(X: BimoduleObject, simples: list, H: Subgroup,
                       tol: float = DEFAULT_TOL) -> dict[int, int]:
    """Multiplicity of each simple in X (zero entries omitted)."""
    gens = _gens(H)
    objs = [S.object if isinstance(S, BimoduleSimple) else S for S in simples]
    present = set(X.deg)
    out = {}
    for i, S in enumerate(objs):
        if set(S.deg) & present:
            m = bimodule_hom_dim(S, X, gens, tol)
            if m:
                out[i] = m
    if sum(m * objs[i].dim for i, m in out.items()) != X.dim:
        raise ConsistencyError(f"decomposition does not account for dimension {X.dim}")
    return out


def _sort_key(S: BimoduleSimple, H: Subgroup):
    Sig = H.parent
    s0 = min(S.object.deg)
    rows = [i for i, x in enumerate(S.object.deg) if x == s0]
    trace = []
    for i, h in enumerate(H.elements):
        # h s0 h' = s0 with h' = s0^-1 h^-1 s0
        h2 = Sig.prod(Sig.inv[s0], Sig.inv[h], s0)
        if h2 in H:
            M = S.object.L[i] @ S.object.R[H.position(h2)]
            t = np.trace(M[np.ix_(rows, rows)])
            trace.extend((-round(t.real, 6) + 0.0, -round(t.imag, 6) + 0.0))
    return (S.rep, S.dim, tuple(trace))


def dual_simples(H: Subgroup, seed: int = 0, tol: float = DEFAULT_TOL) -> list[BimoduleSimple]:
    gens = _gens(H)
    out = []
    for dc in double_cosets(H.parent, H):
        free = free_bimodule(H, dc.rep)
        grading = np.diag(np.array(free.deg, dtype=float) + 1.0)
        span = _middle_translations(H, dc.rep)
        split = split_commutant(_actions(free, gens) + [grading], seed=seed, tol=tol,
                                commutant_span=span)
        # blocks B, B' are isomorphic iff some B'^H T B is nonzero, T in the span
        reps: list[np.ndarray] = []
        for B in split.bases():
            if not any(max(np.abs(C.conj().T @ T @ B).max() for T in span) > 1e-6
                       for C in reps):
                reps.append(B)
        out.extend(BimoduleSimple(min(dc.elements), B.shape[1], _restrict(free, B))
                   for B in reps)
    out.sort(key=lambda S: _sort_key(S, H))
    return out


@dataclass(frozen=True, eq=False)
class Completeness:
    simples: list[BimoduleSimple]
    total: int        # Σ (dim/|H|)²
    expected: int     # |Sigma|

    @property
    def ok(self) -> bool:
        return self.total == self.expected


def dual_completeness(Sigma: FiniteGroup, H: Subgroup, seed: int = 0,
                      tol: float = DEFAULT_TOL, max_free: int = MAX_FREE_SPLIT) -> Completeness:
    """Simples of the dual model with the certificate Σ (dim/|H|)² = |Sigma|."""
    if Sigma.n > MAX_SIGMA:
        raise DomainError(f"|Sigma| = {Sigma.n} exceeds {MAX_SIGMA}")
    H = make_subgroup(Sigma, H.elements)
    if H.order ** 2 > max_free:
        raise DomainError(f"|H|² = {H.order ** 2} exceeds {max_free}")
    simples = dual_simples(H, seed, tol)
    total = sum((S.dim // H.order) ** 2 if S.dim % H.order == 0 else -Sigma.n for S in simples)
    return Completeness(simples, total, Sigma.n)


def dual_ring_group_theoretical(Sigma: FiniteGroup, H: Subgroup, seed: int = 0,
                                tol: float = DEFAULT_TOL, workers: int = 1) -> DualModel:
    cert = dual_completeness(Sigma, H, seed, tol, max_free=MAX_FREE)
    if not cert.ok:
        raise SplittingError(f"Σ (dim/|H|)² = {cert.total}, expected |Sigma| = {Sigma.n}")
    H = make_subgroup(Sigma, H.elements)
    simples = cert.simples
    unit_obj = unit_bimodule(H)
    gens = _gens(H)
    units = [i for i, S in enumerate(simples) if S.dim == H.order
             and bimodule_hom_dim(unit_obj, S.object, gens, tol) == 1]
    if len(units) != 1:
        raise NumericError(f"expected one simple isomorphic to the unit, found {len(units)}")
    # unit first, the rest keep their canonical order
    simples.insert(0, simples.pop(units[0]))
    r = len(simples)

    def row(pair):
        a, b = pair
        X = bimodule_tensor(simples[a].object, simples[b].object, H, tol)
        mult = decompose_bimodule(X, simples, H, tol)
        return [mult.get(c, 0) for c in range(r)]

    pairs = [(a, b) for a in range(r) for b in range(r)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, pairs))
    else:
        rows = [row(p) for p in pairs]
    N = np.array(rows, dtype=np.int64).reshape(r, r, r)
    dual = solve_duals(N, 0)
    labels = [f"M{i}@{Sigma.name(S.rep)}[{S.dim // H.order}]" for i, S in enumerate(simples)]
    return DualModel(FusionRing(N, 0, dual, labels), simples, H)
