"""Crossed extensions C^(G,Gamma): equivariant objects and their fusion ring.

An equivariant object is stored as a graded vector space (one label of C per
basis vector) with one matrix per element of G. ``u[g]`` is the structure map
``X ◁ g -> X``; it sends a vector of degree ``a`` to degree ``a ◁ g``. With the
action strict, the cocycle condition reads ``u[g h] == u[h] @ u[g]``.

For pointed C (the group ring of Gamma) the full fusion ring is computed:
simples come from splitting induced objects, the tensor product twists the
left factor by ``u[|y| ▶ g]``, and fusion coefficients are dimensions of
spaces of equivariant maps.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .crossact import CrossedActionData, verify_crossed_action
from .errors import ConsistencyError, DomainError, NumericError, SplittingError
from .fusring import FusionRing, find_based_iso, fpdim, rep_ring, solve_duals
from .grp import Subgroup
from .numlin import DEFAULT_TOL, intertwiners, rank, split_commutant

MAX_POINTED = 72


@dataclass(frozen=True, eq=False)
class EquivariantObject:
    deg: tuple[int, ...]
    u: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return len(self.deg)

    @property
    def graded_dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a in self.deg:
            out[a] = out.get(a, 0) + 1
        return dict(sorted(out.items()))


@dataclass(frozen=True, eq=False)
class EquivariantSimple:
    orbit: tuple[int, ...]
    stabilizer_order: int
    dim: int
    object: EquivariantObject
    fp: float


def verify_equivariant_structure(X: EquivariantObject, d: CrossedActionData,
                                 tol: float = DEFAULT_TOL, residual: float = 1e-6) -> list[dict]:
    G = d.G
    out = []
    if len(X.u) != G.n:
        return [{"check": "one structure map per element of G", "witness": (len(X.u),)}]
    n = X.dim
    for g in range(G.n):
        U = np.asarray(X.u[g])
        if U.shape != (n, n):
            out.append({"check": "structure map shape", "witness": (g,)})
            continue
        if rank(U, tol) < n if n else False:
            out.append({"check": "u_g invertible", "witness": (g,)})
        for i, j in np.argwhere(np.abs(U) > tol):
            if X.deg[i] != d.act[X.deg[j], g]:
                out.append({"check": "u_g maps degree a to degree a ◁ g", "witness": (g, int(i), int(j))})
                break
    if out:
        return out
    for g in range(G.n):
        for h in range(G.n):
            lhs = np.asarray(X.u[G.mul(g, h)])
            rhs = np.asarray(X.u[h]) @ np.asarray(X.u[g])
            err = float(np.abs(lhs - rhs).max()) if n else 0.0
            if err > residual:
                out.append({"check": "cocycle: u_gh = u_h (u_g ◁ h)", "witness": (g, h),
                            "residual": err})
    return out


def induced_object(d: CrossedActionData, label: int) -> EquivariantObject:
    """Basis e_g (g in G) of degree label ◁ g, with u_h e_g = e_{gh}."""
    G = d.G
    deg = tuple(int(d.act[label, g]) for g in range(G.n))
    mats = []
    for h in range(G.n):
        U = np.zeros((G.n, G.n), dtype=complex)
        U[G.table[:, h], np.arange(G.n)] = 1.0
        mats.append(U)
    return EquivariantObject(deg, tuple(mats))


def _restrict(X: EquivariantObject, B: np.ndarray) -> EquivariantObject:
    rows = np.argmax(np.abs(B), axis=0)
    deg = tuple(X.deg[r] for r in rows)
    Bh = B.conj().T
    return EquivariantObject(deg, tuple(Bh @ U @ B for U in X.u))


def _degree_mask(src: EquivariantObject, dst: EquivariantObject) -> np.ndarray:
    return np.equal.outer(np.array(dst.deg), np.array(src.deg))


def hom_dim(X: EquivariantObject, Y: EquivariantObject, gens: list[int],
            tol: float = DEFAULT_TOL) -> int:
    """Dimension of {f : X -> Y degree-preserving, v_g f = f u_g}."""
    if X.dim == 0 or Y.dim == 0:
        return 0
    mask = _degree_mask(X, Y)
    if not mask.any():
        return 0
    return len(intertwiners([X.u[g] for g in gens], [Y.u[g] for g in gens], mask, tol))


def tensor_objects(X: EquivariantObject, Y: EquivariantObject, d: CrossedActionData) -> EquivariantObject:
    """(X, u) ⊗ (Y, v) for pointed C: on x ⊗ y, w_g = u_{|y| ▶ g} ⊗ v_g."""
    G, K = d.G, d.Gamma
    dx, dy = X.dim, Y.dim
    deg = tuple(K.mul(d.deg(a), d.deg(b)) for a in X.deg for b in Y.deg)
    ydeg = [d.deg(b) for b in Y.deg]
    mats = []
    for g in range(G.n):
        Ustack = np.array([X.u[d.mp.left(k, g)] for k in ydeg])   # (dy, dx, dx)
        W = np.einsum("lik,jl->ijkl", Ustack, np.asarray(Y.u[g]))
        mats.append(W.reshape(dx * dy, dx * dy))
    return EquivariantObject(deg, tuple(mats))


def _stabilizer(d: CrossedActionData, label: int) -> list[int]:
    return [g for g in range(d.G.n) if d.act[label, g] == label]


def _orbit(d: CrossedActionData, label: int) -> tuple[int, ...]:
    return tuple(sorted(set(int(x) for x in d.act[label])))


def _sort_key(S: EquivariantSimple, d: CrossedActionData):
    rep = S.orbit[0]
    rows = [i for i, a in enumerate(S.object.deg) if a == rep]
    trace = []
    for s in _stabilizer(d, rep):
        t = np.trace(S.object.u[s][np.ix_(rows, rows)])
        trace.extend((-round(t.real, 6) + 0.0, -round(t.imag, 6) + 0.0))
    return (rep != d.C.unit, rep, S.dim, tuple(trace))


def _check_pointed(d: CrossedActionData) -> None:
    K = d.Gamma
    if d.C.rank != K.n or list(d.grading.deg) != list(range(K.n)):
        raise DomainError("C must be the group ring of Gamma graded by itself")
    expected = np.zeros_like(d.C.N)
    for a in range(K.n):
        expected[a, np.arange(K.n), K.table[a]] = 1
    if not np.array_equal(d.C.N, expected):
        raise DomainError("C must be the group ring of Gamma")
    if not np.array_equal(d.act, d.mp.ract):
        raise DomainError("the action on labels must be ◀")
    if d.G.n * K.n > MAX_POINTED:
        raise DomainError(f"|G||Gamma| = {d.G.n * K.n} exceeds {MAX_POINTED}")


def equivariant_simples(d: CrossedActionData, seed: int = 0,
                        tol: float = DEFAULT_TOL) -> list[EquivariantSimple]:
    """One representative per isomorphism class, in canonical order."""
    G = d.G
    gens = G.generators() or [G.identity]
    dims = fpdim(d.C).dims
    seen_orbits = set()
    simples = []
    for label in range(d.C.rank):
        orbit = _orbit(d, label)
        if orbit in seen_orbits:
            continue
        seen_orbits.add(orbit)
        ind = induced_object(d, orbit[0])
        grading = np.diag(np.array(ind.deg, dtype=float) + 1.0)
        split = split_commutant([ind.u[g] for g in gens] + [grading], seed=seed, tol=tol)
        classes: list[EquivariantObject] = []
        for B in split.bases():
            part = _restrict(ind, B)
            if not any(hom_dim(part, other, gens, tol) for other in classes):
                classes.append(part)
        stab = len(_stabilizer(d, orbit[0]))
        for obj in classes:
            fp = sum(dims[a] for a in obj.deg)
            simples.append(EquivariantSimple(orbit, stab, obj.dim, obj, fp))
    simples.sort(key=lambda S: _sort_key(S, d))
    return simples


@dataclass(frozen=True, eq=False)
class EquivariantRing:
    ring: FusionRing
    simples: list[EquivariantSimple]


def equivariantize_pointed(d: CrossedActionData, seed: int = 0, tol: float = DEFAULT_TOL,
                           workers: int = 1) -> EquivariantRing:
    _check_pointed(d)
    bad = verify_crossed_action(d)
    if bad:
        raise DomainError(f"invalid crossed action: {bad[0]['axiom']}")
    G, K = d.G, d.Gamma
    gens = G.generators() or [G.identity]
    simples = equivariant_simples(d, seed, tol)
    total = sum(S.dim ** 2 for S in simples)
    if total != G.n * K.n:
        raise SplittingError(f"Σ dim² = {total}, expected |G||Gamma| = {G.n * K.n}")
    r = len(simples)
    support = [set(S.object.deg) for S in simples]

    def row(pair):
        s, t = pair
        X = tensor_objects(simples[s].object, simples[t].object, d)
        present = set(X.deg)
        mult = [hom_dim(simples[c].object, X, gens, tol) if support[c] & present else 0
                for c in range(r)]
        if sum(m * simples[c].dim for c, m in enumerate(mult)) != X.dim:
            raise ConsistencyError(f"decomposition of S{s} ⊗ S{t} does not add up to {X.dim}")
        return mult

    pairs = [(s, t) for s in range(r) for t in range(r)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, pairs))
    else:
        rows = [row(p) for p in pairs]
    N = np.array(rows, dtype=np.int64).reshape(r, r, r)
    unit = 0
    if simples[0].orbit != (d.C.unit,) or simples[0].dim != 1 or any(
            abs(simples[0].object.u[g][0, 0] - 1) > 1e-6 for g in range(G.n)):
        raise NumericError("canonical ordering did not put the unit first")
    dual = solve_duals(N, unit)
    labels = []
    for i, S in enumerate(simples):
        orb = "{" + ",".join(K.name(a) for a in S.orbit) + "}"
        labels.append(f"S{i}{orb}[{S.dim}]")
    ring = FusionRing(N, unit, dual, labels)
    return EquivariantRing(ring, simples)


@dataclass(frozen=True)
class CensusEntry:
    orbit: tuple[int, ...]
    stabilizer_order: int
    irrep_count: int
    fp_dims: tuple[float, ...]


@dataclass(frozen=True)
class Census:
    entries: tuple[CensusEntry, ...]
    sum_fp_squared: float
    expected: float
    consistent: bool


def equivariant_census_general(d: CrossedActionData, seed: int = 0) -> Census:
    """Orbit/stabilizer bookkeeping of the simples of C^(G,Gamma); no fusion."""
    dims = fpdim(d.C).dims
    G = d.G
    entries = []
    seen = set()
    for label in range(d.C.rank):
        orbit = _orbit(d, label)
        if orbit in seen:
            continue
        seen.add(orbit)
        stab = Subgroup(G, tuple(_stabilizer(d, orbit[0])))
        degrees = [round(x) for x in fpdim(rep_ring(stab.as_group(), seed)).dims]
        base = sum(dims[a] for a in orbit)
        entries.append(CensusEntry(orbit, stab.order, len(degrees),
                                   tuple(round(k * base, 12) for k in degrees)))
    s = sum(x * x for e in entries for x in e.fp_dims)
    expected = G.n * fpdim(d.C).total
    return Census(tuple(entries), round(s, 9), round(expected, 9), abs(s - expected) <= 1e-6)


def forgetful_image(S: EquivariantSimple, n_gamma: int) -> np.ndarray:
    v = np.zeros(n_gamma, dtype=np.int64)
    for a, k in S.object.graded_dims.items():
        v[a] = k
    return v


def extension_checks(K: FusionRing, simples: list[EquivariantSimple], d: CrossedActionData,
                     seed: int = 0) -> list[dict]:
    """Shape of Rep G -> C^(G,Gamma) -> C at ring level."""
    out = []
    Gam = d.Gamma
    trivial = [i for i, S in enumerate(simples) if S.orbit == (d.C.unit,)]
    try:
        sub = K.subring(trivial)
    except ValueError as exc:
        out.append({"check": "trivial-orbit simples form a subring", "witness": str(exc)})
    else:
        if find_based_iso(sub, rep_ring(d.G, seed)) is None:
            out.append({"check": "trivial-orbit subring ≅ Rep G", "witness": tuple(trivial)})
    F = np.array([forgetful_image(S, Gam.n) for S in simples])

    def conv(x, y):
        z = np.zeros(Gam.n, dtype=np.int64)
        for a in np.nonzero(x)[0]:
            for b in np.nonzero(y)[0]:
                z[Gam.mul(a, b)] += x[a] * y[b]
        return z

    for s in range(K.rank):
        for t in range(K.rank):
            if not np.array_equal(conv(F[s], F[t]), K.N[s, t] @ F):
                out.append({"check": "forgetful map is multiplicative", "witness": (s, t)})
    missing = np.nonzero(F.sum(axis=0) == 0)[0]
    if len(missing):
        out.append({"check": "forgetful map hits every Gamma label",
                    "witness": tuple(int(x) for x in missing)})
    return out
