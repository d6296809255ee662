"""Dense floating-point linear algebra used for splitting representations.

Everything here works on complex ``numpy`` arrays. Callers only ever see
integers derived from these computations (ranks, nullspace dimensions,
block sizes), so double precision with explicit tolerances is enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NumericError, SizeError, SplittingError

MAX_SIDE = 4096
DEFAULT_TOL = 1e-8
ROUND_GUARD = 1e-6

# eigenvalue gap (relative to ||H||) that separates two eigenspaces
_EIG_GAP = 1e-6
# singular value below which a projected column is treated as absent
_ALIGN_CUT = 1e-7


def as_matrix(M) -> np.ndarray:
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    if max(A.shape, default=0) > MAX_SIDE:
        raise SizeError(f"matrix of shape {A.shape} exceeds {MAX_SIDE} on a side")
    return A


def rank(M, tol: float = DEFAULT_TOL) -> int:
    """Number of singular values above ``tol`` times max(1, largest one).

    The floor of 1 keeps round-off residue (entries near 1e-16) from
    counting as rank when everything else cancelled exactly.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = as_matrix(M)
    if A.size == 0:
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    return int(np.count_nonzero(s > tol * max(s[0], 1.0)))


def nullspace(M, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (as columns) of the numerical kernel of ``M``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = as_matrix(M)
    rows, cols = A.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=complex)
    if rows == 0:
        return np.eye(cols, dtype=complex)
    _, s, vh = np.linalg.svd(A, full_matrices=True)
    r = int(np.count_nonzero(s > tol * max(s[0], 1.0)))
    return vh[r:].conj().T


def round_int(x: float, guard: float = ROUND_GUARD) -> int:
    """Round to the nearest integer, refusing values that are not close to one."""
    n = int(round(float(np.real(x))))
    if abs(x - n) > guard:
        raise NumericError(f"value {x!r} is not within {guard} of an integer")
    return n


def _diagonal_keys(mats: Sequence[np.ndarray], n: int) -> tuple[list[tuple], list[int]]:
    """Row keys from the diagonal members of ``mats`` and the indices of the others."""
    diag_vals = []
    rest = []
    for idx, A in enumerate(mats):
        d = np.diag(A)
        if np.count_nonzero(A - np.diag(d)) == 0:
            diag_vals.append(d)
        else:
            rest.append(idx)
    if not diag_vals:
        return [()] * n, rest
    D = np.round(np.array(diag_vals), 6) + 0.0
    keys = [tuple(complex(z) for z in D[:, i]) for i in range(n)]
    return keys, rest


def intertwiners(src: Sequence, dst: Sequence, mask=None,
                 tol: float = DEFAULT_TOL) -> list[np.ndarray]:
    """Basis of {F : dst[i] @ F == F @ src[i] for all i}, F of shape (n, m).

    ``mask`` (boolean, shape (n, m)) restricts which entries of F may be
    nonzero; it is how degree-preserving maps are expressed cheaply.
    """
    if len(src) != len(dst):
        raise ValueError("src and dst must pair up")
    src = [as_matrix(B) for B in src]
    dst = [as_matrix(A) for A in dst]
    if not src:
        raise ValueError("need at least one pair of matrices")
    m = src[0].shape[0]
    n = dst[0].shape[0]
    if mask is None:
        mask = np.ones((n, m), dtype=bool)
    I, J = np.nonzero(mask)
    u = len(I)
    if u == 0:
        return []
    cols = np.arange(u)
    blocks = []
    for A, B in zip(dst, src):
        K = np.zeros((n, m, u), dtype=complex)
        K[:, J, cols] += A[:, I]
        K[I, :, cols] -= B[J, :]
        K = K.reshape(n * m, u)
        K = K[np.any(K != 0, axis=1)]
        if K.shape[0]:
            blocks.append(K)
    # intersect kernels one block at a time so no single system gets too tall
    null = np.eye(u, dtype=complex)
    for K in blocks:
        if null.shape[1] == 0:
            break
        null = null @ nullspace(K @ null, tol)
    out = []
    for v in null.T:
        F = np.zeros((n, m), dtype=complex)
        F[I, J] = v
        out.append(F)
    return out


def hom_dim(src: Sequence, dst: Sequence, mask=None, tol: float = DEFAULT_TOL) -> int:
    return len(intertwiners(src, dst, mask, tol))


def commutant(action: Sequence, tol: float = DEFAULT_TOL) -> list[np.ndarray]:
    """Basis of the matrices commuting with every member of ``action``."""
    mats = [as_matrix(A) for A in action]
    n = mats[0].shape[0]
    keys, rest = _diagonal_keys(mats, n)
    mask = np.array([[keys[i] == keys[j] for j in range(n)] for i in range(n)], dtype=bool)
    if not rest:
        I, J = np.nonzero(mask)
        out = []
        for i, j in zip(I, J):
            F = np.zeros((n, n), dtype=complex)
            F[i, j] = 1.0
            out.append(F)
        return out
    others = [mats[i] for i in rest]
    return intertwiners(others, others, mask, tol)


@dataclass(frozen=True)
class BlockSplit:
    """Irreducible invariant blocks, each given by an orthonormal column basis."""

    blocks: tuple[tuple[int, np.ndarray], ...]

    @property
    def dims(self) -> list[int]:
        return [d for d, _ in self.blocks]

    def bases(self) -> list[np.ndarray]:
        return [B for _, B in self.blocks]


def _align(B: np.ndarray, keys: list[tuple]) -> np.ndarray:
    """Re-pick an orthonormal basis of span(B) made of vectors that are
    homogeneous for the diagonal members of the action."""
    groups: dict[tuple, list[int]] = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    if len(groups) == 1:
        return B
    n, d = B.shape
    cols = []
    for rows in groups.values():
        U, s, _ = np.linalg.svd(B[rows, :], full_matrices=False)
        r = int(np.count_nonzero(s > _ALIGN_CUT))
        for c in range(r):
            v = np.zeros(n, dtype=complex)
            v[rows] = U[:, c]
            cols.append(v)
    if len(cols) != d:
        raise SplittingError(f"block of dimension {d} is not homogeneous ({len(cols)} graded vectors)")
    return np.array(cols).T


def split_commutant(action: Sequence, seed: int = 0, tol: float = DEFAULT_TOL,
                    max_rounds: int = 32, commutant_span: Sequence | None = None) -> BlockSplit:
    """Split the ambient space into irreducible blocks for ``action``.

    Repeatedly draws a random Hermitian element of the commutant of the
    restricted action and splits along its eigenspaces, until every block has
    a one-dimensional commutant. The action must generate a *-closed algebra
    (unitary group images, Hermitian diagonal gradings), which is what the
    callers in this package provide.

    When the caller already knows matrices spanning the commutant (as a
    *-closed algebra), ``commutant_span`` skips the linear solve; blocks are
    eigenspaces of algebra elements, so compressions of the span stay spanning.
    """
    mats = [as_matrix(A) for A in action]
    if not mats:
        raise ValueError("empty action list")
    n = mats[0].shape[0]
    for A in mats:
        if A.shape != (n, n):
            raise ValueError("action matrices must be square of equal size")
    if n == 0:
        return BlockSplit(())
    rng = np.random.default_rng(seed)
    keys, _ = _diagonal_keys(mats, n)
    pending = [_align(np.eye(n, dtype=complex), keys)]
    done = []
    while pending:
        B = pending.pop()
        if commutant_span is None:
            comm = commutant([B.conj().T @ A @ B for A in mats], tol)
            size = len(comm)
        else:
            comm = [B.conj().T @ as_matrix(T) @ B for T in commutant_span]
            # few rows, many columns: cheap SVD, so skip the side cap of rank()
            sv = np.linalg.svd(np.array([C.ravel() for C in comm]), compute_uv=False)
            size = int(np.count_nonzero(sv > tol * max(sv[0], 1.0)))
        if size <= 1:
            done.append(B)
            continue
        for _ in range(max_rounds):
            coeffs = rng.standard_normal(len(comm)) + 1j * rng.standard_normal(len(comm))
            X = np.tensordot(coeffs, np.array(comm), axes=1)
            H = X + X.conj().T
            scale = np.linalg.norm(H)
            if scale == 0.0:
                continue
            w, V = np.linalg.eigh(H / scale)
            cuts = np.nonzero(np.diff(w) > _EIG_GAP)[0] + 1
            if len(cuts) == 0:
                continue
            for part in np.split(np.arange(len(w)), cuts):
                pending.append(_align(B @ V[:, part], keys))
            break
        else:
            raise SplittingError(f"no split of a block of dimension {B.shape[1]} "
                                 f"after {max_rounds} rounds")

    def order(B):
        weight = np.abs(B).max(axis=1)
        return (int(np.argmax(weight > 1e-6)), B.shape[1])

    done.sort(key=order)
    return BlockSplit(tuple((B.shape[1], B) for B in done))
