"""Independent reference computations used to check the package.

Nothing here calls into the code under test except for reading plain data
(tables, N tensors) off the objects it returns.
"""

from itertools import combinations, permutations

import numpy as np


def by_name(G, name):
    return G.names.index(name)


def compose(p, q):
    """p then q, 1-based image tuples."""
    return tuple(q[p[i] - 1] for i in range(len(p)))


def close_perms(gens):
    degree = len(gens[0])
    ident = tuple(range(1, degree + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, tuple(g))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def brute_subgroups(table):
    """Every subset containing the identity and closed under the table (order <= 12)."""
    T = np.asarray(table)
    n = len(T)
    e = next(a for a in range(n) if all(T[a, b] == b for b in range(n)))
    rest = [a for a in range(n) if a != e]
    out = []
    for k in range(len(rest) + 1):
        for sub in combinations(rest, k):
            s = set(sub) | {e}
            if all(T[a, b] in s for a in s for b in s):
                out.append(tuple(sorted(s)))
    return sorted(out)


def brute_exact_factorizations(table):
    subs = brute_subgroups(table)
    n = len(table)
    e = next(a for a in range(n) if all(table[a][b] == b for b in range(n)))
    return sorted((G, K) for G in subs for K in subs
                  if len(G) * len(K) == n and set(G) & set(K) == {e})


def naive_assoc_failures(N):
    N = np.asarray(N)
    r = N.shape[0]
    bad = []
    for a in range(r):
        for b in range(r):
            for c in range(r):
                for d in range(r):
                    lhs = sum(N[a, b, x] * N[x, c, d] for x in range(r))
                    rhs = sum(N[b, c, y] * N[a, y, d] for y in range(r))
                    if lhs != rhs:
                        bad.append((a, b, c, d))
    return bad


def perron_dims(N):
    """FP-dim of each label as the spectral radius of its fusion matrix."""
    N = np.asarray(N, dtype=float)
    return [max(abs(np.linalg.eigvals(N[a]))) for a in range(N.shape[0])]


def brute_based_iso(N1, u1, d1, N2, u2, d2):
    """Exhaustive search over all label bijections (rank <= 8)."""
    N1, N2 = np.asarray(N1), np.asarray(N2)
    r = N1.shape[0]
    if N2.shape[0] != r:
        return None
    for p in permutations(range(r)):
        if p[u1] != u2 or any(p[d1[a]] != d2[p[a]] for a in range(r)):
            continue
        if np.array_equal(N1, N2[np.ix_(p, p, p)]):
            return p
    return None


def tables_isomorphic(T1, T2):
    """Group isomorphism by brute force over bijections fixing the identity (order <= 8)."""
    T1, T2 = np.asarray(T1), np.asarray(T2)
    n = len(T1)
    if len(T2) != n:
        return False
    for p in permutations(range(1, n)):
        f = (0,) + p
        if all(f[T1[a, b]] == T2[f[a], f[b]] for a in range(n) for b in range(n)):
            return True
    return False


def conjugacy_class_count(table):
    T = np.asarray(table)
    n = len(T)
    e = next(a for a in range(n) if all(T[a, b] == b for b in range(n)))
    inv = [next(b for b in range(n) if T[a, b] == e) for a in range(n)]
    seen, count = set(), 0
    for x in range(n):
        if x in seen:
            continue
        count += 1
        seen.update(T[T[g, x], inv[g]] for g in range(n))
    return count


def kron_hom_dim(src, dst, tol=1e-8):
    """dim {F : dst_i F = F src_i} via the vec trick, no masking."""
    m = src[0].shape[0]
    n = dst[0].shape[0]
    rows = [np.kron(np.eye(m), A) - np.kron(B.T, np.eye(n)) for A, B in zip(dst, src)]
    M = np.vstack(rows)
    s = np.linalg.svd(M, compute_uv=False)
    return m * n - int(np.sum(s > tol * max(1.0, s[0])))


# character tables listed by (element order) classes; rows are irreducibles
S3_CHARS = {1: [1, 1, 2], 2: [1, -1, 0], 3: [1, 1, -1]}


def ring_from_characters(chars, class_sizes):
    """N[a][b][c] = <chi_a chi_b, chi_c> for real character tables."""
    X = np.array(chars, dtype=float)
    sizes = np.array(class_sizes, dtype=float)
    order = sizes.sum()
    r = len(X)
    N = np.zeros((r, r, r), dtype=int)
    for a in range(r):
        for b in range(r):
            for c in range(r):
                N[a, b, c] = round(float(np.sum(sizes * X[a] * X[b] * X[c]) / order))
    return N


S3_REP_N = ring_from_characters([[1, 1, 1], [1, -1, 1], [2, 0, -1]], [1, 3, 2])
