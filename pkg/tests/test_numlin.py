import numpy as np
import pytest
from oracles import kron_hom_dim

from zsfusion.errors import NumericError, SizeError
from zsfusion.numlin import (MAX_SIDE, commutant, hom_dim, intertwiners, nullspace, rank,
                             round_int, split_commutant)


def perm_matrix(images):
    n = len(images)
    P = np.zeros((n, n))
    P[images, np.arange(n)] = 1
    return P


def regular_z3():
    return [perm_matrix([(i + g) % 3 for i in range(3)]) for g in range(3)]


def test_rank_basic():
    assert rank(np.eye(3)) == 3
    assert rank(np.zeros((2, 2))) == 0
    assert rank([[1, 2], [2, 4]]) == 1


def test_rank_ignores_roundoff_residue():
    # everything cancelled up to 1e-16: not rank 1
    assert rank(np.array([[1e-16]])) == 0


def test_nullspace_orthonormal_kernel():
    M = np.array([[1.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    K = nullspace(M)
    assert K.shape == (3, 1)
    assert np.allclose(M @ K, 0)
    assert np.allclose(K.conj().T @ K, np.eye(1))


def test_nullspace_of_empty_system_is_everything():
    assert np.allclose(nullspace(np.zeros((0, 3))), np.eye(3))


def test_side_cap():
    with pytest.raises(SizeError):
        rank(np.zeros((MAX_SIDE + 1, 1)))


def test_round_int_guard():
    assert round_int(2.0000000001) == 2
    with pytest.raises(NumericError):
        round_int(2.1)


def test_intertwiners_identity_pair():
    basis = intertwiners([np.eye(1)], [np.eye(1)])
    assert len(basis) == 1


def test_intertwiners_satisfy_equation():
    A = regular_z3()
    for F in intertwiners(A, A):
        for M in A:
            assert np.allclose(M @ F, F @ M)


def test_hom_dim_matches_kronecker_oracle():
    rng = np.random.default_rng(5)
    A = regular_z3()
    # conjugate copy of the regular representation
    Q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
    B = [Q @ M @ Q.T for M in A]
    assert hom_dim(A, B) == kron_hom_dim(A, B) == 3


def test_hom_dim_respects_mask():
    A = [np.diag([1.0, 2.0])]
    mask = np.array([[True, False], [False, False]])
    assert hom_dim(A, A, mask) == 1
    assert hom_dim(A, A) == kron_hom_dim(A, A) == 2


def test_commutant_of_regular_z3_is_three_dimensional():
    assert len(commutant(regular_z3())) == 3


def test_split_regular_z3_into_lines():
    split = split_commutant(regular_z3(), seed=3)
    assert split.dims == [1, 1, 1]
    Bs = split.bases()
    P = np.hstack(Bs)
    assert np.allclose(P.conj().T @ P, np.eye(3))


def test_split_regular_s3_dimensions(S3):
    right = [perm_matrix([S3.mul(x, g) for x in range(6)]) for g in range(6)]
    split = split_commutant(right, seed=0)
    # regular rep = 1 + sgn + 2 copies of the 2-dim irrep
    assert sorted(split.dims) == [1, 1, 2, 2]
    for B in split.bases():
        for R in right:
            assert np.allclose(R @ B, B @ (B.conj().T @ R @ B))


def test_split_respects_diagonal_grading():
    grading = np.diag([1.0, 1.0, 2.0])
    split = split_commutant([grading], seed=1)
    assert split.dims == [1, 1, 1]
    for B in split.bases():
        support = set(np.nonzero(np.abs(B[:, 0]) > 1e-9)[0].tolist())
        assert support <= {0, 1} or support == {2}


def test_split_with_given_commutant_span():
    A = regular_z3()
    split = split_commutant(A, seed=2, commutant_span=A)
    assert split.dims == [1, 1, 1]
