import numpy as np
import pytest

from compclust.errors import DomainError, GuardError
from compclust.oracle import (FpRep, grassmannian_count, hom_dim, integer_matrices, rank_mod_p,
                              sample_rep, subspaces)
from compclust.quiver import Quiver, box


def test_rank_mod_p():
    assert rank_mod_p([[1, 2], [2, 4]], 7) == 1
    assert rank_mod_p([[1, 2], [3, 4]], 2) == 1
    assert rank_mod_p([[1, 2], [3, 4]], 5) == 2
    assert rank_mod_p(np.zeros((0, 3)), 5) == 0


def test_rank_against_numpy():
    rng = np.random.default_rng(0)
    for _ in range(20):
        A = rng.integers(0, 3, size=(4, 5))
        # over a large prime the rank equals the rational rank for small entries
        assert rank_mod_p(A, 1000003) == np.linalg.matrix_rank(A)


def test_sampling_is_deterministic(K2):
    a = sample_rep(K2, (2, 3), seed=5)
    b = sample_rep(K2, (2, 3), seed=5)
    c = sample_rep(K2, (2, 3), seed=6)
    assert all((x == y).all() for x, y in zip(a.matrices, b.matrices))
    assert any((x != y).any() for x, y in zip(a.matrices, c.matrices))


def test_per_arrow_streams(K2):
    # each arrow has its own stream, so changing dims at the target only
    # reshapes, never reseeds, the other arrow
    m1 = integer_matrices(K2, (1, 1), (3,), 100)
    m2 = integer_matrices(K2, (1, 1), (3,), 100)
    assert [int(x[0, 0]) for x in m1] == [int(x[0, 0]) for x in m2]


def test_bad_prime(K2):
    with pytest.raises(DomainError):
        sample_rep(K2, (1, 1), p=100)
    with pytest.raises(DomainError):
        sample_rep(K2, (1, 1), p=7)


def test_shape_check(K2):
    with pytest.raises(DomainError):
        FpRep(K2, (1, 1), (np.zeros((1, 1), dtype=np.int64),), 101)


def test_hom_simple_modules(K2):
    S1 = FpRep.from_integer(K2, (1, 0), [np.zeros((0, 1))] * 2, 101)
    S2 = FpRep.from_integer(K2, (0, 1), [np.zeros((1, 0))] * 2, 101)
    assert hom_dim(S1, S1) == 1
    assert hom_dim(S1, S2) == 0
    assert hom_dim(S2, S2) == 1


def test_hom_by_hand(K2):
    # M = N = the regular module (1,1) with maps (1, 2): End is 1-dimensional
    M = FpRep.from_integer(K2, (1, 1), [[[1]], [[2]]], 101)
    N = FpRep.from_integer(K2, (1, 1), [[[1]], [[3]]], 101)
    assert hom_dim(M, M) == 1
    assert hom_dim(M, N) == 0


def gaussian_binomial(m, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("m,k", [(3, 1), (3, 2), (4, 2), (2, 0)])
def test_subspace_counts(m, k):
    p = 3
    subs = list(subspaces(m, k, p))
    assert len(subs) == gaussian_binomial(m, k, p)
    for B, K in subs:
        assert not ((K @ B.T) % p).any()


def test_grassmannian_single_vertex():
    Q = Quiver.from_arrows(2, [(1, 2)])
    M = FpRep.from_integer(Q, (3, 0), [np.zeros((0, 3))], 5)
    assert grassmannian_count(M, (1, 0)) == gaussian_binomial(3, 1, 5)


def test_grassmannian_sanity(K2):
    M = sample_rep(K2, (1, 1), p=101, seed=0)
    counts = [grassmannian_count(M, e) for e in box((1, 1))]
    assert counts == [1, 1, 0, 1]


def test_grassmannian_guard(K2):
    M = sample_rep(K2, (5, 4), p=101)
    with pytest.raises(GuardError):
        grassmannian_count(M, (1, 1))
