import numpy as np
import pytest

from compclust.affine import delta
from compclust.character import (LaurentPoly, cc_character, character_of, direct_sum_matrices,
                                  generic_character, prime_list, verify_affine_exchange)
from compclust.errors import DomainError, GenericityError, GuardError


def X(n, terms):
    return LaurentPoly(n, terms)


def test_laurent_arithmetic():
    x1, x2 = LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)
    p = x1 + x2
    assert str(p * p) == "1 * x1^0 x2^2 + 2 * x1^1 x2^1 + 1 * x1^2 x2^0"
    assert (p - p).terms == {}
    assert str(p - p) == "0"
    assert LaurentPoly(2, {(1, 0): 1, (0, 1): 0}) == x1
    with pytest.raises(DomainError):
        x1 + LaurentPoly.variable(3, 0)


def test_zero_module(K2):
    rep = cc_character(K2, (0, 0), [np.zeros((0, 0))] * 2)
    assert rep.character == LaurentPoly.one(2)


def test_simple_injective(K2):
    # S_1 at the source: (1 + x2^2) / x1
    assert generic_character(K2, (1, 0)) == X(2, {(-1, 0): 1, (-1, 2): 1})


def test_simple_projective(K2):
    # S_2 at the sink: (1 + x1^2) / x2
    assert generic_character(K2, (0, 1)) == X(2, {(0, -1): 1, (2, -1): 1})


def test_shifted_projective(K2):
    assert character_of(K2, (-1, 0)) == LaurentPoly.variable(2, 0)
    assert character_of(K2, (0, -1)) == LaurentPoly.variable(2, 1)


def test_delta_character_is_parameter_free(K2):
    a = cc_character(K2, (1, 1), [[[1]], [[2]]]).character
    b = cc_character(K2, (1, 1), [[[1]], [[5]]]).character
    assert a == b
    assert a == generic_character(K2, (1, 1))
    assert a == X(2, {(-1, -1): 1, (1, -1): 1, (-1, 1): 1})


def test_euler_characteristics(K2):
    rep = cc_character(K2, (1, 1), [[[1]], [[3]]])
    assert rep.euler == {(0, 0): 1, (0, 1): 1, (1, 0): 0, (1, 1): 1}


def test_multiplicative(K2):
    # S_1 + S_2 as an explicit direct sum
    m1 = [np.zeros((0, 1))] * 2
    m2 = [np.zeros((1, 0))] * 2
    mats = direct_sum_matrices(K2, (1, 0), m1, (0, 1), m2)
    s = cc_character(K2, (1, 1), mats).character
    assert s == generic_character(K2, (1, 0)) * generic_character(K2, (0, 1))


def test_multiplicative_a3(A3):
    d1, d2 = (1, 1, 0), (0, 1, 1)
    m1 = [[[1]], np.zeros((0, 1))]
    m2 = [np.zeros((1, 0)), [[1]]]
    mats = direct_sum_matrices(A3, d1, m1, d2, m2)
    s = cc_character(A3, (1, 2, 1), mats).character
    assert s == cc_character(A3, d1, m1).character * cc_character(A3, d2, m2).character


def test_rigid_seed_independence(K2):
    a = generic_character(K2, (2, 3), seeds=(0, 1, 2))
    b = generic_character(K2, (2, 3), seeds=(7,), primes=prime_list(6, 29))
    assert a == b
    assert min(a.min_exponents()) >= -3


def test_not_polynomial_detected(K2):
    # the two images (1,1) and (1,12) are independent except modulo 11
    mats = [[[1], [1]], [[1], [12]]]
    with pytest.raises(GenericityError):
        cc_character(K2, (1, 2), mats, primes=(11, 13, 17))
    assert cc_character(K2, (1, 2), mats, primes=(13, 17, 19)).character == generic_character(K2, (1, 2))


def test_guards(K2):
    with pytest.raises(GuardError):
        generic_character(K2, (3, 4))
    with pytest.raises(DomainError):
        cc_character(K2, (1, 1), [[[1]], [[2]]], primes=(11,))


def test_affine_exchange_identity(K2):
    assert verify_affine_exchange(K2, (1, 2), (2, 3), (0, 1)).ok
    assert verify_affine_exchange(K2, (0, 1), (1, 2), (-1, 0)).ok
    bad = verify_affine_exchange(K2, (1, 2), (2, 3), (1, 0))
    assert not bad.ok and bad.lhs != bad.rhs


def test_exchange_refuses_non_rigid(A2t):
    with pytest.raises(DomainError):
        verify_affine_exchange(A2t, (0, 1, 0), delta(A2t), (1, 0, 1))
