from itertools import combinations
from math import comb, gcd

import pytest
from sympy import Matrix

from compclust.affine import (Interval, RegularClass, compatible, defect, delta, delta_clusters,
                              extending_vertices, injective_dim, interval_of_root,
                              lattice_rank_purity, maximal_rigid_sets, projective_dim,
                              regular_class, root_of_interval, tube_lcm, tube_of, tube_orthogonal,
                              tubes)
from compclust.errors import DomainError, NotFoundError
from compclust.homext import ext_orthogonal, hom_generic
from compclust.oracle import oracle_ext
from compclust.quiver import Quiver, coxeter_apply, kronecker, sym_form, unit


def test_delta(K2, A2t, D4t):
    assert delta(K2) == (1, 1)
    assert delta(A2t) == (1, 1, 1)
    assert delta(D4t) == (2, 1, 1, 1, 1)


@pytest.mark.parametrize("name", ["K2", "A2t", "D4t", "A3t"])
def test_delta_is_radical(name, request):
    Q = request.getfixturevalue(name)
    d = delta(Q)
    assert all(sym_form(Q, d, unit(Q, i)) == 0 for i in range(Q.n))
    assert coxeter_apply(Q, d) == d


def test_delta_needs_affine(K3):
    with pytest.raises(DomainError):
        delta(K3)


def test_regular_class(K2):
    assert regular_class(K2, (0, 1)) is RegularClass.PREPROJECTIVE
    assert regular_class(K2, (1, 2)) is RegularClass.PREPROJECTIVE
    assert regular_class(K2, (1, 0)) is RegularClass.PREINJECTIVE
    assert regular_class(K2, (2, 2)) is RegularClass.REGULAR
    with pytest.raises(DomainError):
        regular_class(K2, (1, 3))


@pytest.mark.parametrize("name", ["K2", "A2t", "D4t", "A3t"])
def test_projectives_have_defect_delta_e(name, request):
    Q = request.getfixturevalue(name)
    d = delta(Q)
    for e in range(Q.n):
        assert defect(Q, projective_dim(Q, e)) == d[e]
        assert defect(Q, injective_dim(Q, e)) == -d[e]


def test_extending(D4t, K2):
    assert extending_vertices(D4t) == {1, 2, 3, 4}
    assert extending_vertices(K2) == {0, 1}


def test_tubes(K2, A2t, D4t, A3t):
    assert tubes(K2) == []
    assert [T.rank for T in tubes(A2t)] == [2]
    assert tubes(A2t)[0].simples == ((0, 1, 0), (1, 0, 1))
    assert [T.rank for T in tubes(D4t)] == [2, 2, 2]
    assert [T.rank for T in tubes(A3t)] == [3]
    assert tube_lcm(D4t) == 2 and tube_lcm(K2) == 1


@pytest.mark.parametrize("name", ["A2t", "D4t", "A3t"])
def test_tube_simples_are_regular_and_hom_orthogonal(name, request):
    Q = request.getfixturevalue(name)
    for T in tubes(Q):
        for s in T.simples:
            assert defect(Q, s) == 0
        for s, t in combinations(T.simples, 2):
            assert hom_generic(Q, s, t) == 0 and hom_generic(Q, t, s) == 0


def test_intervals(A2t):
    T = tubes(A2t)[0]
    assert root_of_interval(T, Interval(0, 1, 2)) == (0, 1, 0)
    assert root_of_interval(T, Interval(1, 2, 2)) == (1, 0, 1)
    assert root_of_interval(T, Interval(0, 2, 2)) == (1, 1, 1)
    assert interval_of_root(T, (1, 1, 1)) == Interval(0, 2, 2)
    with pytest.raises(NotFoundError):
        interval_of_root(T, (1, 0, 0))
    with pytest.raises(DomainError):
        Interval(1, 1, 2)


def test_interval_compatibility():
    I, J, K = Interval(0, 1, 3), Interval(2, 3, 3), Interval(0, 3, 3)
    assert compatible(I, J)
    assert compatible(I, K)
    assert not compatible(Interval(0, 2, 3), Interval(1, 3, 3))


@pytest.mark.parametrize("name", ["A2t", "D4t"])
def test_interval_model_rank_two(name, request):
    Q = request.getfixturevalue(name)
    for T in tubes(Q):
        mem = [v for _, _, v in T.rigid_members()]
        for x, y in combinations(mem, 2):
            assert compatible(interval_of_root(T, x), interval_of_root(T, y)) == ext_orthogonal(Q, x, y)


def test_interval_model_rank_three_records_mismatch(A3t):
    # the set-compatibility model and ext-orthogonality disagree on a rank-3 tube
    T = tubes(A3t)[0]
    mem = [v for _, _, v in T.rigid_members()]
    mismatches = [(x, y) for x, y in combinations(mem, 2)
                  if compatible(interval_of_root(T, x), interval_of_root(T, y)) != ext_orthogonal(A3t, x, y)]
    assert len(mismatches) == 2
    # the uniserial Hom rule agrees with the recursion on every pair
    items = {v: (a, l) for a, l, v in T.rigid_members()}
    for x, y in combinations(mem, 2):
        assert tube_orthogonal(T, items[x], items[y]) == ext_orthogonal(A3t, x, y)
        assert ext_orthogonal(A3t, x, y) == (oracle_ext(A3t, x, y, trials=5) == 0
                                             and oracle_ext(A3t, y, x, trials=5) == 0)


@pytest.mark.parametrize("name", ["A2t", "D4t", "A3t"])
def test_maximal_rigid_sets_count(name, request):
    Q = request.getfixturevalue(name)
    for T in tubes(Q):
        sets = maximal_rigid_sets(T)
        assert len(sets) == comb(2 * T.rank - 2, T.rank - 1)
        for s in sets:
            assert all(ext_orthogonal(Q, x, y) for x, y in combinations(s, 2))


def test_regular_roots_in_different_tubes_are_orthogonal(D4t):
    ts = tubes(D4t)
    for T, U in combinations(ts, 2):
        for _, _, x in T.rigid_members():
            for _, _, y in U.rigid_members():
                assert ext_orthogonal(D4t, x, y)
    assert tube_of(D4t, ts[1].simples[0]) is ts[1]
    assert tube_of(D4t, (2, 1, 1, 1, 1)) is None


def test_delta_clusters(K2, A2t, D4t, A3t):
    assert [str(C) for C in delta_clusters(K2)] == ["{(1,1)}"]
    assert [str(C) for C in delta_clusters(A2t)] == ["{(0,1,0), (1,1,1)}", "{(1,0,1), (1,1,1)}"]
    assert len(delta_clusters(D4t)) == 8
    assert len(delta_clusters(A3t)) == 6
    for Q in (K2, A2t, D4t, A3t):
        for C in delta_clusters(Q):
            assert len(C) == Q.n - 1 and C.global_maximal


def minors_gcd(rows, k):
    # elementary-divisor product d_1...d_k is the gcd of the k x k minors
    M = Matrix(rows)
    g = 0
    for r in combinations(range(M.rows), k):
        for c in combinations(range(M.cols), k):
            g = gcd(g, int(M.extract(list(r), list(c)).det()))
    return abs(g)


@pytest.mark.parametrize("name", ["K2", "A2t", "D4t", "A3t"])
def test_lattice_purity(name, request):
    Q = request.getfixturevalue(name)
    for C in delta_clusters(Q):
        rank, pure = lattice_rank_purity(C.roots)
        assert rank == Q.n - 1
        assert pure
        assert minors_gcd(C.roots, rank) == 1


def test_lattice_purity_detects_index():
    assert lattice_rank_purity([(2, 0), (0, 1)]) == (2, False)
    assert lattice_rank_purity([(1, 1), (2, 2)]) == (1, True)
    assert minors_gcd([(2, 0), (0, 1)], 2) == 2
