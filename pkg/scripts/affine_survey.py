"""Delta, tubes, delta-clusters and the interval model on a few affine quivers."""
from itertools import combinations

from compclust.affine import (compatible, delta, delta_clusters, interval_of_root,
                              lattice_rank_purity, maximal_rigid_sets, tubes)
from compclust.clusters import enumerate_clusters, extension_witness
from compclust.homext import ext_orthogonal
from compclust.quiver import Quiver, affine_a2, affine_d4, kronecker

CASES = [
    ("Kronecker", kronecker()),
    ("A2~", affine_a2()),
    ("A3~ (3,1)", Quiver.from_arrows(4, [(1, 2), (2, 3), (3, 4), (1, 4)])),
    ("D4~", affine_d4()),
]


def interval_mismatches(Q, T):
    mem = [v for _, _, v in T.rigid_members()]
    return sum(compatible(interval_of_root(T, x), interval_of_root(T, y)) != ext_orthogonal(Q, x, y)
               for x, y in combinations(mem, 2))


def main():
    for name, Q in CASES:
        d = delta(Q)
        ts = tubes(Q)
        print(f"== {name}: delta = {d}, tube ranks {[T.rank for T in ts]}")
        for T in ts:
            print(f"   tube {T.simples}: {len(maximal_rigid_sets(T))} maximal rigid sets,"
                  f" interval-model mismatches {interval_mismatches(Q, T)}")
        dcs = delta_clusters(Q)
        pure = all(lattice_rank_purity(C.roots) == (Q.n - 1, True) for C in dcs)
        print(f"   {len(dcs)} delta-clusters, all pure of rank n-1: {pure}")
        found = enumerate_clusters(Q, d)
        short = [C for C in found if d not in C and len(C) < Q.n]
        print(f"   cap delta: {len(found)} bound-maximal cliques, {len(short)} truncated")
        for C in short:
            print(f"     {C} extended by {extension_witness(Q, C.roots, d)}")


if __name__ == "__main__":
    main()
