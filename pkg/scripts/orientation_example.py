"""The 5-vertex example: clusters containing (1;1,2,2,1) for both orientations.

Each member is checked against random representations over F_p, and the
orthogonality of (0;0,1,1,1) is reported in both orientations.
"""
from compclust.clusters import (EXAMPLE_ALPHA, EXAMPLE_ALPHA_PRIME, orientation_quiver, paper_example,
                                wild_imaginary_bound)
from compclust.oracle import oracle_ext


def main():
    for o in "AB":
        Q = orientation_quiver(o)
        C = paper_example(o)
        print(f"orientation {o}: {C}  size {len(C)}  wild bound {wild_imaginary_bound(Q)}")
        for r in C:
            if r != EXAMPLE_ALPHA:
                print(f"   ext(alpha, {r}) = {oracle_ext(Q, EXAMPLE_ALPHA, r)},"
                      f" ext({r}, alpha) = {oracle_ext(Q, r, EXAMPLE_ALPHA)}  (F_1009, 25 trials)")
        a, b = oracle_ext(Q, EXAMPLE_ALPHA, EXAMPLE_ALPHA_PRIME), oracle_ext(Q, EXAMPLE_ALPHA_PRIME, EXAMPLE_ALPHA)
        print(f"   alpha' = {EXAMPLE_ALPHA_PRIME}: ext = {a}, {b}")


if __name__ == "__main__":
    main()
