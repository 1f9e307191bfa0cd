"""Affine exchange relations on the Kronecker quiver and their character identities."""
from compclust.affine import delta_clusters
from compclust.character import generic_character, verify_affine_exchange
from compclust.clusters import affine_exchange
from compclust.homext import format_root
from compclust.quiver import kronecker


def main():
    Q = kronecker()
    C = delta_clusters(Q)[0]
    print(f"X_delta = {generic_character(Q, (1, 1))}")
    for beta in [(0, 1), (1, 2)]:
        b1, b1p = affine_exchange(Q, C, beta)
        check = verify_affine_exchange(Q, beta, b1, b1p)
        print(f"beta={format_root(beta)}  beta1={format_root(b1)}  beta1'={format_root(b1p)}"
              f"  identity holds: {check.ok}")
    check = verify_affine_exchange(Q, (1, 2), (2, 3), (1, 0))
    print(f"control with wrong beta1' = (1,0): identity holds: {check.ok}")


if __name__ == "__main__":
    main()
