"""Bounded mutation graphs as DOT files, with a connectivity check."""
import argparse
from pathlib import Path

from compclust.clusters import enumerate_clusters, is_connected, mutation_edges, to_dot
from compclust.quiver import affine_a2, kronecker, linear_quiver

CASES = [("kronecker", kronecker(), (3, 4)), ("affine_a2", affine_a2(), (2, 2, 2)),
         ("a3", linear_quiver(3), (1, 1, 1))]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="mutation_graphs")
    out = Path(ap.parse_args().out)
    out.mkdir(exist_ok=True)
    for name, Q, cap in CASES:
        found = enumerate_clusters(Q, cap)
        edges = mutation_edges(found)
        (out / f"{name}.dot").write_text(to_dot(found, edges))
        sizes = sorted({len(C) for C in found})
        print(f"{name:<10} cap={cap} clusters={len(found)} sizes={sizes} edges={len(edges)}"
              f" connected={is_connected(len(found), edges)}")


if __name__ == "__main__":
    main()
