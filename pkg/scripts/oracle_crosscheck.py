"""Compare the ext recursion with random representations over F_p on small boxes."""
import argparse
import time
from dataclasses import dataclass

from compclust.homext import ext_generic, is_schur_root
from compclust.oracle import oracle_end, oracle_ext
from compclust.quiver import box, kronecker, linear_quiver


@dataclass
class Config:
    prime: int = 1009
    trials: int = 25
    seed: int = 0


CASES = [("Kronecker", kronecker(), (3, 3)), ("3-Kronecker", kronecker(3), (3, 3)),
         ("A3", linear_quiver(3), (2, 2, 2))]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--prime", type=int, default=Config.prime)
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**vars(ap.parse_args()))
    print(f"# prime={cfg.prime} trials={cfg.trials} seed={cfg.seed}")
    print(f"{'quiver':<12} {'pairs':>6} {'ext diff':>9} {'schur diff':>11} {'secs':>6}")
    for name, Q, cap in CASES:
        t = time.perf_counter()
        vecs = box(cap)
        pairs = ext_bad = schur_bad = 0
        for a in vecs:
            for b in vecs:
                pairs += 1
                ext_bad += ext_generic(Q, a, b) != oracle_ext(Q, a, b, cfg.prime, cfg.trials, cfg.seed)
            if any(a):
                schur_bad += is_schur_root(Q, a) != (oracle_end(Q, a, cfg.prime, cfg.trials, cfg.seed) == 1)
        print(f"{name:<12} {pairs:>6} {ext_bad:>9} {schur_bad:>11} {time.perf_counter() - t:>6.1f}")


if __name__ == "__main__":
    main()
