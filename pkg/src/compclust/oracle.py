"""Brute-force verification over prime fields.

Random representations are drawn from numpy's PCG64 with a ``SeedSequence``
keyed by (seed..., arrow index), so every matrix is reproducible on its own.
All linear algebra is exact modulo p.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .errors import DomainError, GuardError
from .quiver import Quiver, _check, euler_form

DEFAULT_PRIME = 1009
DEFAULT_TRIALS = 25
GRASSMANNIAN_GUARD = 8


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


def rank_mod_p(M, p: int) -> int:
    """Rank of an integer matrix over F_p (dense Gaussian elimination)."""
    A = np.array(M, dtype=np.int64) % p
    if A.size == 0:
        return 0
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), p - 2, p)) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        r += 1
    return r


@dataclass(frozen=True)
class FpRep:
    """Representation over F_p: one (dim[t] x dim[s]) matrix per arrow."""

    quiver: Quiver
    dim: tuple
    matrices: tuple
    p: int
    seed: tuple = field(default=())

    def __post_init__(self):
        if len(self.matrices) != len(self.quiver.arrows):
            raise DomainError("one matrix per arrow is required")
        for (s, t), A in zip(self.quiver.arrows, self.matrices):
            if A.shape != (self.dim[t], self.dim[s]):
                raise DomainError(f"matrix for arrow {s + 1}->{t + 1} has shape {A.shape}")

    @classmethod
    def from_integer(cls, Q: Quiver, d, mats, p: int, seed=()) -> "FpRep":
        (d,) = _check(Q, d)
        reduced = tuple(np.array(A, dtype=np.int64).reshape(d[t], d[s]) % p
                        for (s, t), A in zip(Q.arrows, mats))
        return cls(Q, d, reduced, p, tuple(seed))


def _seed_tuple(seed) -> tuple:
    return tuple(seed) if isinstance(seed, (tuple, list)) else (int(seed),)


def integer_matrices(Q: Quiver, d, seed, high: int) -> tuple:
    """Integer matrices with entries uniform in [0, high), one stream per arrow."""
    (d,) = _check(Q, d)
    seed = _seed_tuple(seed)
    mats = []
    for k, (s, t) in enumerate(Q.arrows):
        rng = np.random.default_rng(np.random.SeedSequence([*seed, k]))
        mats.append(rng.integers(0, high, size=(d[t], d[s]), dtype=np.int64))
    return tuple(mats)


def sample_rep(Q: Quiver, d, p: int = DEFAULT_PRIME, seed=0) -> FpRep:
    (d,) = _check(Q, d)
    if any(x < 0 for x in d):
        raise DomainError(f"{d} has negative entries")
    if p < 101 or not _is_prime(p):
        raise DomainError(f"sampling prime must be a prime >= 101, got {p}")
    return FpRep(Q, d, integer_matrices(Q, d, seed, p), p, _seed_tuple(seed))


def hom_dim(M: FpRep, N: FpRep) -> int:
    """dim Hom(M, N): solutions of f_t M_a = N_a f_s for every arrow a: s -> t."""
    if M.p != N.p:
        raise DomainError(f"prime mismatch {M.p} vs {N.p}")
    if M.quiver != N.quiver:
        raise DomainError("representations of different quivers")
    Q, p = M.quiver, M.p
    offsets, total = [], 0
    for i in range(Q.n):
        offsets.append(total)
        total += M.dim[i] * N.dim[i]
    if total == 0:
        return 0
    blocks = []
    for (s, t), Ma, Na in zip(Q.arrows, M.matrices, N.matrices):
        rows = N.dim[t] * M.dim[s]
        if rows == 0:
            continue
        B = np.zeros((rows, total), dtype=np.int64)
        # row-major vec: vec(f_t M_a) = (I kron M_a^T) vec(f_t), vec(N_a f_s) = (N_a kron I) vec(f_s)
        ot, os_ = offsets[t], offsets[s]
        B[:, ot:ot + N.dim[t] * M.dim[t]] += np.kron(np.eye(N.dim[t], dtype=np.int64), Ma.T)
        B[:, os_:os_ + N.dim[s] * M.dim[s]] -= np.kron(Na, np.eye(M.dim[s], dtype=np.int64))
        blocks.append(B)
    if not blocks:
        return total
    return total - rank_mod_p(np.vstack(blocks), p)


def end_dim(M: FpRep) -> int:
    return hom_dim(M, M)


def oracle_hom(Q: Quiver, a, b, p=DEFAULT_PRIME, trials=DEFAULT_TRIALS, seed=0) -> int:
    if trials < 1:
        raise DomainError("trials must be >= 1")
    floor = max(0, euler_form(Q, a, b))  # hom >= <a, b> always, so the min cannot go lower
    best = None
    for t in range(trials):
        h = hom_dim(sample_rep(Q, a, p, (seed, t, 0)), sample_rep(Q, b, p, (seed, t, 1)))
        best = h if best is None else min(best, h)
        if best == floor:
            break
    return best


def oracle_ext(Q: Quiver, a, b, p=DEFAULT_PRIME, trials=DEFAULT_TRIALS, seed=0) -> int:
    """Generic ext estimated as min over samples of hom - <a, b>."""
    return oracle_hom(Q, a, b, p, trials, seed) - euler_form(Q, a, b)


def oracle_end(Q: Quiver, d, p=DEFAULT_PRIME, trials=DEFAULT_TRIALS, seed=0) -> int:
    if trials < 1:
        raise DomainError("trials must be >= 1")
    return min(end_dim(sample_rep(Q, d, p, (seed, t, 2))) for t in range(trials))


def oracle_is_schur(Q: Quiver, d, p=DEFAULT_PRIME, trials=DEFAULT_TRIALS, seed=0) -> bool:
    return oracle_end(Q, d, p, trials, seed) == 1


# ---------------------------------------------------------------- quiver Grassmannians

def subspaces(m: int, k: int, p: int):
    """Yield (basis, annihilator) for every k-dimensional subspace of F_p^m (RREF order)."""
    for pivots in combinations(range(m), k):
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, m) if c not in pivots]
        for values in product(range(p), repeat=len(free)):
            B = np.zeros((k, m), dtype=np.int64)
            for r, pc in enumerate(pivots):
                B[r, pc] = 1
            for (r, c), x in zip(free, values):
                B[r, c] = x
            K = np.zeros((m - k, m), dtype=np.int64)
            for row, c in enumerate(c for c in range(m) if c not in pivots):
                K[row, c] = 1
                for r, pc in enumerate(pivots):
                    K[row, pc] = (-B[r, c]) % p
            yield B, K


def grassmannian_count(M: FpRep, e) -> int:
    """Number of subrepresentations of M with dimension vector e."""
    Q, p = M.quiver, M.p
    (e,) = _check(Q, e)
    if any(x < 0 or x > m for x, m in zip(e, M.dim)):
        raise DomainError(f"{e} is not between 0 and {M.dim}")
    if sum(M.dim) > GRASSMANNIAN_GUARD:
        raise GuardError(f"total dimension {sum(M.dim)} exceeds {GRASSMANNIAN_GUARD}")
    choices = [list(subspaces(M.dim[i], e[i], p)) for i in range(Q.n)]
    checks = [[] for _ in range(Q.n)]
    for (s, t), A in zip(Q.arrows, M.matrices):
        if e[s] == 0 or e[t] == M.dim[t]:
            continue
        checks[max(s, t)].append((s, t, A))

    def stable(chosen, v):
        for s, t, A in checks[v]:
            B = chosen[s][0]
            K = chosen[t][1]
            if np.any((K @ A @ B.T) % p):
                return False
        return True

    def count(v, chosen):
        if v == Q.n:
            return 1
        total = 0
        for U in choices[v]:
            chosen.append(U)
            if stable(chosen, v):
                total += count(v + 1, chosen)
            chosen.pop()
        return total

    return count(0, [])
