"""Affine quivers: delta, the preprojective/regular/preinjective split, tubes,
interval labels of tube roots, delta-clusters and lattice purity."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .errors import DomainError, InternalError, NotFoundError
from .homext import ext_orthogonal, is_schur_root, root_key
from .quiver import (Quiver, QuiverClass, RootType, _check, box, coxeter_apply,
                     euler_form, is_root, quiver_class, tits_form, vadd)


class RegularClass(enum.Enum):
    PREPROJECTIVE = "Preprojective"
    REGULAR = "Regular"
    PREINJECTIVE = "Preinjective"


def _require_affine(Q: Quiver):
    if quiver_class(Q) is not QuiverClass.AFFINE:
        raise DomainError("operation needs a connected affine quiver")


def delta(Q: Quiver) -> tuple:
    """Primitive positive generator of the radical of the symmetrized form."""
    memo = Q.cache.get("delta")
    if memo is not None:
        return memo
    _require_affine(Q)
    n = Q.n
    M = [[Fraction(x) for x in row] for row in Q.gram]
    pivots, r = [], 0
    for c in range(n):
        piv = next((i for i in range(r, n) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        M[r] = [x / M[r][c] for x in M[r]]
        for i in range(n):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise InternalError(f"radical has dimension {len(free)}")
    f = free[0]
    v = [Fraction(0)] * n
    v[f] = Fraction(1)
    for row, c in enumerate(pivots):
        v[c] = -M[row][f]
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    if sum(ints) < 0:
        ints = [-x for x in ints]
    d = tuple(ints)
    if any(x <= 0 for x in d) or tits_form(Q, d) != 0:
        raise InternalError(f"radical generator {d} is not a sincere isotropic vector")
    Q.cache["delta"] = d
    return d


def defect(Q: Quiver, d) -> int:
    """<d, delta>: positive on preprojectives, negative on preinjectives."""
    return euler_form(Q, d, delta(Q))


def regular_class(Q: Quiver, d) -> RegularClass:
    (d,) = _check(Q, d)
    if not any(d) or is_root(Q, d) in (RootType.NOT_A_ROOT, RootType.NEGATIVE_SIMPLE):
        raise DomainError(f"{d} is not a positive root")
    x = defect(Q, d)
    if x > 0:
        return RegularClass.PREPROJECTIVE
    if x < 0:
        return RegularClass.PREINJECTIVE
    return RegularClass.REGULAR


def extending_vertices(Q: Quiver) -> frozenset:
    return frozenset(i for i, x in enumerate(delta(Q)) if x == 1)


def projective_dim(Q: Quiver, e: int) -> tuple:
    """dim P_e: number of paths from e to each vertex."""
    return tuple(Q.euler_inverse[e])


def injective_dim(Q: Quiver, e: int) -> tuple:
    return tuple(Q.euler_inverse[i][e] for i in range(Q.n))


# ---------------------------------------------------------------- tubes

@dataclass(frozen=True)
class Tube:
    """Exceptional tube given by its regular simples, s[k+1] = Phi s[k]."""

    simples: tuple
    delta: tuple

    @property
    def rank(self) -> int:
        return len(self.simples)

    def module(self, start: int, length: int) -> tuple:
        """Dimension vector of the regular module with factors s[start], ..., s[start+length-1]."""
        v = (0,) * len(self.delta)
        for k in range(length):
            v = vadd(v, self.simples[(start + k) % self.rank])
        return v

    def rigid_members(self) -> list:
        """(start, length, vector) for every real Schur root of the tube (length < rank)."""
        return [(a, l, self.module(a, l)) for l in range(1, self.rank) for a in range(self.rank)]


def tubes(Q: Quiver) -> list:
    memo = Q.cache.get("tubes")
    if memo is not None:
        return memo
    d = delta(Q)
    pool = set()
    for v in box(d):
        if any(v) and v != d and tits_form(Q, v) == 1 and defect(Q, v) == 0 and is_schur_root(Q, v):
            pool.add(v)
    out, seen = [], set()
    for v in sorted(pool):
        if v in seen:
            continue
        orbit = [v]
        w = coxeter_apply(Q, v)
        while w != v:
            if w not in pool or len(orbit) > Q.n + 1:
                raise InternalError(f"Coxeter orbit of {v} leaves the regular roots below delta")
            orbit.append(w)
            w = coxeter_apply(Q, w)
        seen.update(orbit)
        total = tuple(sum(c) for c in zip(*orbit))
        if total == d:
            start = min(orbit)
            k = orbit.index(start)
            out.append(Tube(tuple(orbit[k:] + orbit[:k]), d))
    out.sort(key=lambda T: T.simples)
    if sum(T.rank - 1 for T in out) != Q.n - 2:
        raise InternalError(f"tube ranks {[T.rank for T in out]} do not satisfy sum(p-1) = n-2")
    Q.cache["tubes"] = out
    return out


def tube_of(Q: Quiver, d):
    """The tube containing the real regular Schur root d, or None."""
    for T in tubes(Q):
        for _, _, v in T.rigid_members():
            if v == tuple(d):
                return T
    return None


@dataclass(frozen=True)
class Interval:
    """Cyclic interval [i, j] = {i, i+1, ..., j} of Z/(rank+1)."""

    i: int
    j: int
    rank: int

    def __post_init__(self):
        if not (0 <= self.i <= self.rank and 0 <= self.j <= self.rank) or self.i == self.j:
            raise DomainError(f"[{self.i},{self.j}] is not an interval for rank {self.rank}")

    @property
    def length(self) -> int:
        """Number of regular simples in the composition series."""
        return (self.j - self.i) % (self.rank + 1)

    def points(self) -> frozenset:
        m = self.rank + 1
        return frozenset((self.i + k) % m for k in range(self.length + 1))

    def __str__(self):
        return f"[{self.i},{self.j}]"


def compatible(I: Interval, J: Interval) -> bool:
    """Disjoint or nested as subsets of Z/(rank+1)."""
    if I.rank != J.rank:
        raise DomainError("intervals of different tube ranks")
    a, b = I.points(), J.points()
    return not (a & b) or a <= b or b <= a


def root_of_interval(T: Tube, I: Interval) -> tuple:
    """Sum of the simples tau^{-i}S, ..., tau^{-j+1}S; [0, rank] is delta."""
    if I.rank != T.rank:
        raise DomainError("interval rank does not match the tube")
    if I.length >= T.rank:
        return T.delta
    return T.module(I.i % T.rank, I.length)


def interval_of_root(T: Tube, d) -> Interval:
    d = tuple(d)
    p = T.rank
    if d == T.delta:
        return Interval(0, p, p)
    for a, l, v in T.rigid_members():
        if v == d:
            j = a + l
            return Interval(a, j if j <= p else j - p - 1, p)
    raise NotFoundError(f"{d} is not a Schur root of the tube {T.simples}")


def tube_orthogonal(T: Tube, x: tuple, y: tuple) -> bool:
    """Ext-orthogonality of rigid tube modules x = (start, length), y likewise.

    Uses Ext^1(X, Y) = D Hom(Y, tau X) for uniserial modules with socle
    s[start] and top s[start+length-1].
    """
    p = T.rank

    def hom(src, dst):
        (b, lb), (c, lc) = src, dst
        return any((b + lb - k - c) % p == 0 for k in range(1, min(lb, lc) + 1))

    (a, la), (b, lb) = x, y
    return not hom((b, lb), (a - 1, la)) and not hom((a, la), (b - 1, lb))


def maximal_rigid_sets(T: Tube) -> list:
    """All maximal sets of pairwise ext-orthogonal real Schur roots of the tube."""
    items = sorted(((a, l) for a, l, _ in T.rigid_members()), key=lambda x: (x[1], x[0]))
    adj = {x: {y for y in items if y != x and tube_orthogonal(T, x, y)} for x in items}
    found = []

    def extend(chosen, cand, excl):
        if not cand and not excl:
            found.append(chosen)
            return
        for x in list(cand):
            extend(chosen + [x], [y for y in cand if y in adj[x]], [y for y in excl if y in adj[x]])
            cand.remove(x)
            excl.append(x)

    extend([], list(items), [])
    out = []
    for sel in found:
        if len(sel) != T.rank - 1:
            raise InternalError(f"maximal rigid set {sel} has {len(sel)} != rank - 1 members")
        if any(all(y in adj[x] for x in sel) for y in items if y not in sel):
            raise InternalError(f"rigid set {sel} is not maximal")
        out.append(tuple(sorted((T.module(a, l) for a, l in sel), key=root_key)))
    return sorted(set(out))


def delta_clusters(Q: Quiver) -> list:
    """Every component cluster containing delta: delta plus one maximal rigid set per tube."""
    from .clusters import ComponentCluster, certify_cluster

    d = delta(Q)
    per_tube = [maximal_rigid_sets(T) for T in tubes(Q)]
    out = []
    for choice in product(*per_tube):
        roots = [d] + [r for part in choice for r in part]
        C = ComponentCluster(tuple(sorted(roots, key=root_key)), d, True)
        certify_cluster(Q, C)
        if len(C) != Q.n - 1:
            raise InternalError(f"delta-cluster {C} has size {len(C)} != n-1")
        out.append(C)
    return sorted(out, key=lambda C: C.sort_key())


def lattice_rank_purity(roots) -> tuple:
    """(rank, saturated?) of the Z-span of ``roots`` via Smith normal form."""
    roots = [tuple(int(x) for x in r) for r in roots]
    if not roots:
        raise DomainError("need at least one vector")
    factors = [int(f) for f in invariant_factors(Matrix(roots), domain=ZZ)]
    nonzero = [abs(f) for f in factors if f != 0]
    return len(nonzero), all(f == 1 for f in nonzero)


def tube_lcm(Q: Quiver) -> int:
    ranks = [T.rank for T in tubes(Q)]
    return lcm(*ranks) if ranks else 1
