"""Caldero-Chapoton characters by counting points of quiver Grassmannians.

    X_M = sum_e chi(Gr_e(M)) * prod_i x_i^(-<e, e_i> - <e_i, m - e>)

chi(Gr_e) is the value at q = 1 of the point-count polynomial, which is
recovered by interpolating counts over several primes (one extra prime is
always used as a consistency check).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sympy import Poly, interpolate, nextprime, symbols

from .errors import DomainError, GenericityError, GuardError
from .homext import format_root, is_negative_simple, is_schur_root
from .oracle import GRASSMANNIAN_GUARD, FpRep, grassmannian_count, integer_matrices
from .quiver import Quiver, RootType, _check, box, euler_form, is_root, unit, vsub

GENERIC_GUARD = 6
GENERIC_ATTEMPTS = 8
SMALLEST_PRIME = 11
MATRIX_ENTRY_BOUND = 2 ** 30
_q = symbols("q")


class LaurentPoly:
    """Integer Laurent polynomial in x_1..x_n stored as {exponent tuple: coefficient}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != n:
                raise DomainError(f"exponent {exp} has wrong length for {n} variables")
            c = clean.get(exp, 0) + int(c)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self.terms = clean

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls(len(exp), {tuple(exp): coef})

    @classmethod
    def variable(cls, n, i):
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    def _same(self, other):
        if not isinstance(other, LaurentPoly) or other.n != self.n:
            raise DomainError("Laurent polynomials in different variables")

    def __add__(self, other):
        self._same(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return LaurentPoly(self.n, t)

    def __sub__(self, other):
        return self + LaurentPoly(other.n, {e: -c for e, c in other.terms.items()})

    def __mul__(self, other):
        self._same(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly(self.n, t)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def min_exponents(self):
        if not self.terms:
            return None
        return tuple(min(col) for col in zip(*self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            mono = " ".join(f"x{i + 1}^{a}" for i, a in enumerate(exp))
            parts.append(f"{self.terms[exp]} * {mono}")
        return " + ".join(parts)

    __repr__ = __str__


def _exponent(Q: Quiver, e, m) -> tuple:
    rest = vsub(m, e)
    return tuple(-euler_form(Q, e, unit(Q, i)) - euler_form(Q, unit(Q, i), rest) for i in range(Q.n))


def _grass_degree(e, m) -> int:
    return sum(a * (b - a) for a, b in zip(e, m))


def prime_list(count: int, start: int = SMALLEST_PRIME) -> tuple:
    out, p = [], start - 1
    while len(out) < count:
        p = nextprime(p)
        out.append(int(p))
    return tuple(out)


@dataclass(frozen=True)
class CCReport:
    dim: tuple
    seed: tuple
    primes: tuple
    character: LaurentPoly
    euler: dict = field(default_factory=dict)       # e -> chi(Gr_e)
    counts: dict = field(default_factory=dict)      # e -> point-count polynomial (coefficients, high to low)

    def __str__(self):
        return str(self.character)


def cc_character(Q: Quiver, d, matrices, primes=None, seed=()) -> CCReport:
    """Character of the representation given by integer ``matrices``, reduced mod each prime."""
    (d,) = _check(Q, d)
    if any(x < 0 for x in d):
        raise DomainError(f"{d} has negative entries")
    if sum(d) > GRASSMANNIAN_GUARD:
        raise GuardError(f"total dimension {sum(d)} exceeds {GRASSMANNIAN_GUARD}")
    need = max(_grass_degree(e, d) for e in box(d)) + 2
    if primes is None:
        primes = prime_list(need)
    primes = tuple(primes)
    if len(primes) < need:
        raise DomainError(f"need at least {need} primes for dimension vector {d}")
    reps = [FpRep.from_integer(Q, d, matrices, p, seed) for p in primes]
    chi, polys = {}, {}
    char = LaurentPoly(Q.n)
    for e in box(d):
        k = _grass_degree(e, d) + 1
        pts = [(p, grassmannian_count(M, e)) for p, M in zip(primes[:k + 1], reps[:k + 1])]
        f = Poly(interpolate(pts[:k], _q), _q) if k > 1 else Poly(pts[0][1], _q)
        coeffs = f.all_coeffs()
        if any(not c.is_integer for c in coeffs) or f.eval(pts[k][0]) != pts[k][1]:
            raise GenericityError(
                f"point counts of Gr_{format_root(e)} are not polynomial over primes {primes[:k + 1]}"
                f" (seed {seed}); the matrices are probably not generic")
        chi[e] = int(f.eval(1))
        polys[e] = tuple(int(c) for c in coeffs)
        if chi[e]:
            char = char + LaurentPoly.monomial(_exponent(Q, e, d), chi[e])
    return CCReport(d, tuple(seed), primes, char, chi, polys)


def _sampled_character(Q: Quiver, d, s, primes) -> CCReport:
    # a random integer matrix can degenerate modulo one of the small primes;
    # such draws fail the consistency check and the next draw of the stream is used
    for attempt in range(GENERIC_ATTEMPTS):
        mats = integer_matrices(Q, d, (s, attempt), MATRIX_ENTRY_BOUND)
        try:
            return cc_character(Q, d, mats, primes, (s, attempt))
        except GenericityError:
            continue
    raise GenericityError(f"no generic draw of {d} for seed {s} in {GENERIC_ATTEMPTS} attempts")


def generic_character(Q: Quiver, d, seeds=(0, 1, 2), primes=None) -> LaurentPoly:
    """Common character of random representations of dimension d over several seeds."""
    (d,) = _check(Q, d)
    if any(x < 0 for x in d):
        raise DomainError(f"{d} has negative entries")
    if sum(d) > GENERIC_GUARD:
        raise GuardError(f"total dimension {sum(d)} exceeds {GENERIC_GUARD}")
    if not seeds:
        raise DomainError("need at least one seed")
    values = []
    for s in seeds:
        values.append(_sampled_character(Q, d, s, primes).character)
    if any(v != values[0] for v in values):
        raise GenericityError(f"characters of {d} disagree across seeds {tuple(seeds)}")
    return values[0]


def character_of(Q: Quiver, r, seeds=(0, 1, 2)) -> LaurentPoly:
    """X of a generalized Schur root; -e_i is the shifted projective with X = x_i."""
    (r,) = _check(Q, r)
    if is_negative_simple(r):
        return LaurentPoly.variable(Q.n, r.index(-1))
    return generic_character(Q, r, seeds)


def direct_sum_matrices(Q: Quiver, d1, m1, d2, m2) -> tuple:
    """Block-diagonal matrices of M1 + M2."""
    d1, d2 = _check(Q, d1, d2)
    out = []
    for (s, t), A, B in zip(Q.arrows, m1, m2):
        C = np.zeros((d1[t] + d2[t], d1[s] + d2[s]), dtype=np.int64)
        C[:d1[t], :d1[s]] = np.asarray(A, dtype=np.int64).reshape(d1[t], d1[s])
        C[d1[t]:, d1[s]:] = np.asarray(B, dtype=np.int64).reshape(d2[t], d2[s])
        out.append(C)
    return tuple(out)


def _is_rigid(Q: Quiver, r) -> bool:
    if is_negative_simple(r):
        return True
    return all(x >= 0 for x in r) and is_root(Q, r) is RootType.REAL and is_schur_root(Q, r)


@dataclass(frozen=True)
class ExchangeCheck:
    ok: bool
    lhs: LaurentPoly
    rhs: LaurentPoly

    def __bool__(self):
        return self.ok

    def __str__(self):
        return f"{'holds' if self.ok else 'FAILS'}\n  X_delta X_beta = {self.lhs}\n  X_b1 + X_b1' = {self.rhs}"


def verify_affine_exchange(Q: Quiver, beta, beta1, beta1p, seeds=(0, 1, 2)) -> ExchangeCheck:
    """Exact test of X_delta * X_beta == X_beta1 + X_beta1'."""
    from .affine import delta

    d = delta(Q)
    beta, beta1, beta1p = _check(Q, beta, beta1, beta1p)
    for r in (beta, beta1, beta1p):
        if not _is_rigid(Q, r):
            raise DomainError(f"{format_root(r)} is not a rigid root; the identity is only "
                              "checked for rigid terms")
    lhs = generic_character(Q, d, seeds) * character_of(Q, beta, seeds)
    rhs = character_of(Q, beta1, seeds) + character_of(Q, beta1p, seeds)
    return ExchangeCheck(lhs == rhs, lhs, rhs)
