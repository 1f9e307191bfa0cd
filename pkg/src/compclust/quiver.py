"""Acyclic quivers and their representation-free combinatorics.

Vertices are 0-based internally; the text format and the CLI use 1-based
indices.  Dimension vectors are plain tuples of ints.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, InternalError

Vector = tuple  # tuple[int, ...]


class QuiverClass(enum.Enum):
    DYNKIN = "Dynkin"
    AFFINE = "Affine"
    WILD = "Wild"


class RootType(enum.Enum):
    REAL = "Real"
    ISOTROPIC = "Isotropic"
    IMAGINARY_NON_ISOTROPIC = "ImaginaryNonIsotropic"
    NOT_A_ROOT = "NotARoot"
    NEGATIVE_SIMPLE = "NegativeSimple"


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic quiver; ``arrows`` holds (source, target) pairs, repeats allowed."""

    n: int
    arrows: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("a quiver needs at least one vertex")
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        for s, t in arrows:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise DomainError(f"arrow {s + 1}->{t + 1} out of range")
            if s == t:
                raise DomainError(f"loop at vertex {s + 1}")
        self.topological_order  # raises on cycles

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int]]) -> "Quiver":
        """Build from 1-based arrow pairs."""
        return cls(n, tuple((s - 1, t - 1) for s, t in arrows))

    @cached_property
    def multiplicity(self) -> dict:
        return dict(Counter(self.arrows))

    @cached_property
    def topological_order(self) -> tuple:
        indeg = [0] * self.n
        for _, t in self.arrows:
            indeg[t] += 1
        out = {i: [] for i in range(self.n)}
        for s, t in self.arrows:
            out[s].append(t)
        ready = sorted(i for i in range(self.n) if indeg[i] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for t in out[v]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
            ready.sort()
        if len(order) != self.n:
            raise DomainError("quiver has an oriented cycle")
        return tuple(order)

    @cached_property
    def euler_matrix(self) -> tuple:
        E = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        for (s, t), m in self.multiplicity.items():
            E[s][t] -= m
        return tuple(tuple(r) for r in E)

    @cached_property
    def euler_inverse(self) -> tuple:
        # E = I - A with A nilpotent, so E^-1 = sum of powers of A (path counts)
        n = self.n
        A = [[0] * n for _ in range(n)]
        for (s, t), m in self.multiplicity.items():
            A[s][t] = m
        total = [[int(i == j) for j in range(n)] for i in range(n)]
        power = [row[:] for row in total]
        for _ in range(n):
            power = _matmul(power, A)
            if not any(any(r) for r in power):
                break
            total = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(total, power)]
        return tuple(tuple(r) for r in total)

    @cached_property
    def gram(self) -> tuple:
        """Matrix of the symmetrized Euler form."""
        E = self.euler_matrix
        return tuple(tuple(E[i][j] + E[j][i] for j in range(self.n)) for i in range(self.n))

    @cached_property
    def coxeter_matrix(self) -> tuple:
        # Phi = -E^{-T} E
        Einv_T = _transpose(self.euler_inverse)
        M = _matmul(Einv_T, self.euler_matrix)
        return tuple(tuple(-x for x in r) for r in M)

    @cached_property
    def coxeter_inverse(self) -> tuple:
        # Phi^{-1} = -E^{-1} E^T
        M = _matmul(self.euler_inverse, _transpose(self.euler_matrix))
        return tuple(tuple(-x for x in r) for r in M)

    @cached_property
    def neighbours(self) -> tuple:
        nb = [set() for _ in range(self.n)]
        for s, t in self.arrows:
            nb[s].add(t)
            nb[t].add(s)
        return tuple(frozenset(x) for x in nb)

    @cached_property
    def cache(self) -> dict:
        """Per-quiver memo tables used by the generic hom/ext computations."""
        return {}

    def to_text(self) -> str:
        lines = [f"vertices {self.n}"]
        lines += [f"arrow {s + 1} {t + 1}" for s, t in self.arrows]
        return "\n".join(lines) + "\n"


def _matmul(A, B):
    n, m, k = len(A), len(B), len(B[0]) if B else 0
    return [[sum(A[i][l] * B[l][j] for l in range(m)) for j in range(k)] for i in range(n)]


def _transpose(A):
    return [list(r) for r in zip(*A)]


# ---------------------------------------------------------------- text format

def parse_quiver(text: str) -> Quiver:
    n = None
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise DomainError(f"line {lineno}: cannot parse {raw!r}") from None
        if parts[0] == "vertices" and len(parts) == 2:
            if n is not None:
                raise DomainError(f"line {lineno}: duplicate 'vertices'")
            n = nums[0]
        elif parts[0] == "arrow" and len(parts) == 3:
            if n is None:
                raise DomainError(f"line {lineno}: 'arrow' before 'vertices'")
            s, t = nums
            if not (1 <= s <= n and 1 <= t <= n):
                raise DomainError(f"line {lineno}: vertex out of range")
            if s == t:
                raise DomainError(f"line {lineno}: loops are not allowed")
            arrows.append((s, t))
        else:
            raise DomainError(f"line {lineno}: cannot parse {raw!r}")
    if n is None:
        raise DomainError("missing 'vertices N' line")
    return Quiver.from_arrows(n, arrows)


def load_quiver(path) -> Quiver:
    return parse_quiver(Path(path).read_text())


# ---------------------------------------------------------------- a few named quivers

def kronecker(m: int = 2) -> Quiver:
    """Two vertices, ``m`` arrows 1 -> 2."""
    return Quiver(2, ((0, 1),) * m)


def linear_quiver(n: int) -> Quiver:
    """A_n with orientation 1 -> 2 -> ... -> n."""
    return Quiver(n, tuple((i, i + 1) for i in range(n - 1)))


def affine_a2() -> Quiver:
    """Acyclic triangle 1 -> 2 -> 3, 1 -> 3."""
    return Quiver.from_arrows(3, [(1, 2), (2, 3), (1, 3)])


def affine_d4() -> Quiver:
    """Four-subspace quiver: vertex 1 is the centre, leaves 2..5 point into it."""
    return Quiver.from_arrows(5, [(2, 1), (3, 1), (4, 1), (5, 1)])


# ---------------------------------------------------------------- forms

def _check(Q: Quiver, *vecs):
    out = []
    for v in vecs:
        v = tuple(int(x) for x in v)
        if len(v) != Q.n:
            raise DimensionError(f"vector {v} has length {len(v)}, quiver has {Q.n} vertices")
        out.append(v)
    return out


def euler_form(Q: Quiver, a, b) -> int:
    a, b = _check(Q, a, b)
    val = sum(x * y for x, y in zip(a, b))
    for (s, t), m in Q.multiplicity.items():
        val -= m * a[s] * b[t]
    return val


def sym_form(Q: Quiver, a, b) -> int:
    return euler_form(Q, a, b) + euler_form(Q, b, a)


def tits_form(Q: Quiver, a) -> int:
    return euler_form(Q, a, a)


def unit(Q: Quiver, i: int, sign: int = 1) -> Vector:
    return tuple(sign if j == i else 0 for j in range(Q.n))


def reflect(Q: Quiver, alpha, i: int) -> Vector:
    """Simple reflection s_i(alpha) = alpha - (alpha, e_i) e_i."""
    (alpha,) = _check(Q, alpha)
    if not 0 <= i < Q.n:
        raise DomainError(f"vertex {i} out of range")
    c = sum(alpha[j] * Q.gram[j][i] for j in range(Q.n))
    return tuple(x - c if j == i else x for j, x in enumerate(alpha))


def reflect_word(Q: Quiver, alpha, word: Sequence[int]) -> Vector:
    """Apply reflections left to right: the first letter acts first."""
    for i in word:
        alpha = reflect(Q, alpha, i)
    return alpha


def _pairing_with_simples(Q: Quiver, alpha) -> list:
    return [sum(alpha[j] * Q.gram[j][i] for j in range(Q.n)) for i in range(Q.n)]


# ---------------------------------------------------------------- support, fundamental domain

def support(alpha) -> frozenset:
    return frozenset(i for i, x in enumerate(alpha) if x != 0)


def connected_components(Q: Quiver, vertices: Iterable[int] | None = None) -> list:
    """Connected components of the full subquiver on ``vertices``, each a sorted tuple."""
    verts = set(range(Q.n)) if vertices is None else set(vertices)
    comps = []
    while verts:
        start = min(verts)
        stack, comp = [start], {start}
        while stack:
            v = stack.pop()
            for w in Q.neighbours[v]:
                if w in verts and w not in comp:
                    comp.add(w)
                    stack.append(w)
        verts -= comp
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def support_connected(Q: Quiver, alpha) -> bool:
    (alpha,) = _check(Q, alpha)
    supp = support(alpha)
    return bool(supp) and len(connected_components(Q, supp)) == 1


def null_cone(Q: Quiver, alpha) -> frozenset:
    (alpha,) = _check(Q, alpha)
    return frozenset(i for i, c in enumerate(_pairing_with_simples(Q, alpha)) if c == 0)


def is_fundamental(Q: Quiver, alpha) -> bool:
    (alpha,) = _check(Q, alpha)
    if any(x < 0 for x in alpha) or not support_connected(Q, alpha):
        return False
    return all(c <= 0 for c in _pairing_with_simples(Q, alpha))


def _descend(Q: Quiver, alpha, cap: int, stop_at_simple: bool = False):
    """Reflect at the smallest vertex with (alpha, e_i) > 0 until none is left.

    Returns (word, final vector, ok) where ok is False if an entry went
    negative along the way.
    """
    word = []
    for _ in range(cap):
        if stop_at_simple and sum(alpha) == 1 and min(alpha) == 0:
            return word, alpha, True
        pair = _pairing_with_simples(Q, alpha)
        i = next((k for k, c in enumerate(pair) if c > 0), None)
        if i is None:
            return word, alpha, True
        alpha = tuple(x - pair[i] if j == i else x for j, x in enumerate(alpha))
        word.append(i)
        if any(x < 0 for x in alpha):
            return word, alpha, False
    raise InternalError(f"descent did not terminate within {cap} steps (last vector {alpha})")


def to_fundamental(Q: Quiver, alpha) -> tuple:
    """Weyl-transport a positive imaginary root into the fundamental domain.

    Returns ``(word, alpha_f)`` with ``reflect_word(Q, alpha, word) == alpha_f``.
    """
    (alpha,) = _check(Q, alpha)
    if is_root(Q, alpha) not in (RootType.ISOTROPIC, RootType.IMAGINARY_NON_ISOTROPIC):
        raise DomainError(f"{alpha} is not a positive imaginary root")
    cap = 10 * Q.n * max(1, sum(abs(x) for x in alpha))
    word, final, ok = _descend(Q, alpha, cap)
    if not ok or not is_fundamental(Q, final):
        raise InternalError(f"descent of {alpha} left the positive cone at {final}")
    return word, final


# ---------------------------------------------------------------- Coxeter transformation

def coxeter_apply(Q: Quiver, alpha, k: int = 1) -> Vector:
    """Apply Phi^k, Phi = -E^{-T} E.  On dimension vectors Phi acts as tau^{-1}."""
    (alpha,) = _check(Q, alpha)
    M = Q.coxeter_matrix if k >= 0 else Q.coxeter_inverse
    v = list(alpha)
    for _ in range(abs(k)):
        v = [sum(M[i][j] * v[j] for j in range(Q.n)) for i in range(Q.n)]
    return tuple(v)


# ---------------------------------------------------------------- classification

def _sym_profile(G) -> tuple:
    """Exact symmetric elimination: returns (has_negative_direction, radical_dim)."""
    M = [[Fraction(x) for x in row] for row in G]
    idx = list(range(len(M)))
    while idx:
        diag = [(M[i][i], i) for i in idx]
        if any(d < 0 for d, _ in diag):
            return True, 0
        pos = [i for d, i in diag if d > 0]
        if not pos:
            # zero diagonal: semidefinite only if the remaining block vanishes
            if any(M[i][j] != 0 for i in idx for j in idx):
                return True, 0
            return False, len(idx)
        p = pos[0]
        idx.remove(p)
        for i in idx:
            f = M[i][p] / M[p][p]
            if f:
                for j in idx:
                    M[i][j] -= f * M[p][j]
    return False, 0


def classify(Q: Quiver) -> list:
    """List of (component vertices, QuiverClass), one entry per connected component."""
    out = []
    for comp in connected_components(Q):
        G = [[Q.gram[i][j] for j in comp] for i in comp]
        negative, radical = _sym_profile(G)
        if negative:
            tag = QuiverClass.WILD
        elif radical == 0:
            tag = QuiverClass.DYNKIN
        elif radical == 1:
            tag = QuiverClass.AFFINE
        else:
            tag = QuiverClass.WILD
        out.append((comp, tag))
    return out


def quiver_class(Q: Quiver) -> QuiverClass:
    """Class of a connected quiver."""
    comps = classify(Q)
    if len(comps) != 1:
        raise DomainError("quiver is not connected")
    return comps[0][1]


def is_root(Q: Quiver, d) -> RootType:
    (d,) = _check(Q, d)
    if not any(d):
        raise DomainError("the zero vector is excluded")
    if sum(d) == -1 and all(x in (0, -1) for x in d):
        return RootType.NEGATIVE_SIMPLE
    if any(x < 0 for x in d) or not support_connected(Q, d):
        return RootType.NOT_A_ROOT
    q = tits_form(Q, d)
    if q > 1:
        return RootType.NOT_A_ROOT
    cap = 10 * Q.n * sum(d) + 10
    _, final, ok = _descend(Q, d, cap, stop_at_simple=(q == 1))
    if q == 1:
        # real: the descent must end at a simple root
        if ok and sorted(final) == [0] * (Q.n - 1) + [1]:
            return RootType.REAL
        return RootType.NOT_A_ROOT
    if ok and is_fundamental(Q, final):
        return RootType.ISOTROPIC if q == 0 else RootType.IMAGINARY_NON_ISOTROPIC
    return RootType.NOT_A_ROOT


# ---------------------------------------------------------------- subquivers

def subquiver(Q: Quiver, S: Iterable[int]) -> Quiver:
    """Full subquiver on S, vertices renumbered in increasing order."""
    S = sorted(set(S))
    if not S:
        raise DomainError("empty vertex set")
    pos = {v: k for k, v in enumerate(S)}
    return Quiver(len(S), tuple((pos[s], pos[t]) for s, t in Q.arrows if s in pos and t in pos))


def totally_disconnected(Q: Quiver, S: Iterable[int], T: Iterable[int]) -> bool:
    S, T = set(S), set(T)
    if S & T:
        return False
    return not any((s in S and t in T) or (s in T and t in S) for s, t in Q.arrows)


def box(cap) -> list:
    """All vectors 0 <= v <= cap, lexicographic."""
    return [tuple(v) for v in product(*(range(c + 1) for c in cap))]


def vadd(a, b) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vscale(k: int, a) -> Vector:
    return tuple(k * x for x in a)


def leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))
