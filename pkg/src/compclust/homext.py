"""Generic hom/ext on dimension vectors, Schur roots and generic decompositions.

``ext(a, b)`` is computed with Schofield's recursion: ``a' -> a`` is a generic
subdimension vector iff ``ext(a', a - a') = 0``, and

    ext(a, b) = max{ -<a', b>  : a' -> a }
              = max{ -<a, b''> : b ->> b'' }   (b'' = b - b', b' -> b).

Whichever side has the smaller box of subvectors is used.  Memo tables live on
the quiver (``Q.cache``) and are dropped with :func:`clear_caches`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import DomainError, GuardError, InternalError
from .quiver import Quiver, _check, box, euler_form, leq, unit, vsub

DECOMPOSITION_GUARD = 64


def _tables(Q: Quiver) -> dict:
    t = Q.cache.get("homext")
    if t is None:
        t = Q.cache["homext"] = {"subs": {}, "ext": {}, "schur": {}, "decomp": {}}
    return t


def clear_caches(Q: Quiver) -> None:
    Q.cache.pop("homext", None)


def _nonneg(Q, *vecs):
    vecs = _check(Q, *vecs)
    for v in vecs:
        if any(x < 0 for x in v):
            raise DomainError(f"{v} has negative entries")
    return vecs


def _box_size(v) -> int:
    return prod(x + 1 for x in v)


def generic_subs(Q: Quiver, a) -> tuple:
    """All generic subdimension vectors of ``a`` (including 0 and ``a``)."""
    (a,) = _nonneg(Q, a)
    memo = _tables(Q)["subs"]
    hit = memo.get(a)
    if hit is not None:
        return hit
    zero = (0,) * Q.n
    subs = []
    for s in box(a):
        if s == zero or s == a or _ext(Q, s, vsub(a, s)) == 0:
            subs.append(s)
    memo[a] = tuple(subs)
    return memo[a]


def is_generic_sub(Q: Quiver, sub, a) -> bool:
    sub, a = _nonneg(Q, sub, a)
    if not leq(sub, a):
        raise DomainError(f"{sub} is not below {a}")
    if not any(sub) or sub == a:
        return True
    return _ext(Q, sub, vsub(a, sub)) == 0


def _ext(Q: Quiver, a, b) -> int:
    if not any(a) or not any(b):
        return 0
    memo = _tables(Q)["ext"]
    key = (a, b)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if _box_size(a) <= _box_size(b):
        val = max(-euler_form(Q, s, b) for s in generic_subs(Q, a))
    else:
        val = max(-euler_form(Q, a, vsub(b, s)) for s in generic_subs(Q, b))
    memo[key] = val
    return val


def ext_generic(Q: Quiver, a, b) -> int:
    """Generic dimension of Ext^1 between representations of dimension a and b."""
    a, b = _nonneg(Q, a, b)
    return _ext(Q, a, b)


def hom_generic(Q: Quiver, a, b) -> int:
    a, b = _nonneg(Q, a, b)
    h = euler_form(Q, a, b) + _ext(Q, a, b)
    if h < 0:
        raise InternalError(f"negative hom({a}, {b}) = {h}")
    return h


def is_schur_root(Q: Quiver, d) -> bool:
    """Schofield's stability test: <b, d> - <d, b> > 0 for every proper generic sub b."""
    (d,) = _nonneg(Q, d)
    if not any(d):
        raise DomainError("the zero vector is not a Schur root")
    memo = _tables(Q)["schur"]
    hit = memo.get(d)
    if hit is not None:
        return hit
    zero = (0,) * Q.n
    ok = True
    for b in generic_subs(Q, d):
        if b == zero or b == d:
            continue
        if euler_form(Q, b, d) - euler_form(Q, d, b) <= 0:
            ok = False
            break
    memo[d] = ok
    return ok


# ---------------------------------------------------------------- generalized roots

def is_negative_simple(v) -> bool:
    return sum(v) == -1 and all(x in (0, -1) for x in v)


def root_key(v) -> tuple:
    """Sort key: positives first (lexicographic), then negative simples."""
    return (is_negative_simple(v), tuple(v))


def format_root(v) -> str:
    if is_negative_simple(v):
        return f"-e_{v.index(-1) + 1}"
    return "(" + ",".join(str(x) for x in v) + ")"


def ext_orthogonal(Q: Quiver, a, b) -> bool:
    """Ext-orthogonality of generalized Schur roots (positive vectors or -e_i)."""
    a, b = _check(Q, a, b)
    na, nb = is_negative_simple(a), is_negative_simple(b)
    if na and nb:
        return True
    if na or nb:
        neg, pos = (a, b) if na else (b, a)
        if any(x < 0 for x in pos):
            raise DomainError(f"{pos} is not a generalized Schur root")
        return pos[neg.index(-1)] == 0
    if any(x < 0 for x in a) or any(x < 0 for x in b):
        raise DomainError(f"{a}, {b}: mixed-sign vectors are not generalized roots")
    return _ext(Q, a, b) == 0 and _ext(Q, b, a) == 0


@dataclass(frozen=True)
class GenericDecomposition:
    input: tuple
    summands: tuple

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        return " + ".join(format_root(s) for s in self.summands)

    def verify(self, Q: Quiver) -> None:
        total = tuple(sum(col) for col in zip(*self.summands)) if self.summands else (0,) * Q.n
        if total != self.input:
            raise InternalError(f"summands of {self.input} add up to {total}")
        for s in self.summands:
            if not is_negative_simple(s) and not is_schur_root(Q, s):
                raise InternalError(f"summand {s} is not a Schur root")
        k = len(self.summands)
        for i in range(k):
            for j in range(i + 1, k):
                if not ext_orthogonal(Q, self.summands[i], self.summands[j]):
                    raise InternalError(
                        f"summands {self.summands[i]} and {self.summands[j]} are not ext-orthogonal")


def _schur_below(Q: Quiver, r) -> list:
    cands = [s for s in box(r) if any(s) and is_schur_root(Q, s)]
    cands.sort(key=lambda s: (-sum(s), s))
    return cands


def _decompose_positive(Q: Quiver, r) -> tuple:
    memo = _tables(Q)["decomp"]
    if r in memo:
        return memo[r]
    if any(r) and is_schur_root(Q, r):
        memo[r] = (r,)
        return memo[r]

    def dfs(rest, chosen):
        if not any(rest):
            return chosen
        i0 = next(i for i, x in enumerate(rest) if x > 0)
        for s in _schur_below(Q, rest):
            if s[i0] == 0:
                continue
            if all(ext_orthogonal(Q, s, c) for c in chosen):
                found = dfs(vsub(rest, s), chosen + [s])
                if found is not None:
                    return found
        return None

    found = dfs(r, [])
    if found is None:
        raise InternalError(f"no ext-orthogonal Schur decomposition of {r} found")
    memo[r] = tuple(sorted(found, key=root_key))
    return memo[r]


def generic_decomposition(Q: Quiver, v) -> GenericDecomposition:
    """Generic decomposition of an arbitrary integer vector into generalized Schur roots."""
    (v,) = _check(Q, v)
    if sum(abs(x) for x in v) > DECOMPOSITION_GUARD:
        raise GuardError(f"|{v}|_1 exceeds the decomposition guard {DECOMPOSITION_GUARD}")
    negatives = []
    for i, x in enumerate(v):
        negatives += [unit(Q, i, -1)] * max(0, -x)
    positive = tuple(max(0, x) for x in v)
    parts = _decompose_positive(Q, positive) if any(positive) else ()
    dec = GenericDecomposition(v, tuple(sorted(list(parts) + negatives, key=root_key)))
    dec.verify(Q)
    return dec
