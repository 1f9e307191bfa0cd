"""Component graphs, bounded component-cluster enumeration, mutation and exchange.

Generalized Schur roots are plain tuples; ``-e_i`` is the tuple with a single
``-1``.  Every enumeration is relative to a componentwise cap on the positive
roots (the negative simples are always included), and a cluster only claims
maximality with respect to that cap unless ``global_maximal`` is set.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError, GuardError, InternalError
from .homext import (GenericDecomposition, ext_orthogonal, format_root, generic_decomposition,
                     is_negative_simple, is_schur_root, root_key)
from .quiver import (Quiver, QuiverClass, RootType, _check, box, classify, connected_components,
                     coxeter_apply, is_fundamental, is_root, quiver_class, subquiver,
                     totally_disconnected, unit, vadd, vsub)

CLIQUE_GUARD = 10 ** 6


@dataclass(frozen=True)
class ComponentCluster:
    roots: tuple
    bound: tuple | None = None
    global_maximal: bool = False

    def __len__(self):
        return len(self.roots)

    def __contains__(self, r):
        return tuple(r) in self.roots

    def __iter__(self):
        return iter(self.roots)

    def sort_key(self):
        return tuple(root_key(r) for r in self.roots)

    def __str__(self):
        return "{" + ", ".join(format_root(r) for r in self.roots) + "}"


def make_cluster(roots, bound=None, global_maximal=False) -> ComponentCluster:
    roots = sorted({tuple(r) for r in roots}, key=root_key)
    return ComponentCluster(tuple(roots), None if bound is None else tuple(bound), global_maximal)


def cap_join(*vecs) -> tuple:
    """Componentwise max of the nonnegative parts."""
    return tuple(max(max(0, x) for x in col) for col in zip(*vecs))


def negative_simples(Q: Quiver) -> list:
    return [unit(Q, i, -1) for i in range(Q.n)]


def schur_roots_up_to(Q: Quiver, cap) -> list:
    """Positive Schur roots below ``cap`` followed by the n negative simples."""
    (cap,) = _check(Q, cap)
    if any(x < 0 for x in cap):
        raise DomainError(f"cap {cap} must be nonnegative")
    pos = [v for v in box(cap) if any(v) and is_schur_root(Q, v)]
    return sorted(pos, key=root_key) + negative_simples(Q)


def orthogonal_roots(Q: Quiver, given, cap) -> list:
    """Generalized Schur roots within ``cap`` ext-orthogonal to every root in ``given``.

    Cheap filters first (sign pattern, root test, orthogonality), the Schur
    test last, so large caps stay affordable.
    """
    given = [tuple(g) for g in given]
    forbidden = {g.index(-1) for g in given if is_negative_simple(g)}
    out = []
    for v in box(cap):
        if not any(v) or v in given or any(v[i] for i in forbidden):
            continue
        if is_root(Q, v) is RootType.NOT_A_ROOT:
            continue
        if all(ext_orthogonal(Q, v, g) for g in given) and is_schur_root(Q, v):
            out.append(v)
    for v in negative_simples(Q):
        if v not in given and all(ext_orthogonal(Q, v, g) for g in given):
            out.append(v)
    return sorted(out, key=root_key)


def component_graph(Q: Quiver, roots) -> dict:
    """Adjacency sets: distinct ext-orthogonal roots are joined."""
    roots = [tuple(r) for r in roots]
    adj = {r: set() for r in roots}
    for a, b in combinations(roots, 2):
        if ext_orthogonal(Q, a, b):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def maximal_cliques(adj: dict, vertices=None, guard: int = CLIQUE_GUARD) -> list:
    """Bron-Kerbosch with pivoting; vertices are visited in root order."""
    verts = sorted(adj if vertices is None else vertices, key=root_key)
    vset = set(verts)
    out = []

    def bk(R, P, X):
        if not P and not X:
            out.append(tuple(R))
            if len(out) > guard:
                raise GuardError(f"more than {guard} maximal cliques")
            return
        pivot = max(P + X, key=lambda u: (len(adj[u] & set(P)), root_key(u)))
        for v in [v for v in P if v not in adj[pivot]]:
            bk(R + [v], [u for u in P if u in adj[v]], [u for u in X if u in adj[v]])
            P = [u for u in P if u != v]
            X = X + [v]

    bk([], verts, [])
    return [tuple(sorted(c, key=root_key)) for c in out if set(c) <= vset]


def certify_cluster(Q: Quiver, C: ComponentCluster, roots=None) -> None:
    """Pairwise orthogonality plus maximality among the roots within ``C.bound``."""
    for a, b in combinations(C.roots, 2):
        if not ext_orthogonal(Q, a, b):
            raise InternalError(f"{format_root(a)} and {format_root(b)} are not ext-orthogonal")
    if C.bound is None:
        return
    if roots is None:
        roots = orthogonal_roots(Q, C.roots, C.bound)
        extra = roots
    else:
        extra = [r for r in roots if r not in C.roots
                 and all(ext_orthogonal(Q, r, c) for c in C.roots)]
    if extra:
        raise InternalError(f"{C} is extended by {format_root(extra[0])} within {C.bound}")


def _is_globally_maximal(Q: Quiver, roots) -> bool:
    if len(roots) == Q.n:
        return True
    if len(classify(Q)) == 1 and quiver_class(Q) is QuiverClass.AFFINE:
        from .affine import delta
        return delta(Q) in roots
    return False


def enumerate_clusters(Q: Quiver, cap, guard: int = CLIQUE_GUARD) -> list:
    """All component clusters that are maximal among the generalized Schur roots within cap."""
    roots = schur_roots_up_to(Q, cap)
    adj = component_graph(Q, roots)
    out = []
    for clique in maximal_cliques(adj, guard=guard):
        C = ComponentCluster(clique, tuple(cap), _is_globally_maximal(Q, clique))
        certify_cluster(Q, C, roots)
        out.append(C)
    return sorted(out, key=ComponentCluster.sort_key)


def is_mutation(C1, C2) -> bool:
    a, b = set(C1), set(C2)
    return len(a & b) == min(len(a), len(b)) - 1


def mutate(Q: Quiver, C: ComponentCluster, alpha, cap) -> list:
    """All clusters maximal within cap that contain C - {alpha} but not alpha."""
    alpha = tuple(alpha)
    if alpha not in C:
        raise DomainError(f"{format_root(alpha)} is not in {C}")
    cap = cap_join(cap, *C.roots)
    rest = [r for r in C.roots if r != alpha]
    roots = schur_roots_up_to(Q, cap)
    cands = [r for r in roots if r not in rest and all(ext_orthogonal(Q, r, c) for c in rest)]
    adj = component_graph(Q, cands)
    out = []
    for clique in maximal_cliques(adj):
        if alpha in clique:
            continue
        roots_c = rest + list(clique)
        D = make_cluster(roots_c, cap, _is_globally_maximal(Q, roots_c))
        certify_cluster(Q, D, roots)
        out.append(D)
    return sorted(out, key=ComponentCluster.sort_key)


def complete(Q: Quiver, roots, cap) -> ComponentCluster:
    """Greedy completion in root order to a cluster maximal within cap."""
    cur = [tuple(r) for r in roots]
    for a, b in combinations(cur, 2):
        if not ext_orthogonal(Q, a, b):
            raise DomainError(f"{format_root(a)} and {format_root(b)} are not ext-orthogonal")
    cap = cap_join(cap, *cur)
    for r in schur_roots_up_to(Q, cap):
        if r not in cur and all(ext_orthogonal(Q, r, c) for c in cur):
            cur.append(r)
    C = make_cluster(cur, cap, _is_globally_maximal(Q, cur))
    certify_cluster(Q, C)
    return C


@dataclass(frozen=True)
class ExchangeRelation:
    removed: tuple
    added: tuple
    decomposition: GenericDecomposition
    hosting: ComponentCluster
    parts_in_intersection: bool

    def __str__(self):
        return (f"{format_root(self.removed)} + {format_root(self.added)} = {self.decomposition}"
                f"  in {self.hosting}")


def exchange(Q: Quiver, C1, C2, alpha, alpha_p, cap=None) -> ExchangeRelation:
    """Generic decomposition of alpha + alpha' for a mutation pair, hosted by a cluster C3."""
    alpha, alpha_p = tuple(alpha), tuple(alpha_p)
    if not is_mutation(C1, C2):
        raise DomainError("the clusters are not related by a mutation")
    if alpha not in C1 or alpha in C2 or alpha_p not in C2 or alpha_p in C1:
        raise DomainError("need alpha in C1 - C2 and alpha' in C2 - C1")
    if ext_orthogonal(Q, alpha, alpha_p):
        raise DomainError("alpha and alpha' are ext-orthogonal; nothing to exchange")
    common = [r for r in C1 if r in C2]
    dec = generic_decomposition(Q, vadd(alpha, alpha_p))
    for part in dec.summands:
        if part in (alpha, alpha_p):
            raise InternalError(f"exchange part {format_root(part)} equals alpha or alpha'")
        for c in common:
            if not ext_orthogonal(Q, part, c):
                raise InternalError(
                    f"exchange part {format_root(part)} is not orthogonal to {format_root(c)}")
    if cap is None:
        bounds = [C.bound for C in (C1, C2) if getattr(C, "bound", None) is not None]
        cap = cap_join(*bounds) if bounds else (0,) * Q.n
    C3 = complete(Q, common + list(dec.summands), cap)
    inside = all(part in common for part in dec.summands)
    return ExchangeRelation(alpha, alpha_p, dec, C3, inside)


# ---------------------------------------------------------------- affine exchange

def affine_exchange(Q: Quiver, delta_cluster, beta) -> tuple:
    """(beta_1, beta_1') completing (delta_cluster - delta) + beta to clusters."""
    from .affine import (RegularClass, delta, extending_vertices, projective_dim,
                         regular_class)

    d = delta(Q)
    beta = tuple(beta)
    if d not in delta_cluster:
        raise DomainError("the first cluster must contain delta")
    if is_root(Q, beta) is not RootType.REAL or regular_class(Q, beta) is not RegularClass.PREPROJECTIVE:
        raise DomainError(f"{format_root(beta)} is not a real preprojective root")
    rest = [r for r in delta_cluster if r != d]
    for r in rest:
        if not ext_orthogonal(Q, beta, r):
            raise DomainError(f"{format_root(beta)} is not ext-orthogonal to {format_root(r)}")
    # walk back along tau = Phi^{-1} to the projective of the orbit
    v = beta
    for _ in range(10 * sum(beta) + 10):
        w = coxeter_apply(Q, v, -1)
        if any(x < 0 for x in w) or not any(w):
            break
        v = w
    projectives = [e for e in range(Q.n) if projective_dim(Q, e) == v]
    if not projectives or projectives[0] not in extending_vertices(Q):
        raise DomainError(f"{format_root(beta)} is not tau^-l P_e for an extending vertex e "
                          "(violates the extending-vertex lemma)")
    beta1 = vadd(d, beta)
    if not (is_root(Q, beta1) is RootType.REAL and is_schur_root(Q, beta1)
            and regular_class(Q, beta1) is RegularClass.PREPROJECTIVE):
        raise InternalError(f"delta + beta = {beta1} is not a preprojective real Schur root")
    cap = cap_join(beta1, tuple(2 * x for x in d))
    cands = orthogonal_roots(Q, rest + [beta], cap)
    if beta1 not in cands:
        raise InternalError(f"{format_root(beta1)} does not complete the collection")
    others = [c for c in cands if c != beta1]
    if len(others) != 1:
        raise InternalError(f"expected exactly two completions, found {[beta1] + others}")
    beta1p = others[0]
    diff = vsub(beta, d)
    if all(x >= 0 for x in diff) and any(diff) and is_root(Q, diff) is RootType.REAL \
            and regular_class(Q, diff) is RegularClass.PREPROJECTIVE and beta1p != diff:
        raise InternalError(f"expected beta - delta = {diff} as second completion, got {beta1p}")
    return beta1, beta1p


# ---------------------------------------------------------------- wild quivers

def wild_imaginary_bound(Q: Quiver, guard: int = 12) -> int:
    """Max number of pairwise totally disconnected connected non-Dynkin full subquivers."""
    if Q.n > guard:
        raise GuardError(f"{Q.n} vertices exceeds the exhaustive-search guard {guard}")
    nondynkin = []
    for mask in range(1, 1 << Q.n):
        S = [i for i in range(Q.n) if mask >> i & 1]
        if len(connected_components(Q, S)) != 1:
            continue
        if quiver_class(subquiver(Q, S)) is not QuiverClass.DYNKIN:
            nondynkin.append(frozenset(S))
    minimal = [S for S in nondynkin if not any(T < S for T in nondynkin)]
    minimal.sort(key=lambda S: (len(S), sorted(S)))
    best = 0

    def search(k, chosen):
        nonlocal best
        best = max(best, len(chosen))
        for j in range(k, len(minimal)):
            if len(chosen) + len(minimal) - j <= best:
                return
            S = minimal[j]
            if all(totally_disconnected(Q, S, T) for T in chosen):
                search(j + 1, chosen + [S])

    search(0, [])
    return best


EXAMPLE_ALPHA = (1, 1, 2, 2, 1)
EXAMPLE_ALPHA_PRIME = (0, 0, 1, 1, 1)


def orientation_quiver(orientation: str) -> Quiver:
    """Five vertices (top, b1, b2, b3, b4): a triangle top-b2-b3 with tails b1, b4."""
    tail = [(3, 2), (4, 3), (5, 4)]
    if orientation == "A":
        return Quiver.from_arrows(5, [(1, 3), (1, 4)] + tail)
    if orientation == "B":
        return Quiver.from_arrows(5, [(1, 3), (4, 1)] + tail)
    raise DomainError("orientation must be 'A' or 'B'")


def clusters_containing(Q: Quiver, alpha, cap) -> list:
    alpha = tuple(alpha)
    cands = orthogonal_roots(Q, [alpha], cap)
    adj = component_graph(Q, cands)
    out = []
    roots = schur_roots_up_to(Q, cap)
    for clique in maximal_cliques(adj):
        C = make_cluster([alpha, *clique], cap)
        certify_cluster(Q, C, roots)
        out.append(C)
    return sorted(out, key=ComponentCluster.sort_key)


def paper_example(orientation: str) -> ComponentCluster:
    """The component cluster of the fundamental root (1;1,2,2,1) in either orientation.

    Everything ext-orthogonal to this sincere fundamental root vanishes at the
    top vertex and lives on the A_4 tail, so the cap equal to the root itself
    is globally sufficient.
    """
    Q = orientation_quiver(orientation)
    if not is_fundamental(Q, EXAMPLE_ALPHA) or not is_schur_root(Q, EXAMPLE_ALPHA):
        raise InternalError("the example root is not a fundamental Schur root")
    found = clusters_containing(Q, EXAMPLE_ALPHA, EXAMPLE_ALPHA)
    if len(found) != 1:
        raise InternalError(f"expected a unique cluster containing the root, found {len(found)}")
    C = found[0]
    return ComponentCluster(C.roots, C.bound, True)


def isotropic_completion(Q: Quiver, alpha, cap=None) -> ComponentCluster:
    """Cluster of size n-1 around a fundamental non-divisible isotropic root."""
    from math import gcd

    from .affine import delta_clusters

    (alpha,) = _check(Q, alpha)
    if not is_fundamental(Q, alpha) or is_root(Q, alpha) is not RootType.ISOTROPIC:
        raise DomainError(f"{alpha} is not a fundamental isotropic root")
    if gcd(*alpha) != 1:
        raise DomainError(f"{alpha} is divisible")
    S = sorted(i for i, x in enumerate(alpha) if x)
    sub = subquiver(Q, S)
    local = delta_clusters(sub)[0]
    roots = []
    for r in local.roots:
        v = [0] * Q.n
        for k, i in enumerate(S):
            v[i] = r[k]
        roots.append(tuple(v))
    boundary = sorted({j for i in S for j in Q.neighbours[i]} - set(S))
    roots += [unit(Q, j, -1) for j in boundary]
    if cap is None:
        cap = tuple(x if x else 2 for x in alpha)
    C = complete(Q, roots, cap)
    return C


def extension_witness(Q: Quiver, roots, cap, factors=(2, 3)):
    """A root beyond ``cap`` extending ``roots``, searching enlarged caps; None if none found."""
    for k in factors:
        bigger = tuple(k * max(1, x) for x in cap)
        found = orthogonal_roots(Q, roots, bigger)
        if found:
            return found[0]
    return None


# ---------------------------------------------------------------- mutation graph

def mutation_edges(clusters) -> list:
    return [(i, j) for i, j in combinations(range(len(clusters)), 2)
            if is_mutation(clusters[i], clusters[j])]


def is_connected(n_nodes: int, edges) -> bool:
    if n_nodes == 0:
        return True
    nb = {i: set() for i in range(n_nodes)}
    for i, j in edges:
        nb[i].add(j)
        nb[j].add(i)
    seen, stack = {0}, [0]
    while stack:
        for w in nb[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n_nodes


def cluster_label(C) -> str:
    return ", ".join(format_root(r) for r in C)


def to_dot(clusters, edges) -> str:
    lines = ["graph mutation {"]
    for k, C in enumerate(clusters):
        lines.append(f'  c{k} [label="{cluster_label(C)}"];')
    for i, j in edges:
        lines.append(f"  c{i} -- c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
