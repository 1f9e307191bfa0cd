"""Command-line front end.

Vectors are comma-separated integers, ``-e_i`` names a negative simple root,
vertices are 1-based.  Exit codes: 0 ok, 1 usage, 2 domain error, 3 guard
exceeded, 4 internal check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .errors import DomainError, GenericityError, GuardError, InternalError
from .quiver import Quiver, classify, is_root, load_quiver

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_GUARD, EXIT_INTERNAL = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_vector(text: str) -> tuple:
    text = text.strip()
    if text.startswith("-e_"):
        raise DomainError("negative simple roots need the quiver size; use parse_root")
    try:
        return tuple(int(x) for x in text.strip("()").split(","))
    except ValueError:
        raise DomainError(f"cannot read vector {text!r}") from None


def parse_root(text: str, n: int) -> tuple:
    text = text.strip()
    if text.startswith("-e_"):
        try:
            i = int(text[3:])
        except ValueError:
            raise DomainError(f"cannot read root {text!r}") from None
        if not 1 <= i <= n:
            raise DomainError(f"vertex {i} out of range 1..{n}")
        return tuple(-1 if k == i - 1 else 0 for k in range(n))
    v = parse_vector(text)
    if len(v) != n:
        raise DomainError(f"{text} has {len(v)} entries, quiver has {n} vertices")
    return v


def read_cluster_file(path: str, n: int) -> list:
    """One root per line; blank lines and ``#`` comments are ignored."""
    roots = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                roots.append(parse_root(line, n))
    if not roots:
        raise DomainError(f"{path} contains no roots")
    return roots


@dataclass
class Session:
    command: str
    quiver_path: str | None
    quiver: Quiver | None
    fmt: str = "plain"
    config: dict = field(default_factory=dict)
    out: object = None

    def _write(self, line):
        print(line, file=self.out or sys.stdout)

    def header(self):
        items = {"command": self.command, "quiver": self.quiver_path, **self.config}
        if self.fmt == "records":
            self._write(json.dumps({"record": "config", **items}))
        else:
            self._write("# " + " ".join(f"{k}={_plain(v)}" for k, v in items.items()))

    def emit(self, text: str, record: str, **fields):
        if self.fmt == "records":
            self._write(json.dumps({"record": record, **fields}))
        else:
            self._write(text)


def _plain(v):
    if isinstance(v, (tuple, list)):
        return ",".join(str(x) for x in v)
    return str(v)


def _fmt(r) -> str:
    from .homext import format_root
    return format_root(r)


# ---------------------------------------------------------------- subcommands

def cmd_classify(S, args):
    for comp, cls in classify(S.quiver):
        verts = [i + 1 for i in comp]
        S.emit(f"component {{{','.join(map(str, verts))}}}: {cls.value}", "component",
               vertices=verts, type=cls.value)


def cmd_delta(S, args):
    from .affine import delta
    d = delta(S.quiver)
    S.emit(_fmt(d), "delta", delta=list(d))


def cmd_roots(S, args):
    from .clusters import schur_roots_up_to
    cap = parse_root(args.cap, S.quiver.n)
    for r in schur_roots_up_to(S.quiver, cap):
        kind = is_root(S.quiver, r).value
        S.emit(f"{_fmt(r)}  {kind}", "root", root=_fmt(r), type=kind)


def cmd_schur(S, args):
    from .homext import is_schur_root
    d = parse_root(args.dim, S.quiver.n)
    kind = is_root(S.quiver, d).value
    ok = is_schur_root(S.quiver, d) if all(x >= 0 for x in d) and any(d) else False
    S.emit(f"{_fmt(d)}  schur={ok}  type={kind}", "schur", dim=list(d), schur=ok, type=kind)


def cmd_ext(S, args):
    from .homext import ext_generic, hom_generic
    from .quiver import euler_form
    Q = S.quiver
    a, b = parse_root(args.a, Q.n), parse_root(args.b, Q.n)
    e, h, x = ext_generic(Q, a, b), hom_generic(Q, a, b), euler_form(Q, a, b)
    S.emit(f"ext={e} hom={h} euler={x}", "ext", a=list(a), b=list(b), ext=e, hom=h, euler=x)


def cmd_decompose(S, args):
    from .homext import generic_decomposition
    v = parse_root(args.vector, S.quiver.n)
    dec = generic_decomposition(S.quiver, v)
    S.emit(str(dec), "decomposition", vector=list(v), summands=[_fmt(r) for r in dec.summands])


def _emit_cluster(S, C):
    text = f"{C}  size={len(C)}  bound={_plain(C.bound)}  global={C.global_maximal}"
    S.emit(text, "cluster", roots=[_fmt(r) for r in C.roots], size=len(C),
           bound=list(C.bound) if C.bound else None, global_maximal=C.global_maximal)


def cmd_clusters(S, args):
    from .affine import delta_clusters
    from .clusters import enumerate_clusters
    if args.delta_only:
        found = delta_clusters(S.quiver)
    else:
        if args.cap is None:
            raise DomainError("--cap is required unless --delta-only is given")
        found = enumerate_clusters(S.quiver, parse_root(args.cap, S.quiver.n))
    for C in found:
        _emit_cluster(S, C)
    S.emit(f"total {len(found)}", "total", count=len(found))


def cmd_mutate(S, args):
    from .clusters import make_cluster, mutate
    Q = S.quiver
    C = make_cluster(read_cluster_file(args.cluster, Q.n))
    found = mutate(Q, C, parse_root(args.remove, Q.n), parse_root(args.cap, Q.n))
    for D in found:
        _emit_cluster(S, D)
    S.emit(f"total {len(found)}", "total", count=len(found))


def cmd_exchange(S, args):
    from .clusters import exchange, make_cluster
    Q = S.quiver
    C1 = make_cluster(read_cluster_file(args.c1, Q.n))
    C2 = make_cluster(read_cluster_file(args.c2, Q.n))
    only1 = [parse_root(args.alpha, Q.n)] if args.alpha else [r for r in C1 if r not in C2]
    only2 = [parse_root(args.alpha_prime, Q.n)] if args.alpha_prime else [r for r in C2 if r not in C1]
    if len(only1) != 1 or len(only2) != 1:
        raise DomainError("alpha and alpha' are ambiguous; pass --alpha and --alpha-prime")
    cap = parse_root(args.cap, Q.n) if args.cap else None
    rel = exchange(Q, C1, C2, only1[0], only2[0], cap)
    S.emit(str(rel), "exchange", removed=_fmt(rel.removed), added=_fmt(rel.added),
           parts=[_fmt(r) for r in rel.decomposition.summands],
           hosting=[_fmt(r) for r in rel.hosting.roots],
           parts_in_intersection=rel.parts_in_intersection)


def cmd_wild_bound(S, args):
    from .clusters import wild_imaginary_bound
    b = wild_imaginary_bound(S.quiver)
    S.emit(str(b), "wild_bound", bound=b)


def cmd_cc(S, args):
    from .character import generic_character
    d = parse_root(args.dim, S.quiver.n)
    X = generic_character(S.quiver, d, tuple(range(args.seeds)))
    S.emit(str(X), "character", dim=list(d), character=str(X))


def cmd_verify_exchange(S, args):
    from .affine import delta, delta_clusters
    from .character import verify_affine_exchange
    from .clusters import affine_exchange
    from .homext import ext_orthogonal
    Q = S.quiver
    beta = parse_root(args.beta, Q.n)
    d = delta(Q)
    host = next((C for C in delta_clusters(Q)
                 if all(ext_orthogonal(Q, beta, r) for r in C.roots if r != d)), None)
    if host is None:
        raise DomainError(f"{_fmt(beta)} is not orthogonal to the regular part of any delta-cluster")
    b1, b1p = affine_exchange(Q, host, beta)
    check = verify_affine_exchange(Q, beta, b1, b1p)
    S.emit(f"beta={_fmt(beta)} beta1={_fmt(b1)} beta1'={_fmt(b1p)}", "exchange",
           beta=_fmt(beta), beta1=_fmt(b1), beta1_prime=_fmt(b1p))
    S.emit(str(check), "identity", holds=check.ok, lhs=str(check.lhs), rhs=str(check.rhs))
    if not check.ok:
        raise InternalError("exchange identity failed")


def cmd_mutation_graph(S, args):
    from .clusters import enumerate_clusters, is_connected, mutation_edges, to_dot
    found = enumerate_clusters(S.quiver, parse_root(args.cap, S.quiver.n))
    edges = mutation_edges(found)
    with open(args.dot, "w") as fh:
        fh.write(to_dot(found, edges))
    conn = is_connected(len(found), edges)
    S.emit(f"clusters={len(found)} edges={len(edges)} connected={conn} dot={args.dot}", "graph",
           clusters=len(found), edges=len(edges), connected=conn, dot=args.dot)


def cmd_paper_example(S, args):
    from .clusters import paper_example
    C = paper_example(args.orientation)
    _emit_cluster(S, C)


def cmd_oracle(S, args):
    from .oracle import oracle_ext
    Q = S.quiver
    a, b = parse_root(args.a, Q.n), parse_root(args.b, Q.n)
    e = oracle_ext(Q, a, b, args.prime, args.trials, args.seed)
    S.emit(f"ext={e}", "oracle_ext", a=list(a), b=list(b), ext=e)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="compclust", description="Component clusters of acyclic quivers.")
    p.add_argument("--quiver", help="quiver file (vertices N / arrow S T lines)")
    p.add_argument("--format", choices=("plain", "records"), default="plain")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("classify").set_defaults(func=cmd_classify)
    sub.add_parser("delta").set_defaults(func=cmd_delta)
    s = sub.add_parser("roots")
    s.add_argument("--cap", required=True)
    s.set_defaults(func=cmd_roots)
    s = sub.add_parser("schur")
    s.add_argument("dim")
    s.set_defaults(func=cmd_schur)
    s = sub.add_parser("ext")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_ext)
    s = sub.add_parser("decompose")
    s.add_argument("vector")
    s.set_defaults(func=cmd_decompose)
    s = sub.add_parser("clusters")
    s.add_argument("--cap")
    s.add_argument("--delta-only", action="store_true")
    s.set_defaults(func=cmd_clusters)
    s = sub.add_parser("mutate")
    s.add_argument("--cluster", required=True)
    s.add_argument("--remove", required=True)
    s.add_argument("--cap", required=True)
    s.set_defaults(func=cmd_mutate)
    s = sub.add_parser("exchange")
    s.add_argument("--c1", required=True)
    s.add_argument("--c2", required=True)
    s.add_argument("--alpha")
    s.add_argument("--alpha-prime")
    s.add_argument("--cap")
    s.set_defaults(func=cmd_exchange)
    sub.add_parser("wild-bound").set_defaults(func=cmd_wild_bound)
    s = sub.add_parser("cc")
    s.add_argument("--dim", required=True)
    s.add_argument("--seeds", type=int, default=3)
    s.set_defaults(func=cmd_cc)
    s = sub.add_parser("verify-exchange")
    s.add_argument("--beta", required=True)
    s.set_defaults(func=cmd_verify_exchange)
    s = sub.add_parser("mutation-graph")
    s.add_argument("--cap", required=True)
    s.add_argument("--dot", required=True)
    s.set_defaults(func=cmd_mutation_graph)
    s = sub.add_parser("paper-example")
    s.add_argument("--orientation", choices=("A", "B"), required=True)
    s.set_defaults(func=cmd_paper_example)
    s = sub.add_parser("oracle")
    osub = s.add_subparsers(dest="oracle_command", required=True)
    o = osub.add_parser("ext")
    o.add_argument("a")
    o.add_argument("b")
    o.add_argument("--prime", type=int, default=1009)
    o.add_argument("--trials", type=int, default=25)
    o.add_argument("--seed", type=int, default=0)
    o.set_defaults(func=cmd_oracle)
    return p


_CONFIG_KEYS = ("cap", "delta_only", "cluster", "remove", "c1", "c2", "alpha", "alpha_prime", "dim", "seeds", "beta",
                "dot", "orientation", "a", "b", "vector", "prime", "trials", "seed")


def run(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = {k: getattr(args, k) for k in _CONFIG_KEYS if getattr(args, k, None) is not None}
    S = Session(args.command, args.quiver, None, args.format, config, out)
    try:
        if args.command != "paper-example":
            if args.quiver is None:
                parser.error("--quiver is required for this command")
            S.quiver = load_quiver(args.quiver)
        S.header()
        args.func(S, args)
    except GuardError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InternalError, GenericityError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
