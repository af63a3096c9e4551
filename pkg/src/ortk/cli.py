"""Command line front end.

Exit codes: 0 on success, 1 when a verify run reports failures, 2 on
usage or parse errors.  JSON output is emitted with sorted keys so that
identical inputs produce byte-identical exports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from fractions import Fraction

from .adjusted import (
    borel_meet_join,
    brick_decomposition_check,
    hypercubic_collections,
    split_criterion,
)
from .atypicality import is_typical, s1_classify
from .characters import (
    MultiplicityQuery,
    character_to_json,
    verma_character,
    weight_multiplicity,
)
from .ecgraph import graph_to_dot, graph_to_json, make_walk
from .numerics import parse_weight, render_weight
from .orgraph import build_or_graph, build_or_lambda, walk_hom_oracle
from .quiver import build_quiver, path_normal_forms, render_path
from .rootsys import build_root_system, enumerate_borels
from .verify import run_suite

__all__ = ["main", "run_command"]

_FAMILY_FLAG = ("gl", "gl11n", "ospB", "ospD", "d21")


class UsageError(ValueError):
    """Bad command line input; reported on stderr with exit code 2."""


def _internal_family(flag: str) -> str:
    return "d21alpha" if flag == "d21" else flag


def thread_cap() -> int:
    """Parallelism cap from ORTK_THREADS (default 1; execution is serial,
    which respects any cap)."""
    raw = os.environ.get("ORTK_THREADS")
    if raw is None:
        return 1
    try:
        v = int(raw)
    except ValueError:
        raise UsageError(f"ORTK_THREADS must be a positive integer, got {raw!r}")
    if v < 1:
        raise UsageError(f"ORTK_THREADS must be a positive integer, got {raw!r}")
    return v


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    raise TypeError(f"not JSON serializable: {type(x).__name__}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2,
                      default=_json_default)


def _build_system(args):
    family = _internal_family(args.family)
    alpha = None
    if getattr(args, "alpha", None) is not None:
        if family != "d21alpha":
            raise UsageError("--alpha only applies to --family d21")
        try:
            alpha = Fraction(args.alpha)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--alpha must be a rational like 2/3, got {args.alpha!r}")
    if family == "d21alpha":
        if args.m is not None or args.n is not None:
            raise UsageError("--family d21 takes no --m or --n")
    elif family == "gl11n":
        if args.n is None:
            raise UsageError("--family gl11n needs --n")
        if args.m is not None:
            raise UsageError("--family gl11n takes no --m")
    else:
        if args.m is None or args.n is None:
            raise UsageError(f"--family {args.family} needs --m and --n")
    return build_root_system(family, args.m, args.n, alpha)


def _resolve_borel(rs, og, borels, text):
    """Borel addressing: graph vertex label, '#<rank>', or a comma list
    of odd positive root names."""
    if text is None:
        return borels[0]
    if text in og.borel_of_vertex:
        return og.borel_of_vertex[text]
    if text.startswith("#"):
        try:
            k = int(text[1:])
        except ValueError:
            raise UsageError(f"bad Borel rank {text!r}")
        if not 0 <= k < len(borels):
            raise UsageError(f"Borel rank out of range: {text} (have {len(borels)})")
        return borels[k]
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise UsageError("empty --borel")
    try:
        roots = {rs.root_by_name(nm) for nm in names}
    except Exception as e:
        raise UsageError(str(e))
    for b in borels:
        if set(b.odd_positive) == roots:
            return b
    raise UsageError(f"no Borel has odd positive set {{{text}}}")


def _parse_lambda(rs, text):
    if text is None:
        raise UsageError("--lambda is required here")
    try:
        return parse_weight(text, rs.rank)
    except Exception as e:
        raise UsageError(f"bad --lambda {text!r}: {e}")


def _emit_graph(graph, out, name, print_fn):
    if out == "dot":
        print_fn(graph_to_dot(graph, name=name))
    elif out == "json":
        print_fn(_dump(graph_to_json(graph)))
    else:
        print_fn(f"vertices ({len(graph.vertices)}): "
                 + " ".join(str(v) for v in graph.vertices))
        print_fn(f"colors ({len(graph.colors)}): "
                 + " ".join(str(c) for c in graph.colors))
        for u, v, c in graph.edges:
            print_fn(f"{u} -- {v}  [{c}]")


def _cmd_or_graph(args, print_fn) -> int:
    rs = _build_system(args)
    og = build_or_graph(rs)
    _emit_graph(og.graph, args.out, "OR", print_fn)
    return 0


def _cmd_quotient(args, print_fn) -> int:
    rs = _build_system(args)
    og = build_or_graph(rs)
    lam = _parse_lambda(rs, args.lam)
    quotient = build_or_lambda(rs, og, lam)
    _emit_graph(quotient.graph, args.out, "ORlambda", print_fn)
    if args.out == "text":
        for src in og.graph.vertices:
            print_fn(f"class {src} -> {quotient.vertex_map[src]}")
    return 0


def _cmd_verify(args, print_fn) -> int:
    family = _internal_family(args.family) if args.family else None
    report = run_suite(args.mode, family)
    for e in report.entries:
        params = " ".join(f"{k}={v}" for k, v in e.parameters.items() if v is not None)
        print_fn(f"{e.status.upper():7s} {e.check} {params}".rstrip())
    n_fail = sum(e.status == "fail" for e in report.entries)
    print_fn(f"overall {'pass' if report.passed else 'fail'} "
             f"({len(report.entries)} checks, {n_fail} failed)")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(_dump(report.to_json()) + "\n")
    return 0 if report.passed else 1


def _cmd_character(args, print_fn) -> int:
    rs = _build_system(args)
    og = build_or_graph(rs)
    borels, _ = enumerate_borels(rs)
    b = _resolve_borel(rs, og, borels, args.borel)
    lam = _parse_lambda(rs, args.lam)
    delta_a = set() if args.induced else set(b.odd_positive)
    c = verma_character(rs, delta_a, lam)
    data = character_to_json(rs, c)
    if args.out == "json":
        print_fn(_dump(data))
    else:
        for item in data:
            print_fn(f"{item['coeff']:+d} e^({item['weight']})")
        print_fn(f"terms: {len(data)}")
    return 0


def _cmd_multiplicity(args, print_fn) -> int:
    rs = _build_system(args)
    og = build_or_graph(rs)
    borels, _ = enumerate_borels(rs)
    b = _resolve_borel(rs, og, borels, args.borel)
    lam = _parse_lambda(rs, args.lam)
    if args.mu is None:
        raise UsageError("--mu is required")
    mu = _parse_lambda(rs, args.mu)
    free = frozenset(rs.negate(r) for r in b.odd_positive)
    got = weight_multiplicity(rs, MultiplicityQuery(free, lam, mu))
    if args.out == "json":
        print_fn(_dump({"multiplicity": got}))
    else:
        print_fn(str(got))
    return 0


def _cmd_typical(args, print_fn) -> int:
    rs = _build_system(args)
    og = build_or_graph(rs)
    borels, _ = enumerate_borels(rs)
    b = _resolve_borel(rs, og, borels, args.borel)
    lam = _parse_lambda(rs, args.lam)
    t = is_typical(rs, b, lam)
    if args.out == "json":
        print_fn(_dump({"typical": t}))
    else:
        print_fn("typical" if t else "atypical")
    return 0


def _cmd_s1(args, print_fn) -> int:
    rs = _build_system(args)
    og = build_or_graph(rs)
    borels, _ = enumerate_borels(rs)
    b = _resolve_borel(rs, og, borels, args.borel)
    lam = _parse_lambda(rs, args.lam)
    cls = s1_classify(rs, b, lam, gamma_bound=args.gamma_bound)
    names = lambda roots: sorted(rs.root_name(r) for r in roots)
    if args.out == "json":
        print_fn(_dump({
            "certified_in": names(cls.certified_in),
            "certified_out": names(cls.certified_out),
            "unknown": names(cls.unknown),
            "emptiness": cls.emptiness_verdict.value,
        }))
    else:
        print_fn("certified_in: " + (" ".join(names(cls.certified_in)) or "-"))
        print_fn("certified_out: " + (" ".join(names(cls.certified_out)) or "-"))
        print_fn("unknown: " + (" ".join(names(cls.unknown)) or "-"))
        print_fn(f"emptiness: {cls.emptiness_verdict.value}")
    return 0


def _cmd_walk(args, print_fn) -> int:
    rs = _build_system(args)
    og = build_or_graph(rs)
    lam = _parse_lambda(rs, args.lam)
    if not args.path:
        raise UsageError("--path is required")
    verts = [t.strip() for t in args.path.split(",")]
    for v in verts:
        if v not in og.borel_of_vertex:
            raise UsageError(f"unknown vertex {v!r}; labels: "
                             + " ".join(str(x) for x in og.graph.vertices))
    try:
        w = make_walk(og.graph, verts)
    except Exception as e:
        raise UsageError(str(e))
    verdict = walk_hom_oracle(rs, og, lam, w)
    if args.out == "json":
        print_fn(_dump({
            "verdict": "Nonzero" if verdict.nonzero else "Zero",
            "monomial": sorted(rs.root_name(r) for r in verdict.monomial),
        }))
    else:
        print_fn("verdict " + ("Nonzero" if verdict.nonzero else "Zero"))
    return 0


def _cmd_hypercubic(args, print_fn) -> int:
    rs = _build_system(args)
    og = build_or_graph(rs)
    borels, _ = enumerate_borels(rs)
    b = _resolve_borel(rs, og, borels, args.borel)
    lam = _parse_lambda(rs, args.lam)
    splits = {}
    for i in b.isotropic_simple_indices():
        splits[str(i)] = split_criterion(rs, b, lam, i).value
    colls = []
    for coll in hypercubic_collections(rs, b, lam):
        meet_a, join_a = borel_meet_join(rs, b, coll)
        colls.append({
            "j": sorted(coll.j),
            "roots": sorted(rs.root_name(r) for r in coll.roots),
            "sigma": render_weight(coll.sigma),
            "meet": sorted(rs.root_name(r) for r in meet_a.delta_a),
            "join": sorted(rs.root_name(r) for r in join_a.delta_a),
            "brick_identity": brick_decomposition_check(rs, b, lam, coll),
        })
    data = {
        "borel": str(og.vertex_of_borel(b)),
        "splits": splits,
        "collections": colls,
    }
    if args.out == "json":
        print_fn(_dump(data))
    else:
        print_fn(f"borel {data['borel']}")
        for i, v in sorted(splits.items(), key=lambda kv: int(kv[0])):
            print_fn(f"split at {i}: {v}")
        for c in colls:
            print_fn(f"J={{{','.join(str(j) for j in c['j'])}}} "
                     f"roots={{{','.join(c['roots'])}}} "
                     f"brick_identity={c['brick_identity']}")
    return 0


def _cmd_quiver(args, print_fn) -> int:
    try:
        q = build_quiver(args.preset, args.w)
        nf = path_normal_forms(q, args.max_len)
    except ValueError as e:
        raise UsageError(str(e))
    dims = [[len(nf[(s, t)]) for t in q.vertices] for s in q.vertices]
    if args.out == "json":
        basis = {
            f"{s}->{t}": [render_path(pc) for pc in nf[(s, t)]]
            for s in q.vertices for t in q.vertices if nf[(s, t)]
        }
        print_fn(_dump({
            "vertices": [str(v) for v in q.vertices],
            "dimensions": dims,
            "total_dimension": sum(map(sum, dims)),
            "basis": basis,
        }))
    else:
        print_fn("vertices: " + " ".join(str(v) for v in q.vertices))
        for s, row in zip(q.vertices, dims):
            print_fn(f"{s}: " + " ".join(str(d) for d in row))
        print_fn(f"total: {sum(map(sum, dims))}")
        for s in q.vertices:
            for t in q.vertices:
                if nf[(s, t)]:
                    words = " ".join(render_path(pc) for pc in nf[(s, t)])
                    print_fn(f"basis {s}->{t}: {words}")
    return 0


def _add_system_flags(p, need_lambda=False, with_borel=False):
    p.add_argument("--family", required=True, choices=_FAMILY_FLAG)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--alpha", default=None, metavar="P/Q",
                   help="rational specialization for d21")
    if need_lambda:
        p.add_argument("--lambda", dest="lam", required=True, metavar="C1,C2,...")
    if with_borel:
        p.add_argument("--borel", default=None,
                       help="vertex label, #rank, or comma list of odd root names")


def _add_out_flag(p, choices=("text", "json", "dot"), default="text"):
    p.add_argument("--out", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ortk",
        description="Borel-subalgebra combinatorics for basic Lie superalgebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("or-graph", help="odd reflection graph OR(g)")
    _add_system_flags(p)
    _add_out_flag(p)
    p.set_defaults(handler=_cmd_or_graph)

    p = sub.add_parser("quotient", help="contracted graph OR(g, lambda)")
    _add_system_flags(p, need_lambda=True)
    _add_out_flag(p)
    p.set_defaults(handler=_cmd_quotient)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("mode", choices=("exchange", "extension", "iso", "all"))
    p.add_argument("--family", choices=_FAMILY_FLAG, default=None)
    p.add_argument("--report", default=None, metavar="PATH",
                   help="write the JSON report here")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("character", help="Verma character numerator")
    _add_system_flags(p, need_lambda=True, with_borel=True)
    p.add_argument("--induced", action="store_true",
                   help="induce from the even subalgebra (empty odd part)")
    _add_out_flag(p, choices=("text", "json"))
    p.set_defaults(handler=_cmd_character)

    p = sub.add_parser("multiplicity", help="weight multiplicity in a Verma module")
    _add_system_flags(p, need_lambda=True, with_borel=True)
    p.add_argument("--mu", required=True, metavar="C1,C2,...")
    _add_out_flag(p, choices=("text", "json"))
    p.set_defaults(handler=_cmd_multiplicity)

    p = sub.add_parser("typical", help="typicality of a highest weight")
    _add_system_flags(p, need_lambda=True, with_borel=True)
    _add_out_flag(p, choices=("text", "json"))
    p.set_defaults(handler=_cmd_typical)

    p = sub.add_parser("s1", help="classify pure isotropic roots for S1")
    _add_system_flags(p, need_lambda=True, with_borel=True)
    p.add_argument("--gamma-bound", type=int, default=4)
    _add_out_flag(p, choices=("text", "json"))
    p.set_defaults(handler=_cmd_s1)

    p = sub.add_parser("walk", help="zero test for a composition along a walk")
    _add_system_flags(p, need_lambda=True)
    p.add_argument("--path", required=True, metavar="V0,V1,...")
    _add_out_flag(p, choices=("text", "json"))
    p.set_defaults(handler=_cmd_walk)

    p = sub.add_parser("hypercubic", help="hypercubic collections and brick identities")
    _add_system_flags(p, need_lambda=True, with_borel=True)
    _add_out_flag(p, choices=("text", "json"))
    p.set_defaults(handler=_cmd_hypercubic)

    p = sub.add_parser("quiver", help="Hom dimensions of a preset path algebra quotient")
    p.add_argument("--preset", required=True,
                   help="preprojective_a2, zigzag_window, chain3, or square4")
    p.add_argument("--w", type=int, default=None, help="zigzag window half width")
    p.add_argument("--max-len", type=int, default=4)
    _add_out_flag(p, choices=("text", "json"))
    p.set_defaults(handler=_cmd_quiver)

    return parser


def run_command(argv, print_fn=print) -> int:
    """Parse and run one command; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        thread_cap()
        return args.handler(args, print_fn)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> int:
    return run_command(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
