"""Command-line interface.

Exit codes: 0 when every requested check passes, 1 when a check fails and 2
for usage or input errors.  File artifacts go to ``--out`` or to the directory
named by ``WEYL_GROUPOID_OUT``; without either, output goes to stdout.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import affine as af
from . import diagram as dg
from . import orbit as ob
from . import sv
from . import verma as vm
from . import verify
from .diagram import Rank, Shuffle
from .errors import WeylGroupoidError

OUT_ENV = "WEYL_GROUPOID_OUT"


def _rank(text: str) -> Rank:
    try:
        return Rank.parse(text)
    except WeylGroupoidError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _out_dir(args) -> Path | None:
    target = args.out or os.environ.get(OUT_ENV)
    if not target:
        return None
    path = Path(target)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _emit(args, text: str, filename: str) -> None:
    folder = _out_dir(args)
    if folder is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    (folder / filename).write_text(text, encoding="utf-8")
    print(f"wrote {folder / filename}")


# ---------------------------------------------------------------------------


def cmd_orbit(args) -> int:
    rank = args.rank
    d_min = args.min_degree
    if args.kind == "F":
        src = ob.canonicalize(dg.parse_partition(args.source, rank) if args.source else (0,) * rank.n,
                              args.k, rank)
        g = ob.build_orbit_graph(src, args.max_degree, rank, d_min)
    elif args.kind == "B":
        sigma = Shuffle.parse(args.source, rank) if args.source else Shuffle.identity(rank)
        g = ob.build_borel_graph(ob.canonicalize_shuffle(sigma, args.k, rank), args.max_degree, rank, d_min)
    else:
        src = sv.Weight.parse(args.source, rank) if args.source else sv.lambda0(rank, args.k)
        g = sv.sv_orbit_graph(src, args.max_degree, rank, d_min)
    stem = f"orbit_{args.kind}_{rank.n}_{rank.m}_{args.max_degree}"
    if args.format == "dot":
        _emit(args, g.to_dot(), stem + ".dot")
    elif args.format == "json":
        _emit(args, g.dumps(), stem + ".json")
    else:
        lines = [f"{g.kind}-graph for {rank}: {len(g.vertices)} vertices, {len(g.edges)} edges"]
        degs = sorted(set(g.vertices.values()))
        for d in degs:
            names = sorted(_vertex_name(g, v) for v in g.slice(d))
            lines.append(f"  degree {d}: " + "  ".join(names))
        for s, t, a in sorted(g.edges, key=lambda e: (g.vertices[e[0]], repr(e))):
            lines.append(f"  {_vertex_name(g, s)} -> {_vertex_name(g, t)}  [{a}]")
        _emit(args, "\n".join(lines), stem + ".txt")
    return 0


def _vertex_name(g: ob.OrbitGraph, v) -> str:
    if g.kind == "F":
        return ob.display(v, g.rank)
    return g.vertex_label(v)


def _run_one(job):
    name, rank, seed = job
    return verify.run_suite(name, rank, seed)


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if "all" in args.suites else args.suites
    for name in names:
        if name not in verify.SUITES:
            print(f"unknown suite {name!r}; choose from {', '.join(verify.SUITES)}", file=sys.stderr)
            return 2
        if name in verify.NEEDS_COPRIME:
            args.rank.require_coprime()
    jobs = [(name, args.rank, args.seed) for name in names]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(job) for job in jobs]
    report = "\n".join(r.line() for r in results)
    _emit(args, report, f"verify_{args.rank.n}_{args.rank.m}.txt")
    return 0 if all(r.passed for r in results) else 1


def cmd_matrix(args) -> int:
    rank = args.rank
    if args.weight:
        w = sv.Weight.parse(args.weight, rank)
    else:
        w = sv.x_of(dg.parse_partition(args.partition, rank), rank)
    mat = sv.a_matrix(w)
    for _ in range(args.rotate):
        mat = sv.rotate_matrix(mat)
    lines = [f"weight {w}", mat.render(zeros_only=args.zeros_only)]
    try:
        lines.append(f"supporting partition: {dg.format_partition(sv.a_of(w, rank))}")
    except WeylGroupoidError as exc:
        lines.append(f"supporting partition: none ({exc})")
    _emit(args, "\n".join(lines), f"matrix_{rank.n}_{rank.m}.txt")
    return 0


def cmd_roots(args) -> int:
    rank = args.rank
    sigma = Shuffle.parse(args.sigma, rank) if args.sigma else Shuffle.identity(rank)
    roots = af.global_seq(sigma, args.k, rank)
    local = af.local_names(roots, args.k)
    if args.format == "json":
        payload = {"sigma": sigma.to_json(), "k": args.k,
                   "global": [r.to_json() for r in roots],
                   "local": [r.to_json() for r in local],
                   "extending": af.extending_root(roots).to_json(),
                   "nodes": list(af.diagram_nodes(roots))}
        _emit(args, json.dumps(payload, ensure_ascii=False), f"roots_{rank.n}_{rank.m}.json")
        return 0
    lines = [f"Borel {sigma} at rotation {args.k}",
             "global: " + ", ".join(map(str, roots)),
             "local:  " + ", ".join(map(str, local)),
             f"extending root: {af.extending_root(roots)}",
             af.render_chain(roots)]
    if args.extended:
        lines.append("extended diagram:")
        lines.append(af.render_cycle(af.extend(roots)))
    if args.reflect is not None:
        ext = af.extend(roots)
        out, flagged = af.odd_reflect_extended(ext, args.reflect)
        lines.append("after reflecting node %d: %s" % (args.reflect, ", ".join(map(str, out))))
        if flagged:
            lines.append("warning: reflection at the extending node is outside the checked closed forms")
    _emit(args, "\n".join(lines), f"roots_{rank.n}_{rank.m}.txt")
    return 0


def cmd_conjecture(args) -> int:
    rank = args.rank.require_coprime()
    if args.rr or args.ss:
        if not (args.rr and args.ss):
            print("--rr and --ss go together", file=sys.stderr)
            return 2
        spec = sv.BlockSpec(args.rr, args.ss).validate(rank)
    else:
        spec = sv.lambda1_block_spec(rank)
    w = sv.block_weight(spec, rank)
    lam = sv.block_partition(spec, rank)
    x = sv.x_of(lam, rank).shift(-rank.m * rank.n)
    same = sorted(x.a) == sorted(w.a) and sorted(x.b) == sorted(w.b)
    lines = [f"blocks rr={spec.rr} ss={spec.ss}",
             f"offsets a_p: {spec.offsets(rank)}",
             f"block weight: {w}",
             f"partition: {dg.format_partition(lam)}  dual: {dg.dual(lam, rank)}",
             f"x(partition) - mn: {x}  (same entries: {same})"]
    status = 0 if same else 1
    if args.search:
        bound = args.bound if args.bound is not None else 2 * rank.m * rank.n
        path = sv.orbit_search(sv.lambda0(rank), w, rank, (-bound, bound))
        if path is None:
            lines.append("no move path within the degree bound")
            status = 1
        else:
            lines.append(f"move path of length {len(path)}:")
            for mv in path:
                lines.append(f"  {'+' if mv.sign > 0 else '-'} on ({mv.a_value}, {mv.b_value}) -> {mv.result}")
    _emit(args, "\n".join(lines), f"conjecture_{rank.n}_{rank.m}.txt")
    return status


def cmd_verma(args) -> int:
    rank = args.rank
    level = rank.m - rank.n if args.level is None else args.level
    lam = vm.minus_rho(rank, level)
    records = vm.finite_chains(rank) if args.finite else vm.affine_chains(rank, args.max_degree)
    rows, status = [], 0
    for t, rec in enumerate(records):
        if args.limit is not None and t >= args.limit:
            break
        value = vm.completeness_criterion(lam, rec.betas)
        if value != 0:
            status = 1
        rows.append(json.dumps({
            "path": [str(a) for a in rec.labels],
            "betas": [{"root": str(b), "level": b.level} for b in rec.betas],
            "criterion": str(value),
        }, ensure_ascii=False))
    _emit(args, "\n".join(rows), f"verma_{rank.n}_{rank.m}.jsonl")
    return status


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weyl-groupoid", description=__doc__.splitlines()[0])
    p.add_argument("--out", help=f"output directory (default: ${OUT_ENV} or stdout)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--rank", type=_rank, required=True, help="n,m")
        sp.add_argument("--out", default=argparse.SUPPRESS, help="output directory")

    sp = sub.add_parser("orbit", help="build an orbit graph")
    common(sp)
    sp.add_argument("--kind", choices=("F", "B", "SV"), default="F")
    sp.add_argument("--source", help="partition, shuffle or weight (default: the base vertex)")
    sp.add_argument("--k", type=int, default=0, help="rotation number of the source")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--min-degree", type=int)
    sp.add_argument("--format", choices=("text", "dot", "json"), default="text")
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp)
    sp.add_argument("suites", nargs="+", help="suite names or 'all': " + ", ".join(verify.SUITES))
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("matrix", help="render the bordered difference matrix")
    common(sp)
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--weight", help="a1,..,an|b1,..,bm")
    grp.add_argument("--partition", help="l1,..,ln (uses x of the partition)")
    sp.add_argument("--zeros-only", action="store_true")
    sp.add_argument("--rotate", type=int, default=0, help="move the bottom row to the top this many times")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("roots", help="global and local simple roots of a Borel")
    common(sp)
    sp.add_argument("--sigma", help="shuffle such as \"1',1,2',3',2\" (default: identity)")
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--extended", action="store_true")
    sp.add_argument("--reflect", type=int, help="reflect the extended list at this node")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("conjecture", help="block weights and move paths to them")
    common(sp)
    sp.add_argument("--rr", type=_ints)
    sp.add_argument("--ss", type=_ints)
    sp.add_argument("--search", action="store_true", help="search a move path from the base weight")
    sp.add_argument("--bound", type=int)
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("verma", help="criterion values along chains, as JSON lines")
    common(sp)
    sp.add_argument("--finite", action="store_true", help="only chains inside the rectangle")
    sp.add_argument("--max-degree", type=int, default=6)
    sp.add_argument("--level", type=int)
    sp.add_argument("--limit", type=int)
    sp.set_defaults(func=cmd_verma)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WeylGroupoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
