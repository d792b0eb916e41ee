"""Command-line surface: generate, solve, exact-solve, benchmark, fixtures.

All errors go to stderr with a non-zero exit code; stdout carries only
results.  File formats are those of the library: the graph text format,
the JSON metadata sidecar, cover files with one path per line, and the
benchmark CSVs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench, solvers
from .graph import Cover, Graph, Path, load_graph, validate_cover
from .instances import (
    DEFAULT_MASTER_SEED,
    Instance,
    fixture_lower_bound_32,
    fixture_tight_ratio_24,
    generate,
    load_instance,
    save_instance,
)


def read_cover_file(path: str, g: Graph, k: int) -> Cover:
    """Cover file: one path per line, whitespace-separated vertex indices."""
    paths = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            tokens = line.split()
            if not tokens:
                continue
            try:
                paths.append(Path([int(t) for t in tokens]))
            except ValueError as exc:
                raise ValueError(f"{path}:{line_no}: {exc}") from exc
    cover = Cover(k, g.n, paths)
    violations = validate_cover(g, cover)
    if violations:
        raise ValueError(f"{path}: invalid cover: " + "; ".join(violations))
    return cover


def write_cover_file(cover: Cover, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for p in cover.paths:
            fh.write(" ".join(map(str, p.vertices)) + "\n")


def _resolve_input(path: str) -> tuple[Graph, Instance | None]:
    """Accept an instance prefix, a .graph file, or a .json sidecar path."""
    prefix = path
    for suffix in (".graph", ".json"):
        if prefix.endswith(suffix):
            prefix = prefix[: -len(suffix)]
    try:
        return load_graph(prefix + ".graph"), load_instance(prefix)
    except ValueError:
        pass
    except FileNotFoundError:
        pass
    graph_path = path if path.endswith(".graph") else prefix + ".graph"
    return load_graph(graph_path), None


def _cmd_gen(args: argparse.Namespace) -> int:
    inst = generate(args.k, args.n, args.d, args.i, args.seed)
    prefix = args.out or f"inst_k{args.k}_n{args.n}_d{args.d}_i{args.i}"
    graph_path, meta_path = save_instance(inst, prefix)
    print(f"n={inst.n} m={inst.graph.m}")
    print(f"wrote {graph_path} {meta_path}")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    graph, inst = _resolve_input(args.infile)
    if args.alg == "approx2":
        if args.k is not None and args.k != 4:
            raise ValueError("approx2 is defined for k = 4 only")
        k = 4
    else:
        if args.k is None:
            raise ValueError("--k is required for approx1")
        k = args.k
    initial = read_cover_file(args.resume, graph, k) if args.resume else None
    if args.alg == "approx2":
        result = solvers.approx2(graph, initial_cover=initial)
    else:
        result = solvers.approx1(graph, k, initial_cover=initial)
    opt = inst.planted_opt if inst is not None else None
    ratio = (opt / result.covered) if opt and result.covered else None
    if args.json:
        payload = {
            "algorithm": args.alg,
            "k": k,
            "covered": result.covered,
            "opt": opt,
            "ratio": ratio,
            "op_counts": result.op_counts,
            "iterations": result.iterations,
            "elapsed_ms": result.elapsed * 1000.0,
            "paths": [list(p.vertices) for p in result.cover.paths],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"covered={result.covered}")
        if ratio is not None:
            print(f"opt={opt} ratio={ratio:.6f}")
        ops_str = " ".join(f"{kind}={cnt}" for kind, cnt in result.op_counts.items())
        print(f"ops: {ops_str}")
    if args.save_cover:
        write_cover_file(result.cover, args.save_cover)
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    graph, _ = _resolve_input(args.infile)
    covered, _cover = solvers.exact_max_cover(graph, args.k, limit=args.limit)
    print(f"optimal={covered}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    with open(args.grid, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{args.grid}: malformed JSON") from exc
    spec = bench.GridSpec.from_json(data)
    records = list(bench.run_grid(spec, workers=args.workers))
    count = bench.write_records_csv(records, args.out)
    print(f"wrote {count} records to {args.out}")
    if args.aggregate:
        rows = bench.aggregate(records)
        bench.write_aggregate_csv(rows, args.aggregate)
        print(f"wrote {len(rows)} aggregate rows to {args.aggregate}")
    return 0


def _cmd_fixtures(args: argparse.Namespace) -> int:
    import os

    os.makedirs(args.outdir, exist_ok=True)
    for name, builder in (
        ("tight24", fixture_tight_ratio_24),
        ("lower32", fixture_lower_bound_32),
    ):
        inst, terminal = builder()
        prefix = os.path.join(args.outdir, name)
        save_instance(inst, prefix)
        write_cover_file(terminal, prefix + ".cover")
        print(
            f"{name}: n={inst.n} m={inst.graph.m} "
            f"terminal_coverage={terminal.coverage()}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcover",
        description="Cover the most vertices with vertex-disjoint paths of order >= k.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a planted instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_MASTER_SEED)
    p.add_argument("--out", help="output prefix (writes PREFIX.graph, PREFIX.json)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="run a local-search solver on an instance")
    p.add_argument("--alg", choices=bench.ALGORITHMS, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--resume", help="start from the cover in this file")
    p.add_argument("--save-cover", help="write the final cover to this file")
    p.add_argument("--json", action="store_true", help="emit the result as JSON")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("exact", help="exact optimum for small graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--limit", type=int, default=solvers.EXACT_DEFAULT_LIMIT)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("bench", help="run an experiment grid, write CSVs")
    p.add_argument("--grid", required=True, help="JSON grid spec file")
    p.add_argument("--out", required=True, help="record CSV path")
    p.add_argument("--aggregate", help="also write the aggregate CSV here")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("fixtures", help="write the fixed worst-case instances")
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
