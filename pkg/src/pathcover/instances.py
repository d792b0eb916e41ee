"""Benchmark instance generation, fixed worst-case graphs, and file I/O.

Generated instances plant a full cover: the vertex set is first laid out
as disjoint paths with orders drawn from [k, 2k-1], then noise edges are
added between non-path pairs with probability d, and finally the labels
are permuted.  The planted paths certify that the optimum covers all n
vertices, so benchmark ratios never need an exact solve.

All randomness comes from splitmix64 streams keyed by
(master_seed, k, n, round(d * 1e6), i); equal keys reproduce instances
bit-for-bit on any platform, so instance files can be regenerated rather
than archived.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .graph import Cover, Graph, Path, load_graph, save_graph

_MASK64 = (1 << 64) - 1

#: Seed used when callers do not supply one (CLI default, tests).
DEFAULT_MASTER_SEED = 0x5EEDC0DE


class SplitMix64:
    """splitmix64 generator: 64-bit state, one multiply-xorshift per draw."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Uniform draw from [0, bound); bound must be positive."""
        return self.next_u64() % bound

    def next_float(self) -> float:
        """Uniform draw from [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def shuffle(self, xs: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.next_below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


def stream_seed(master_seed: int, k: int, n: int, d: float, i: int) -> int:
    """Fold the instance key into one 64-bit stream seed.

    The density enters as round(d * 1e6) so float formatting never leaks
    into the key; each component is xor-ed in and scrambled once.
    """
    acc = master_seed & _MASK64
    for comp in (k, n, round(d * 10**6), i):
        acc = SplitMix64(acc ^ (comp & _MASK64)).next_u64()
    return acc


@dataclass
class Instance:
    """A benchmark graph plus its generation metadata.

    ``planted_opt`` equals n whenever the construction embeds a full
    cover; ``planted_paths`` (in final labels) is that cover, or None for
    files saved without it.
    """

    graph: Graph
    k: int
    n: int
    d: float
    index: int
    planted_opt: int
    planted_paths: list[Path] | None
    master_seed: int | None = None


def _draw_orders(rng: SplitMix64, k: int, n: int) -> list[int]:
    """Path orders partitioning n vertices, each within [k, 2k-1].

    Orders are drawn uniformly while at least 3k-1 vertices remain; a
    remainder of at most 2k-1 becomes one final path, anything larger
    (at most 3k-2) is split uniformly over the feasible two-path splits.
    """
    orders: list[int] = []
    remaining = n
    while remaining >= 3 * k - 1:
        length = k + rng.next_below(k)
        orders.append(length)
        remaining -= length
    if remaining <= 2 * k - 1:
        orders.append(remaining)
    else:
        lo = max(k, remaining - (2 * k - 1))
        hi = min(2 * k - 1, remaining - k)
        first = lo + rng.next_below(hi - lo + 1)
        orders.extend([first, remaining - first])
    return orders


def generate(k: int, n: int, d: float, i: int, master_seed: int = DEFAULT_MASTER_SEED) -> Instance:
    """Generate the planted instance labeled (k, n, d, i).

    Rejects n < k, k < 4 and densities outside [0, 1].  Equal arguments
    always produce an identical graph.
    """
    if k < 4:
        raise ValueError(f"k must be at least 4, got {k}")
    if n < k:
        raise ValueError(f"n={n} is smaller than k={k}")
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"density {d} outside [0, 1]")
    rng = SplitMix64(stream_seed(master_seed, k, n, d, i))

    orders = _draw_orders(rng, k, n)
    raw_paths: list[tuple[int, ...]] = []
    start = 0
    for length in orders:
        raw_paths.append(tuple(range(start, start + length)))
        start += length

    path_edges = {
        (p[j], p[j + 1]) for p in raw_paths for j in range(len(p) - 1)
    }
    edges: list[tuple[int, int]] = sorted(path_edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in path_edges and rng.next_float() < d:
                edges.append((u, v))

    perm = list(range(n))
    rng.shuffle(perm)
    final_edges = [(perm[u], perm[v]) for u, v in edges]
    planted = [Path([perm[v] for v in p]) for p in raw_paths]

    return Instance(
        graph=Graph(n, final_edges),
        k=k,
        n=n,
        d=d,
        index=i,
        planted_opt=n,
        planted_paths=planted,
        master_seed=master_seed,
    )


def _paths_from_labels(label_paths: list[list[str]], index: dict[str, int]) -> list[Path]:
    return [Path([index[name] for name in p]) for p in label_paths]


def _union_graph(n: int, path_sets: list[list[Path]]) -> Graph:
    edges: set[tuple[int, int]] = set()
    for paths in path_sets:
        for p in paths:
            for a, b in zip(p.vertices, p.vertices[1:]):
                edges.add((min(a, b), max(a, b)))
    return Graph(n, sorted(edges))


def fixture_tight_ratio_24() -> tuple[Instance, Cover]:
    """24-vertex graph where the general-k search can stall at 10 vertices.

    The graph is the union of an optimal cover of all 24 vertices (one
    4-path and four 5-paths) with two crossing 5-paths.  Started from the
    two crossing paths, none of add/rep/double-rep applies, so the
    algorithm keeps 10 covered vertices against an optimum of 24: the
    ratio 24/10 = 2.4 is attained, matching the k=4 worst-case bound.
    """
    names = (
        [f"u{i}" for i in range(5)]
        + [f"v{i}" for i in range(5)]
        + [f"w{i}" for i in range(6)]
        + [f"x{i}" for i in range(8)]
    )
    ix = {name: i for i, name in enumerate(names)}
    optimal = _paths_from_labels(
        [
            ["u4", "u0", "v0", "v4"],
            ["w0", "u1", "w1", "v1", "w2"],
            ["x0", "x1", "u2", "x2", "x3"],
            ["x4", "x5", "v2", "x6", "x7"],
            ["w3", "u3", "w4", "v3", "w5"],
        ],
        ix,
    )
    stalled = _paths_from_labels(
        [
            ["u0", "u1", "u2", "u3", "u4"],
            ["v0", "v1", "v2", "v3", "v4"],
        ],
        ix,
    )
    graph = _union_graph(24, [optimal, stalled])
    inst = Instance(
        graph=graph,
        k=4,
        n=24,
        d=0.0,
        index=0,
        planted_opt=24,
        planted_paths=optimal,
        master_seed=0,
    )
    terminal = Cover(4, 24, stalled)
    return inst, terminal


def fixture_lower_bound_32() -> tuple[Instance, Cover]:
    """32-vertex graph where the five-operation search stalls at 18 vertices.

    An optimal cover reaches all 32 vertices; the returned terminal cover
    (two 5-paths and two 4-paths, 18 vertices) admits none of the five
    moves, witnessing the 32/18 = 16/9 lower bound on the k=4
    algorithm's worst-case ratio.
    """
    names = (
        [f"u{i}" for i in range(4)]
        + [f"v{i}" for i in range(4)]
        + [f"w{i}" for i in range(4)]
        + [f"x{i}" for i in range(4)]
        + [f"y{i}" for i in range(8)]
        + [f"z{i}" for i in range(8)]
    )
    ix = {name: i for i, name in enumerate(names)}
    optimal = _paths_from_labels(
        [
            ["u0", "v0", "w0", "x0"],
            ["y0", "u1", "y1", "v1", "y2"],
            ["z0", "x1", "z1", "w1", "z2"],
            ["y3", "u2", "y4", "v2", "y5"],
            ["z3", "x2", "z4", "w2", "z5"],
            ["y6", "u3", "y7", "v3"],
            ["w3", "z7", "x3", "z6"],
        ],
        ix,
    )
    stalled = _paths_from_labels(
        [
            ["u0", "u1", "u2", "u3", "y7"],
            ["v0", "v1", "v2", "v3"],
            ["w0", "w1", "w2", "w3"],
            ["x0", "x1", "x2", "x3", "z7"],
        ],
        ix,
    )
    graph = _union_graph(32, [optimal, stalled])
    inst = Instance(
        graph=graph,
        k=4,
        n=32,
        d=0.0,
        index=0,
        planted_opt=32,
        planted_paths=optimal,
        master_seed=0,
    )
    terminal = Cover(4, 32, stalled)
    return inst, terminal


def save_instance(inst: Instance, prefix: str) -> tuple[str, str]:
    """Write ``prefix.graph`` and the ``prefix.json`` metadata sidecar."""
    graph_path = prefix + ".graph"
    meta_path = prefix + ".json"
    save_graph(inst.graph, graph_path)
    meta = {
        "k": inst.k,
        "n": inst.n,
        "d": inst.d,
        "i": inst.index,
        "master_seed": inst.master_seed,
        "planted_paths": (
            None
            if inst.planted_paths is None
            else [list(p.vertices) for p in inst.planted_paths]
        ),
    }
    with open(meta_path, "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2)
        fh.write("\n")
    return graph_path, meta_path


def load_instance(prefix: str) -> Instance:
    """Read an instance back; metadata inconsistencies raise ValueError."""
    graph_path = prefix + ".graph"
    meta_path = prefix + ".json"
    graph = load_graph(graph_path)
    if not os.path.exists(meta_path):
        raise ValueError(f"missing metadata sidecar {meta_path}")
    with open(meta_path, "r", encoding="utf-8") as fh:
        try:
            meta = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{meta_path}: malformed JSON") from exc
    for key in ("k", "n", "d", "i"):
        if key not in meta:
            raise ValueError(f"{meta_path}: missing key {key!r}")
    if meta["n"] != graph.n:
        raise ValueError(
            f"{meta_path}: metadata says n={meta['n']} but graph has {graph.n}"
        )
    planted = None
    if meta.get("planted_paths") is not None:
        planted = [Path(p) for p in meta["planted_paths"]]
        for p in planted:
            for a, b in zip(p.vertices, p.vertices[1:]):
                if not graph.adjacent(a, b):
                    raise ValueError(
                        f"{meta_path}: planted edge ({a}, {b}) absent from graph"
                    )
    return Instance(
        graph=graph,
        k=meta["k"],
        n=meta["n"],
        d=meta["d"],
        index=meta["i"],
        planted_opt=meta["n"],
        planted_paths=planted,
        master_seed=meta.get("master_seed"),
    )
