"""Solver drivers: the two local-improvement algorithms and an exact oracle.

``approx1`` iterates add / rep / double-rep for any k >= 4; ``approx2``
adds the re-cover and look-ahead moves for k = 4.  Both always apply the
first applicable move in that fixed priority order, keep every path order
inside [k, 2k-1], and stop at the first state where nothing applies.
``exact_max_cover`` is an independent subset-DP oracle for small graphs,
used to certify approximation ratios in the test suite.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from . import ops
from .graph import Cover, Graph, split_pieces, validate_cover

#: Largest graph the exact solver accepts by default (3^n DP transitions).
EXACT_DEFAULT_LIMIT = 18


@dataclass
class SolveResult:
    """Outcome of one solver run, with per-operation instrumentation."""

    cover: Cover
    covered: int
    op_counts: dict[str, int] = field(default_factory=dict)
    iterations: int = 0
    elapsed: float = 0.0


def _prepare_cover(g: Graph, k: int, initial_cover: Cover | None) -> Cover:
    if initial_cover is None:
        return Cover(k, g.n)
    if initial_cover.k != k:
        raise ValueError(f"initial cover has k={initial_cover.k}, expected {k}")
    if initial_cover.n != g.n:
        raise ValueError("initial cover built for a different vertex count")
    violations = validate_cover(g, initial_cover)
    if violations:
        raise ValueError("invalid initial cover: " + "; ".join(violations))
    return initial_cover.copy()


def approx1(g: Graph, k: int, initial_cover: Cover | None = None) -> SolveResult:
    """Run the general-k local search until no move applies.

    Each applied move covers at least one more vertex, so the loop makes
    at most n(G) iterations.  At termination no free k-path exists and no
    prefix of any path can be replaced by a longer extension.
    """
    if k < 4:
        raise ValueError(f"k must be at least 4, got {k}")
    if k > g.n:
        raise ValueError(f"k={k} exceeds the vertex count {g.n}")
    start = time.perf_counter()
    cover = _prepare_cover(g, k, initial_cover)
    counts = {ops.ADD: 0, ops.REP: 0, ops.DOUBLE_REP: 0}
    iterations = 0
    while True:
        move = ops.find_add(g, cover) or ops.find_rep(g, cover) or ops.find_double_rep(
            g, cover
        )
        if move is None:
            break
        before = cover.coverage()
        ops.apply_move(cover, move)
        if cover.coverage() <= before:  # pragma: no cover - loop guard
            raise RuntimeError(f"non-improving {move.kind} move")
        counts[move.kind] += 1
        iterations += 1
    return SolveResult(
        cover=cover,
        covered=cover.coverage(),
        op_counts=counts,
        iterations=iterations,
        elapsed=time.perf_counter() - start,
    )


def approx2(g: Graph, initial_cover: Cover | None = None) -> SolveResult:
    """Run the five-operation local search for k = 4.

    Moves are tried in the order add, rep, double-rep, re-cover,
    look-ahead and the first applicable one is applied.  Termination
    follows from the lexicographic potential (coverage, 4-path count):
    every move raises it and both components are bounded by n(G).
    """
    k = 4
    start = time.perf_counter()
    cover = _prepare_cover(g, k, initial_cover)
    counts = {kind: 0 for kind in ops.MOVE_KINDS}
    iterations = 0
    recover_memo: dict = {}
    while True:
        move = (
            ops.find_add(g, cover)
            or ops.find_rep(g, cover)
            or ops.find_double_rep(g, cover)
            or ops.find_recover(g, cover, memo=recover_memo)
            or ops.find_lookahead(g, cover)
        )
        if move is None:
            break
        before = (cover.coverage(), cover.path_count_of_order(4))
        ops.apply_move(cover, move)
        after = (cover.coverage(), cover.path_count_of_order(4))
        if after <= before:  # pragma: no cover - loop guard
            raise RuntimeError(f"non-improving {move.kind} move")
        counts[move.kind] += 1
        iterations += 1
    return SolveResult(
        cover=cover,
        covered=cover.coverage(),
        op_counts=counts,
        iterations=iterations,
        elapsed=time.perf_counter() - start,
    )


def exact_max_cover(
    g: Graph, k: int, limit: int = EXACT_DEFAULT_LIMIT
) -> tuple[int, Cover]:
    """Maximum number of vertices coverable by disjoint order->=k paths.

    Exact subset dynamic programming over all vertex subsets: a subset
    may form one path iff it is traceable, and the optimum for a set
    splits off the part containing its lowest vertex.  Intended as an
    oracle; graphs larger than ``limit`` vertices are refused.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n > limit:
        raise ValueError(
            f"graph has {g.n} vertices; exact solver is limited to {limit}"
        )
    cover = Cover(k, g.n)
    if g.n == 0 or k > g.n:
        return 0, cover
    from . import _subsetdp

    adj_masks = [0] * g.n
    for u in range(g.n):
        for v in g.neighbors(u):
            adj_masks[u] |= 1 << v
    covered, parts = _subsetdp.solve(adj_masks, k)
    for part in parts:
        for piece in split_pieces(part, k):
            cover.add_path(piece)
    assert cover.coverage() == covered
    return covered, cover


def theoretical_ratio(k: int) -> float:
    """Worst-case approximation ratio bound of the general-k algorithm.

    Exactly 12/5 for k = 4 (the bound is tight there); otherwise the
    parity-dependent closed form, which stays below 0.4394*k + 0.6576.
    """
    if k < 4:
        raise ValueError(f"k must be at least 4, got {k}")
    if k == 4:
        return 2.4
    if k % 2 == 1:
        return (3 * k + 1) / 2 - math.sqrt(18 * k * k - 3) / 4
    return (3 * k + 1) / 2 - math.sqrt(18 * k * k - 21) / 4
