"""Subset dynamic programming kernels for the exact solver.

Vertex subsets are bitmasks.  ``endpoint_table`` marks, for every subset,
the vertices at which a Hamiltonian path of that subset can end (a subset
is traceable iff its entry is nonzero).  ``best_coverage`` maximises the
number of vertices covered by vertex-disjoint traceable parts of size at
least k, visiting for each subset all sub-parts that contain its lowest
vertex.  Both loops are jit-compiled; the 3^n transition count is the
reason for the solver's size limit.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _tables(adj: np.ndarray, n: int, k: int):
    size = 1 << n
    ep = np.zeros(size, dtype=np.uint32)
    for v in range(n):
        ep[1 << v] = 1 << v
    for s in range(3, size):
        if s & (s - 1) == 0:
            continue
        e = 0
        for v in range(n):
            b = 1 << v
            if s & b and (ep[s ^ b] & adj[v]) != 0:
                e |= b
        ep[s] = e

    pop = np.zeros(size, dtype=np.uint8)
    for s in range(1, size):
        pop[s] = pop[s >> 1] + (s & 1)

    f = np.zeros(size, dtype=np.int8)
    for s in range(1, size):
        low = s & (-s)
        best = f[s ^ low]
        sub = s
        while sub:
            if (sub & low) != 0 and pop[sub] >= k and ep[sub] != 0:
                cand = f[s ^ sub] + pop[sub]
                if cand > best:
                    best = cand
            sub = (sub - 1) & s
        f[s] = best
    return ep, f


def solve(adj_masks: list[int], k: int) -> tuple[int, list[tuple[int, ...]]]:
    """Maximum coverage and one witnessing set of traceable parts.

    ``adj_masks[v]`` is the neighbor bitmask of vertex v.  Returns the
    optimum value together with parts as vertex sequences (Hamiltonian
    paths of the chosen subsets), reconstructed deterministically.
    """
    n = len(adj_masks)
    if n == 0:
        return 0, []
    if n > 18:
        return _solve_sparse(adj_masks, k)
    adj = np.asarray(adj_masks, dtype=np.uint32)
    ep, f = _tables(adj, n, k)

    def extract(s: int) -> tuple[int, ...]:
        end = int(ep[s]) & -int(ep[s])
        seq = [end.bit_length() - 1]
        while s != end:
            s ^= end
            cand = int(ep[s]) & adj_masks[seq[-1]]
            end = cand & -cand
            seq.append(end.bit_length() - 1)
        return tuple(reversed(seq))

    parts: list[tuple[int, ...]] = []
    s = (1 << n) - 1
    while s:
        low = s & -s
        if f[s] == f[s ^ low]:
            s ^= low
            continue
        sub = s
        while sub:
            if (
                sub & low
                and sub.bit_count() >= k
                and ep[sub] != 0
                and f[s ^ sub] + sub.bit_count() == f[s]
            ):
                parts.append(extract(sub))
                s ^= sub
                break
            sub = (sub - 1) & s
        else:  # pragma: no cover - DP invariant
            raise AssertionError("reconstruction failed")
    return int(f[(1 << n) - 1]), parts


def _solve_sparse(adj_masks: list[int], k: int) -> tuple[int, list[tuple[int, ...]]]:
    """Top-down variant for graphs too large for the full-subset tables.

    Recurses on the lowest remaining vertex: leave it uncovered, or put it
    on one of the candidate parts through it.  Parts are restricted to
    orders [k, 2k-1] without loss (a longer part splits into in-range
    traceable parts covering the same vertices), which keeps candidate
    enumeration to short simple paths.  States are memoized per remaining
    subset; the state space stays small on sparse graphs, which is the
    regime that needs n > 18.
    """
    n = len(adj_masks)
    lo_len, hi_len = k, 2 * k - 1

    def parts_through(low: int, avail: int) -> list[tuple[int, tuple[int, ...]]]:
        # Arms: simple paths starting at `low` inside `avail`, as (mask, seq).
        arms: list[tuple[int, tuple[int, ...]]] = [(1 << low, (low,))]
        stack = [(1 << low, (low,))]
        while stack:
            mask, seq = stack.pop()
            if len(seq) == hi_len:
                continue
            cand = adj_masks[seq[-1]] & avail & ~mask
            while cand:
                b = cand & -cand
                cand ^= b
                nxt = (mask | b, seq + (b.bit_length() - 1,))
                arms.append(nxt)
                stack.append(nxt)
        out: list[tuple[int, tuple[int, ...]]] = []
        seen: set[int] = set()
        for am, aseq in arms:
            for bm, bseq in arms:
                if am & bm != 1 << low:
                    continue
                order = len(aseq) + len(bseq) - 1
                if not lo_len <= order <= hi_len:
                    continue
                mask = am | bm
                if mask in seen:
                    continue
                seen.add(mask)
                out.append((mask, aseq[::-1] + bseq[1:]))
        return out

    memo: dict[int, tuple[int, tuple[int, tuple[int, ...]] | None]] = {0: (0, None)}

    def best(s: int) -> int:
        cached = memo.get(s)
        if cached is not None:
            return cached[0]
        low = (s & -s).bit_length() - 1
        value = best(s & (s - 1))
        choice: tuple[int, tuple[int, ...]] | None = None
        for mask, seq in parts_through(low, s):
            cand = len(seq) + best(s ^ mask)
            if cand > value:
                value = cand
                choice = (mask, seq)
        memo[s] = (value, choice)
        return value

    full = (1 << n) - 1
    total = best(full)
    parts: list[tuple[int, ...]] = []
    s = full
    while s:
        _, choice = memo[s]
        if choice is None:
            s &= s - 1
        else:
            parts.append(choice[1])
            s ^= choice[0]
    return total, parts
