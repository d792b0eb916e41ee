"""Local-improvement operations on a path cover.

Five move finders share one convention: they are read-only on
``(graph, cover)``, scan in a fixed order (paths in insertion order,
orientations head-first, indices and vertices ascending) and return the
first applicable move, so equal states always produce equal results.

Move kinds:

* ``add``         -- insert a k-path found among the uncovered vertices.
* ``rep``         -- replace a prefix of a path by a strictly longer
                     extension hanging off the uncovered subgraph.
* ``double_rep``  -- replace one path by two order->=k paths grown from a
                     prefix and a non-overlapping suffix via two disjoint
                     extensions.
* ``recover``     -- (k=4 only) repartition two paths of order >= 5 into
                     paths of order >= 4, at least one of order exactly 4;
                     coverage stays equal, the 4-path count grows.
* ``lookahead``   -- (k=4 only) trial-replace a path by an equal-coverage
                     variant and, if that unlocks a ``rep``, commit both.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .graph import Cover, Extension, Graph, Path, split_pieces

ADD = "add"
REP = "rep"
DOUBLE_REP = "double_rep"
RECOVER = "recover"
LOOKAHEAD = "lookahead"

MOVE_KINDS = (ADD, REP, DOUBLE_REP, RECOVER, LOOKAHEAD)


@dataclass(frozen=True)
class Move:
    """A replacement of ``removed`` cover paths by ``added`` ones."""

    kind: str
    removed: tuple[Path, ...]
    added: tuple[Path, ...]
    coverage_delta: int


def _move(kind: str, removed: Sequence[Path], added: Sequence[Path]) -> Move:
    delta = sum(p.order for p in added) - sum(p.order for p in removed)
    return Move(kind, tuple(removed), tuple(added), delta)


def find_extension(
    g: Graph,
    c: Cover,
    anchor: int,
    min_order: int = 1,
    max_order: int | None = None,
    forbidden: frozenset[int] | set[int] = frozenset(),
) -> Extension | None:
    """First uncovered path of order in [min_order, max_order] at ``anchor``.

    Depth-first over simple paths of the uncovered subgraph minus
    ``forbidden``, started at the anchor's neighbors in ascending index
    order; the first path reaching ``min_order`` vertices is returned
    (its first vertex is the one adjacent to the anchor).  ``None`` means
    no such extension exists.
    """
    if max_order is None:
        max_order = c.k - 1
    if not 1 <= min_order <= max_order:
        raise ValueError(f"invalid order bounds [{min_order}, {max_order}]")
    path: list[int] = []

    def dfs(v: int) -> bool:
        path.append(v)
        if len(path) >= min_order:
            return True
        for w in g.neighbors(v):
            if not c.is_covered(w) and w not in forbidden and w not in path:
                if dfs(w):
                    return True
        path.pop()
        return False

    for s in g.neighbors(anchor):
        if not c.is_covered(s) and s not in forbidden:
            if dfs(s):
                return Extension(path, anchor)
    return None


def _iter_extensions_of_order(
    g: Graph,
    c: Cover,
    anchor: int,
    order: int,
    forbidden: frozenset[int] | set[int] = frozenset(),
) -> Iterator[tuple[int, ...]]:
    """All extensions at ``anchor`` of exactly ``order`` vertices, DFS order."""
    path: list[int] = []

    def dfs(v: int) -> Iterator[tuple[int, ...]]:
        path.append(v)
        if len(path) == order:
            yield tuple(path)
        else:
            for w in g.neighbors(v):
                if not c.is_covered(w) and w not in forbidden and w not in path:
                    yield from dfs(w)
        path.pop()

    for s in g.neighbors(anchor):
        if not c.is_covered(s) and s not in forbidden:
            yield from dfs(s)


def find_add(g: Graph, c: Cover) -> Move | None:
    """First k-path of the uncovered subgraph, by DFS over ascending starts."""
    k = c.k
    path: list[int] = []

    def dfs(v: int) -> bool:
        path.append(v)
        if len(path) == k:
            return True
        for w in g.neighbors(v):
            if not c.is_covered(w) and w not in path:
                if dfs(w):
                    return True
        path.pop()
        return False

    for s in range(g.n):
        if not c.is_covered(s) and dfs(s):
            return _move(ADD, (), (Path(path),))
    return None


def find_rep(g: Graph, c: Cover) -> Move | None:
    """First prefix replacement that covers at least one more vertex.

    For a path oriented either way, position t gains when an extension of
    order >= t + 1 exists at the t-th vertex: the t-vertex prefix is
    dropped and the reversed extension glued in its place.  Extension
    searches are capped at order k - 1; drivers run ``find_add`` first,
    which would consume any longer free path.
    """
    k = c.k
    for p in c.paths:
        L = p.order
        t_hi = min((L + 1) // 2 - 1, k - 2)
        for seq in (p.vertices, p.vertices[::-1]):
            for t in range(t_hi + 1):
                ext = find_extension(g, c, seq[t], min_order=t + 1, max_order=k - 1)
                if ext is not None:
                    new_path = Path(ext.vertices[::-1] + seq[t:])
                    return _move(REP, (p,), (new_path,))
    return None


def find_double_rep(g: Graph, c: Cover, prune: bool = True) -> Move | None:
    """First split of one path into two order->=k paths via two extensions.

    Case (i) grows a prefix ending at position t and a second path from a
    later position j towards the tail; case (ii) grows the prefix and a
    non-overlapping suffix.  The first extension is enumerated over all
    minimal-order candidates and its vertices are passed as ``forbidden``
    to the second search, so the pair found is always vertex-disjoint.

    With ``prune`` a position pair is skipped when the required extension
    order exceeds the position's distance to its nearest path end; when
    no ``rep`` applies no extension can beat that bound, so the pruned
    and unpruned scans agree on every state the drivers visit.
    """
    k = c.k
    for p in c.paths:
        L = p.order
        u_hi = (L + 1) // 2 - 1
        v_hi = L // 2 - 1
        for seq in (p.vertices, p.vertices[::-1]):
            # case (i): keep prefix [0..t] and suffix [j..], both growing at u-side
            for t in range(u_hi + 1):
                r1 = max(1, k - (t + 1))
                if prune and r1 > t:
                    continue
                for j in range(t + 1, u_hi + 1):
                    r2 = max(1, k - (L - j))
                    if prune and r2 > j:
                        continue
                    mv = _double_rep_pair(g, c, p, seq, t, r1, j, L, r2, suffix_from=j)
                    if mv is not None:
                        return mv
            # case (ii): keep prefix [0..t] and the tail-side suffix of j+1 vertices
            for t in range(u_hi + 1):
                r1 = max(1, k - (t + 1))
                if prune and r1 > t:
                    continue
                for j in range(v_hi + 1):
                    if t + j > L - 2:
                        break  # prefix and suffix would overlap
                    r2 = max(1, k - (j + 1))
                    if prune and r2 > j:
                        continue
                    mv = _double_rep_pair(
                        g, c, p, seq, t, r1, L - 1 - j, L, r2, suffix_from=L - 1 - j
                    )
                    if mv is not None:
                        return mv
    return None


def _double_rep_pair(
    g: Graph,
    c: Cover,
    p: Path,
    seq: tuple[int, ...],
    t: int,
    r1: int,
    second_pos: int,
    L: int,
    r2: int,
    suffix_from: int,
) -> Move | None:
    """Try one (t, j) position pair of a double replacement."""
    for e1 in _iter_extensions_of_order(g, c, seq[t], r1):
        e2 = find_extension(
            g, c, seq[second_pos], min_order=r2, max_order=c.k - 1, forbidden=set(e1)
        )
        if e2 is not None:
            p1 = Path(seq[: t + 1] + e1)
            p2 = Path(e2.vertices[::-1] + seq[suffix_from:])
            return _move(DOUBLE_REP, (p,), (p1, p2))
    return None


def find_recover(g: Graph, c: Cover, memo: dict | None = None) -> Move | None:
    """First pair of order->=5 paths whose vertices repartition into
    order->=4 paths with at least one exact 4-path (k = 4 only).

    Feasibility depends only on the subgraph induced on the pair's vertex
    union, so callers that probe many near-identical covers may pass a
    ``memo`` dict to reuse verdicts across calls.  Coverage is unchanged;
    the number of 4-paths strictly increases.
    """
    if c.k != 4:
        raise ValueError("re-cover is defined for k = 4 only")
    paths = c.paths
    for i in range(len(paths)):
        if paths[i].order < 5:
            continue
        for j in range(i + 1, len(paths)):
            if paths[j].order < 5:
                continue
            key = frozenset(paths[i].vertices) | frozenset(paths[j].vertices)
            if memo is not None and key in memo:
                parts = memo[key]
            else:
                parts = _recover_partition(g, paths[i], paths[j])
                if memo is not None:
                    memo[key] = parts
            if parts is not None:
                added = [
                    piece for part in parts for piece in split_pieces(part, c.k)
                ]
                return _move(RECOVER, (paths[i], paths[j]), added)
    return None


def _recover_partition(
    g: Graph, pa: Path, pb: Path
) -> tuple[tuple[int, ...], ...] | None:
    """Exact partition of V(pa) | V(pb) into traceable parts of order >= 4
    with at least one part of order exactly 4, or None.

    When the induced subgraph carries no edge beyond the two paths' own
    edges, every traceable subset is a contiguous subpath; orders 5..7
    cannot shed a >=4 part and leave a coverable remainder, so only the
    original pair partitions the union and no exact 4-part can exist.
    That case is answered without the subset DP below.
    """
    world = sorted(pa.vertices + pb.vertices)
    m = len(world)
    idx = {v: i for i, v in enumerate(world)}
    in_world = set(world)
    edge_count = 0
    adj = [0] * m
    for v in world:
        for w in g.neighbors(v):
            if w in in_world:
                adj[idx[v]] |= 1 << idx[w]
                if v < w:
                    edge_count += 1
    if edge_count == (pa.order - 1) + (pb.order - 1):
        return None

    # ep[S]: bitmask of vertices at which some Hamiltonian path of S ends.
    full = (1 << m) - 1
    ep = [0] * (full + 1)
    for v in range(m):
        ep[1 << v] = 1 << v
    for S in range(3, full + 1):
        if S & (S - 1) == 0:
            continue
        e = 0
        T = S
        while T:
            b = T & -T
            if ep[S ^ b] & adj[b.bit_length() - 1]:
                e |= b
            T ^= b
        ep[S] = e

    def extract(S: int) -> tuple[int, ...]:
        # Walk one Hamiltonian path of S backwards from its lowest endpoint.
        end = ep[S] & -ep[S]
        seq = [end.bit_length() - 1]
        while S != end:
            S ^= end
            cand = ep[S] & adj[seq[-1]]
            end = cand & -cand
            seq.append(end.bit_length() - 1)
        return tuple(world[i] for i in reversed(seq))

    # A valid partition has at most three parts (m <= 14, parts >= 4):
    # one exact 4-part plus a remainder covered by one or two parts.
    for quad in combinations(range(m), 4):
        s1 = (1 << quad[0]) | (1 << quad[1]) | (1 << quad[2]) | (1 << quad[3])
        if not ep[s1]:
            continue
        rest = full ^ s1
        if ep[rest]:
            return (extract(s1), extract(rest))
        low = rest & -rest
        sub = rest
        while sub:
            if (
                sub & low
                and ep[sub]
                and sub.bit_count() >= 4
                and (rest ^ sub).bit_count() >= 4
                and ep[rest ^ sub]
            ):
                return (extract(s1), extract(sub), extract(rest ^ sub))
            sub = (sub - 1) & rest
    return None


def find_lookahead(g: Graph, c: Cover) -> Move | None:
    """First trial replacement that unlocks a coverage gain (k = 4 only).

    Case (i): swap a t-vertex prefix (t in {2, 3}) for an extension of
    exactly t vertices at position t -- coverage unchanged -- and keep the
    swap only if ``find_rep`` now succeeds somewhere in the cover.  The
    trial runs on a scratch copy, so a failed probe leaves the cover
    untouched.

    Case (ii): on a 6-path with a 2-vertex extension at position 2, turn
    the path into head-half + extension and re-attach the freed tail half
    as a 3-vertex extension at a vertex w adjacent to one of its ends,
    where w sits on the new path's last two vertices, on the kept head
    pair, or within distance 1 of another path's end.
    """
    if c.k != 4:
        raise ValueError("look-ahead is defined for k = 4 only")

    # case (i)
    for p in c.paths:
        L = p.order
        if L < 5:
            continue
        u_hi = (L + 1) // 2 - 1
        for seq in (p.vertices, p.vertices[::-1]):
            for t in (2, 3):
                if t > u_hi:
                    continue
                for e1 in _iter_extensions_of_order(g, c, seq[t], t):
                    trial_path = Path(e1[::-1] + seq[t:])
                    scratch = c.copy()
                    scratch.replace_path(p, trial_path)
                    rep = find_rep(g, scratch)
                    if rep is not None:
                        removed = [p] + [q for q in rep.removed if q != trial_path]
                        added = list(rep.added)
                        if trial_path not in rep.removed:
                            added.append(trial_path)
                        return _move(LOOKAHEAD, removed, added)

    # case (ii)
    for p in c.paths:
        if p.order != 6:
            continue
        for seq in (p.vertices, p.vertices[::-1]):
            for e1 in _iter_extensions_of_order(g, c, seq[2], 2):
                new_p = Path(seq[:3] + e1)
                freed = (seq[5], seq[4], seq[3])  # tail triple, outermost first
                mv = _lookahead_reattach(g, c, p, new_p, freed)
                if mv is not None:
                    return mv
    return None


def _lookahead_reattach(
    g: Graph, c: Cover, p: Path, new_p: Path, freed: tuple[int, int, int]
) -> Move | None:
    """Second half of look-ahead case (ii): re-home the freed tail triple.

    Re-attachment sites are scanned as (host path, w, distance-from-end):
    first the replacement path's own tail pair and head pair, then every
    other cover path's four near-end vertices.  The freed triple attaches
    at whichever of its two endpoints is adjacent to w.
    """
    sites: list[tuple[Path, int, int]] = []
    nv = new_p.vertices
    sites.append((new_p, nv[4], 0))
    sites.append((new_p, nv[3], 1))
    sites.append((new_p, nv[0], 0))
    sites.append((new_p, nv[1], 1))
    for q in c.paths:
        if q is p:
            continue
        qv = q.vertices
        sites.append((q, qv[0], 0))
        sites.append((q, qv[1], 1))
        sites.append((q, qv[-2], 1))
        sites.append((q, qv[-1], 0))

    for host, w, dist in sites:
        for attach in (freed[0], freed[2]):
            if not g.adjacent(attach, w):
                continue
            triple = freed if attach == freed[0] else freed[::-1]
            hseq = host.vertices
            pos = hseq.index(w)
            if pos != dist:
                hseq = hseq[::-1]
            merged = Path(triple[::-1] + hseq[dist:])
            if host is new_p:
                removed, added = [p], [merged]
            else:
                removed, added = [p, host], [new_p, merged]
            return _move(LOOKAHEAD, removed, added)
    return None


def apply_move(c: Cover, m: Move) -> Cover:
    """Apply ``m`` to the cover it was computed against, then normalise.

    Added paths of order >= 2k are split into in-range pieces.  A stale
    move (a removed path that is gone, or an added path colliding with
    the remaining cover) is rejected before any mutation.
    """
    remaining = list(c.paths)
    for p in m.removed:
        try:
            remaining.remove(p)
        except ValueError:
            raise ValueError(f"stale move: {p} not in cover") from None
    freed = {v for p in m.removed for v in p.vertices}
    new_vertices: set[int] = set()
    for p in m.added:
        for v in p.vertices:
            if (c.is_covered(v) and v not in freed) or v in new_vertices:
                raise ValueError(f"stale move: added vertex {v} collides")
            new_vertices.add(v)
    for p in m.removed:
        c.remove_path(p)
    for p in m.added:
        for piece in split_pieces(p.vertices, c.k):
            c.add_path(piece)
    return c
