"""Graph, path and cover data model.

The solvers in this package work on simple undirected graphs with dense
integer vertex indices ``0..n-1``.  A *long path* is a simple path on at
least ``k`` vertices, and a cover is a collection of vertex-disjoint long
paths; the number of vertices on its paths is what the solvers maximise.
Covers are kept normalised so that every path has order (vertex count)
between ``k`` and ``2k - 1``: a longer path can always be cut into a
``k``-path plus a remainder without losing coverage.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Adjacency is queryable in O(1) via per-vertex neighbor sets; sorted
    neighbor tuples are kept alongside for deterministic iteration.
    """

    __slots__ = ("n", "m", "_nbr_sets", "_nbrs", "_matrix")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        nbr_sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbr_sets[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbr_sets[u].add(v)
            nbr_sets[v].add(u)
            m += 1
        self.m = m
        self._nbr_sets = nbr_sets
        self._nbrs: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in nbr_sets
        )
        self._matrix = None

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in ascending index order."""
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in self._nbrs[u]:
                if u < v:
                    yield (u, v)

    def adjacency_matrix(self):
        """Packed boolean adjacency matrix (built lazily, cached)."""
        if self._matrix is None:
            import numpy as np

            mat = np.zeros((self.n, self.n), dtype=bool)
            for u in range(self.n):
                for v in self._nbrs[u]:
                    mat[u, v] = True
            self._matrix = mat
        return self._matrix

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Path:
    """Simple path as an ordered sequence of distinct vertex indices.

    Positional naming: ``u(j)`` is the j-th vertex from the head and
    ``v(j)`` the j-th from the tail, so ``u(j) == v(order - 1 - j)``.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[int]):
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError(f"path vertices not distinct: {vs}")
        self.vertices = vs

    @property
    def order(self) -> int:
        return len(self.vertices)

    def u(self, j: int) -> int:
        """j-th vertex from the head."""
        return self.vertices[j]

    def v(self, j: int) -> int:
        """j-th vertex from the tail."""
        return self.vertices[self.order - 1 - j]

    @property
    def head(self) -> int:
        return self.vertices[0]

    @property
    def tail(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1])

    def is_path_in(self, g: Graph) -> bool:
        """True if every consecutive pair is adjacent in ``g``."""
        vs = self.vertices
        return all(g.adjacent(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Path) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return "Path(" + "-".join(map(str, self.vertices)) + ")"


class Extension:
    """Path of uncovered vertices attachable to the cover at ``anchor``.

    ``vertices[0]`` is the endpoint adjacent to the anchor, so gluing the
    reversed extension in front of the anchor yields a longer path.
    """

    __slots__ = ("vertices", "anchor")

    def __init__(self, vertices: Sequence[int], anchor: int):
        self.vertices = tuple(vertices)
        self.anchor = anchor

    @property
    def order(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Extension)
            and self.vertices == other.vertices
            and self.anchor == other.anchor
        )

    def __repr__(self) -> str:
        return f"Extension({'-'.join(map(str, self.vertices))} @ {self.anchor})"


class Cover:
    """Mutable collection of vertex-disjoint paths of order in [k, 2k-1].

    This is the solver state.  A boolean membership table is maintained so
    that "is this vertex covered" is O(1) for the search operations.  A
    Cover is single-owner mutable: share copies, not the instance.
    """

    __slots__ = ("k", "n", "paths", "_covered", "_coverage")

    def __init__(self, k: int, n: int, paths: Iterable[Path] = ()):
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        self.n = n
        self.paths: list[Path] = []
        self._covered = bytearray(n)
        self._coverage = 0
        for p in paths:
            self.add_path(p)

    def add_path(self, p: Path) -> None:
        for v in p.vertices:
            if self._covered[v]:
                raise ValueError(f"vertex {v} already covered")
        for v in p.vertices:
            self._covered[v] = 1
        self._coverage += p.order
        self.paths.append(p)

    def remove_path(self, p: Path) -> None:
        self.paths.remove(p)  # raises ValueError if absent
        for v in p.vertices:
            self._covered[v] = 0
        self._coverage -= p.order

    def replace_path(self, old: Path, new: Path) -> None:
        """Swap ``old`` for ``new`` at the same position in the path list."""
        i = self.paths.index(old)  # raises ValueError if absent
        for v in old.vertices:
            self._covered[v] = 0
        for v in new.vertices:
            if self._covered[v]:
                raise ValueError(f"vertex {v} already covered")
            self._covered[v] = 1
        self._coverage += new.order - old.order
        self.paths[i] = new

    def is_covered(self, v: int) -> bool:
        return bool(self._covered[v])

    def coverage(self) -> int:
        """Total number of covered vertices."""
        return self._coverage

    def covered_vertices(self) -> set[int]:
        return {v for p in self.paths for v in p.vertices}

    def free_vertices(self) -> list[int]:
        """Uncovered vertices in ascending order."""
        return [v for v in range(self.n) if not self._covered[v]]

    def path_count_of_order(self, order: int) -> int:
        return sum(1 for p in self.paths if p.order == order)

    def copy(self) -> "Cover":
        c = Cover.__new__(Cover)
        c.k = self.k
        c.n = self.n
        c.paths = list(self.paths)
        c._covered = bytearray(self._covered)
        c._coverage = self._coverage
        return c

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Cover)
            and self.k == other.k
            and self.n == other.n
            and self.paths == other.paths
        )

    def __repr__(self) -> str:
        return f"Cover(k={self.k}, paths={len(self.paths)}, covered={self._coverage})"


def validate_cover(g: Graph, c: Cover) -> list[str]:
    """Check all cover invariants; one description per violation.

    Violations are data, not errors: an empty list means the cover is
    valid.  Checked: vertex indices in range, paths are simple paths of
    ``g``, pairwise vertex-disjointness, and orders within [k, 2k-1].
    """
    violations: list[str] = []
    seen: dict[int, int] = {}
    for idx, p in enumerate(c.paths):
        vs = p.vertices
        for v in vs:
            if not 0 <= v < g.n:
                violations.append(f"range: path {idx} vertex {v} not in [0, {g.n})")
        if len(set(vs)) != len(vs):
            violations.append(f"not-a-path: path {idx} repeats a vertex")
        for a, b in zip(vs, vs[1:]):
            if 0 <= a < g.n and 0 <= b < g.n and not g.adjacent(a, b):
                violations.append(f"not-a-path: path {idx} edge ({a}, {b}) missing")
        if not c.k <= p.order <= 2 * c.k - 1:
            violations.append(
                f"order: path {idx} has order {p.order}, outside [{c.k}, {2 * c.k - 1}]"
            )
        for v in vs:
            if v in seen:
                violations.append(f"overlap: vertex {v} on paths {seen[v]} and {idx}")
            else:
                seen[v] = idx
    return violations


def split_pieces(vertices: Sequence[int], k: int) -> list[Path]:
    """Cut a vertex sequence into paths of order < 2k.

    Repeats the rule "detach the first k vertices" until the remainder is
    short enough; the vertex set is preserved exactly.
    """
    vs = tuple(vertices)
    pieces: list[Path] = []
    while len(vs) >= 2 * k:
        pieces.append(Path(vs[:k]))
        vs = vs[k:]
    pieces.append(Path(vs))
    return pieces


def split_long_path(c: Cover, p: Path) -> Cover:
    """Replace an over-long path of ``c`` by its split pieces, in place.

    Rejects paths of order < 2k (nothing to split) and paths not in the
    cover.  Coverage is unchanged.
    """
    if p.order < 2 * c.k:
        raise ValueError(f"path order {p.order} is below 2k = {2 * c.k}; nothing to split")
    idx = c.paths.index(p)  # raises ValueError if absent
    c.paths[idx : idx + 1] = split_pieces(p.vertices, c.k)
    return c


def save_graph(g: Graph, path: str) -> None:
    """Write the graph text format: "n m" then one "u v" line per edge."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{g.n} {g.m}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def load_graph(path: str) -> Graph:
    """Read the graph text format; malformed input raises ValueError."""
    with open(path, "r", encoding="utf-8") as fh:
        tokens = fh.read().split()
    if len(tokens) < 2:
        raise ValueError(f"{path}: missing header")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise ValueError(f"{path}: malformed header") from exc
    if len(tokens) != 2 + 2 * m:
        raise ValueError(f"{path}: expected {m} edges, found {(len(tokens) - 2) // 2}")
    edges = []
    for i in range(m):
        try:
            u, v = int(tokens[2 + 2 * i]), int(tokens[3 + 2 * i])
        except ValueError as exc:
            raise ValueError(f"{path}: malformed edge line {i}") from exc
        if not u < v:
            raise ValueError(f"{path}: edge ({u}, {v}) must satisfy u < v")
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc
