"""Simple graphs, partial colorings and the conflict-free condition.

Vertices are dense integer ids ``0..n-1``.  A :class:`PartialColoring` maps
each vertex to a color in ``1..palette_size`` or to ``None`` (uncolored).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

CLOSED = "closed"
OPEN = "open"
MODES = (CLOSED, OPEN)


class GraphError(ValueError):
    """Raised for malformed graphs and mismatched colorings."""


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise GraphError(f"unknown neighborhood mode {mode!r}; expected 'closed' or 'open'")
    return mode


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, row in enumerate(self.adj):
            if list(row) != sorted(set(row)):
                raise GraphError(f"neighbors of {u} not sorted/unique: {row}")
            for v in row:
                if not 0 <= v < self.n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise GraphError(f"asymmetric edge ({u},{v})")

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighborhood(self, v: int, mode: str = CLOSED) -> tuple[int, ...]:
        """``N[v]`` (closed, sorted, includes ``v``) or ``N(v)`` (open)."""
        if mode == OPEN:
            return self.adj[v]
        return tuple(sorted(self.adj[v] + (v,)))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, symmetrizing and deduplicating the edge list."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
        if u == v:
            raise GraphError(f"edge ({u},{v}) is a self-loop")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shifted = [(u + a.n, v + a.n) for u, v in b.edges]
    return make_graph(a.n + b.n, a.edges + shifted)


@dataclass(frozen=True)
class PartialColoring:
    palette_size: int
    colors: tuple[int | None, ...]

    def __post_init__(self):
        if self.palette_size < 0:
            raise GraphError("palette size must be non-negative")
        for v, c in enumerate(self.colors):
            if c is not None and not 1 <= c <= self.palette_size:
                raise GraphError(f"vertex {v} has color {c} outside 1..{self.palette_size}")

    @classmethod
    def from_dict(cls, n: int, assignment: dict[int, int], palette_size: int | None = None):
        colors: list[int | None] = [None] * n
        for v, c in assignment.items():
            if not 0 <= v < n:
                raise GraphError(f"colored vertex {v} outside [0,{n})")
            colors[v] = c
        if palette_size is None:
            palette_size = max(assignment.values(), default=0)
        return cls(palette_size, tuple(colors))

    @classmethod
    def uncolored(cls, n: int, palette_size: int = 0):
        return cls(palette_size, (None,) * n)

    def __len__(self) -> int:
        return len(self.colors)

    def as_dict(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.colors) if c is not None}

    @property
    def colored(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c is not None]

    @property
    def used_colors(self) -> set[int]:
        return {c for c in self.colors if c is not None}


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple[int, ...] = field(default=())
    mode: str = CLOSED


def has_cf_neighbor(g: Graph, colors: Sequence[int | None], v: int, mode: str = CLOSED) -> bool:
    counts: dict[int, int] = {}
    for u in g.neighborhood(v, mode):
        c = colors[u]
        if c is not None:
            counts[c] = counts.get(c, 0) + 1
    return any(k == 1 for k in counts.values())


def verify_cf(g: Graph, c: PartialColoring, mode: str = CLOSED) -> VerifyReport:
    """Check that every vertex sees a uniquely colored vertex in its neighborhood."""
    check_mode(mode)
    if len(c) != g.n:
        raise GraphError(f"coloring has length {len(c)} but graph has {g.n} vertices")
    bad = tuple(v for v in range(g.n) if not has_cf_neighbor(g, c.colors, v, mode))
    return VerifyReport(valid=not bad, violations=bad, mode=mode)


# -- structural checks -------------------------------------------------------


def _closed_masks(g: Graph) -> list[int]:
    return [(1 << v) | sum(1 << u for u in g.adj[v]) for v in range(g.n)]


def _greedy_dominating(masks: list[int], full: int) -> int:
    covered, size = 0, 0
    while covered != full:
        best = max(range(len(masks)), key=lambda v: (bin(masks[v] & ~covered).count("1"), -v))
        covered |= masks[best]
        size += 1
    return size


def domination_number(g: Graph) -> int:
    """Exact domination number by branch and bound.

    Branches on the lowest undominated vertex (one of its closed neighbors
    must join the set) and bounds with ``ceil(undominated / max_cover)``.
    Meant for n up to about 40.
    """
    if g.n == 0:
        return 0
    masks = _closed_masks(g)
    full = (1 << g.n) - 1
    best = _greedy_dominating(masks, full)
    max_cover = max(bin(m).count("1") for m in masks)

    def rec(covered: int, size: int) -> None:
        nonlocal best
        if covered == full:
            best = min(best, size)
            return
        left = g.n - bin(covered).count("1")
        if size + -(-left // max_cover) >= best:
            return
        low = covered ^ (covered + 1)
        u = low.bit_length() - 1  # lowest zero bit of covered
        for w in sorted(g.neighborhood(u), key=lambda w: -bin(masks[w] & ~covered).count("1")):
            rec(covered | masks[w], size + 1)

    rec(0, 0)
    return best


def minimum_dominating_sets(g: Graph) -> list[tuple[int, ...]]:
    gamma = domination_number(g)
    masks = _closed_masks(g)
    full = (1 << g.n) - 1
    out = []
    for combo in itertools.combinations(range(g.n), gamma):
        acc = 0
        for v in combo:
            acc |= masks[v]
        if acc == full:
            out.append(combo)
    return out


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g: Graph) -> float | int:
    """Largest shortest-path distance; ``math.inf`` if disconnected, 0 if empty."""
    best = 0
    for s in range(g.n):
        for d in bfs_distances(g, s):
            if d is None:
                return float("inf")
            best = max(best, d)
    return best


@dataclass(frozen=True)
class AreaConditions:
    cond1: bool
    cond2: bool


def _private_common_neighbor(g: Graph, a: int, b: int, third: int) -> bool:
    common = set(g.adj[a]) & set(g.adj[b])
    return any(w != third and not g.has_edge(w, third) for w in common)


def check_area_conditions(g: Graph) -> AreaConditions:
    """Necessary conditions for a 3-color-requiring unit disk graph in a 2x2 square.

    cond1: domination number is 3 and in every minimum dominating set each
    pair has a common neighbor that is neither the third vertex nor adjacent
    to it.  cond2: diameter exactly 2.
    """
    cond1 = False
    if domination_number(g) == 3:
        cond1 = all(
            _private_common_neighbor(g, a, b, c)
            and _private_common_neighbor(g, a, c, b)
            and _private_common_neighbor(g, b, c, a)
            for a, b, c in minimum_dominating_sets(g)
        )
    return AreaConditions(cond1=cond1, cond2=diameter(g) == 2)


def min_colored_vertices(g: Graph, k: int, mode: str = CLOSED, budget: int | None = None) -> int | None:
    """Fewest colored vertices in any valid conflict-free k-coloring, or None."""
    from cfgeo.solver import is_cf_k_colorable

    if k < 1:
        raise GraphError("k must be at least 1")
    for size in range(g.n + 1):
        if is_cf_k_colorable(g, k, mode, budget=budget, max_colored=size) is not None:
            return size
    return None
