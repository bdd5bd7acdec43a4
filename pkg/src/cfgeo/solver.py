"""Exact conflict-free colorability.

The main search assigns each vertex either "uncolored" or a color ``1..k``.
Every vertex ``v`` carries a counter of colors already placed in its
neighborhood and the number of undecided neighborhood members; a branch dies
as soon as some vertex can no longer end up with a uniquely colored
neighbor.  The next vertex to branch on is taken from the neighborhood with
the fewest undecided members (ties: higher degree, then lower id), which
makes small gadgets attached to a clique fail fast.

``is_cf_1_colorable`` is a separate exact-cover search (closed mode with one
color means every closed neighborhood holds exactly one colored vertex).
``brute_force_colorable`` enumerates every assignment with numpy and never
prunes; tests use it as the reference for the two searches.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from cfgeo.graph import CLOSED, OPEN, Graph, GraphError, PartialColoring, check_mode, make_graph, verify_cf

UNDECIDED = -1
UNCOLORED = 0


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search reached a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted; result inconclusive")
        self.nodes = nodes


class SolverInvariantError(AssertionError):
    pass


def default_budget() -> int | None:
    raw = os.environ.get("CFGEO_BUDGET")
    return int(raw) if raw else None


class _Search:
    def __init__(self, g: Graph, k: int, mode: str, budget: int | None, max_colored: int | None):
        self.g = g
        self.k = k
        self.budget = budget
        self.max_colored = max_colored
        self.nodes = 0
        n = g.n
        # members[v]: vertices whose color matters for v; watchers[u]: vertices u matters for
        self.members = [g.neighborhood(v, mode) for v in range(n)]
        watchers: list[list[int]] = [[] for _ in range(n)]
        for v in range(n):
            for u in self.members[v]:
                watchers[u].append(v)
        self.watchers = [tuple(w) for w in watchers]
        self.col = [UNDECIDED] * n
        self.cnt = [[0] * (k + 1) for _ in range(n)]
        self.und = [len(m) for m in self.members]
        self.rank = sorted(range(n), key=lambda v: (-g.degree(v), v))
        self.pos = {v: i for i, v in enumerate(self.rank)}
        self.n_colored = 0

    def _alive(self, v: int) -> bool:
        cnt = self.cnt[v]
        if self.und[v] == 0:
            return any(cnt[x] == 1 for x in range(1, self.k + 1))
        return any(cnt[x] <= 1 for x in range(1, self.k + 1))

    def _assign(self, u: int, x: int) -> int | None:
        """Place ``u = x``; return a vertex whose condition became unsatisfiable, if any."""
        self.col[u] = x
        for v in self.watchers[u]:
            self.und[v] -= 1
            if x:
                self.cnt[v][x] += 1
        if x:
            self.n_colored += 1
        for v in self.watchers[u]:
            if not self._alive(v):
                return v
        return None

    def _unassign(self, u: int) -> None:
        x = self.col[u]
        for v in self.watchers[u]:
            self.und[v] += 1
            if x:
                self.cnt[v][x] -= 1
        if x:
            self.n_colored -= 1
        self.col[u] = UNDECIDED

    def _pick(self) -> int | None:
        best_v, best_key = None, None
        for v in range(self.g.n):
            d = self.und[v]
            if d and (best_key is None or d < best_key):
                best_v, best_key = v, d
                if d == 1:
                    break
        if best_v is None:
            return None
        return min((u for u in self.members[best_v] if self.col[u] == UNDECIDED), key=self.pos.__getitem__)

    def run(self) -> list[int] | None:
        if self.g.n == 0:
            return []
        if any(not self._alive(v) for v in range(self.g.n)):
            return None
        if self._rec(0) is True:
            return list(self.col)
        return None

    def _rec(self, used: int) -> bool | set[int]:
        # Conflict-directed backjumping: a failed subtree returns the set of
        # decided vertices whose values explain the failure.  Color symmetry
        # (only colors <= used+1 are tried) keeps explanations sound, since
        # any fresh color fails for the same reasons as used+1.
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.budget)
        u = self._pick()
        if u is None:
            for v in range(self.g.n):
                if self.col[v] == UNDECIDED:
                    self.col[v] = UNCOLORED
            return True
        options = list(range(1, min(self.k, used + 1) + 1))
        conflict: set[int] = set()
        if self.max_colored is not None and self.n_colored >= self.max_colored:
            options = []
            conflict.update(v for v in range(self.g.n) if self.col[v] > 0)
        options.append(UNCOLORED)
        for x in options:
            dead = self._assign(u, x)
            if dead is None:
                res = self._rec(max(used, x))
                if res is True:
                    return True
                if u not in res:
                    self._unassign(u)
                    return res
                conflict |= res
            else:
                conflict.update(w for w in self.members[dead] if self.col[w] != UNDECIDED)
            self._unassign(u)
        conflict.discard(u)
        return conflict


def is_cf_k_colorable(
    g: Graph,
    k: int,
    mode: str = CLOSED,
    budget: int | None = None,
    max_colored: int | None = None,
) -> PartialColoring | None:
    """Witness conflict-free coloring with at most ``k`` colors, or None.

    Raises :class:`BudgetExceeded` when more than ``budget`` search nodes
    would be needed.  ``max_colored`` caps the number of colored vertices.
    """
    check_mode(mode)
    if k < 0:
        raise GraphError("k must be non-negative")
    col = _Search(g, k, mode, budget, max_colored).run()
    if col is None:
        return None
    witness = PartialColoring(k, tuple(c if c > 0 else None for c in col))
    if not verify_cf(g, witness, mode).valid:
        raise SolverInvariantError("search returned a coloring the verifier rejects")
    return witness


@dataclass(frozen=True)
class ChromaticResult:
    k: int
    witness: PartialColoring


def cf_chromatic_number(g: Graph, mode: str = CLOSED, budget: int | None = None) -> ChromaticResult | None:
    """Smallest k admitting a conflict-free k-coloring, with a witness.

    Returns None only in open mode for graphs that have no open-neighborhood
    coloring at all (any graph with an isolated vertex).
    """
    check_mode(mode)
    if g.n == 0:
        return ChromaticResult(0, PartialColoring(0, ()))
    if mode == OPEN and any(g.degree(v) == 0 for v in range(g.n)):
        return None
    for k in range(1, g.n + 1):
        w = is_cf_k_colorable(g, k, mode, budget=budget)
        if w is not None:
            return ChromaticResult(k, w)
    return None


# -- one color: exact cover ----------------------------------------------------


def _exact_covers(g: Graph) -> Iterator[list[int]]:
    """All S with |N[v] & S| == 1 for every v, via Knuth's Algorithm X."""
    rows = {s: g.neighborhood(s) for s in range(g.n)}
    cols: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for s, vs in rows.items():
        for v in vs:
            cols[v].add(s)

    def select(r: int) -> list[set[int]]:
        removed = []
        for j in rows[r]:
            for i in cols[j]:
                for k in rows[i]:
                    if k != j:
                        cols[k].remove(i)
            removed.append(cols.pop(j))
        return removed

    def deselect(r: int, removed: list[set[int]]) -> None:
        for j in reversed(rows[r]):
            cols[j] = removed.pop()
            for i in cols[j]:
                for k in rows[i]:
                    if k != j:
                        cols[k].add(i)

    partial: list[int] = []

    def solve() -> Iterator[list[int]]:
        if not cols:
            yield sorted(partial)
            return
        c = min(cols, key=lambda v: (len(cols[v]), v))
        for r in sorted(cols[c]):
            partial.append(r)
            removed = select(r)
            yield from solve()
            deselect(r, removed)
            partial.pop()

    yield from solve()


def is_cf_1_colorable(g: Graph) -> list[int] | None:
    """A perfect code of ``g`` (closed-mode conflict-free 1-coloring), or None."""
    return next(_exact_covers(g), None)


def all_cf_1_colorings(g: Graph) -> Iterator[list[int]]:
    return _exact_covers(g)


# -- brute-force reference -----------------------------------------------------

BRUTE_FORCE_MAX_N = 12


def _valid_rows(assign: np.ndarray, nbhd: np.ndarray, k: int) -> np.ndarray:
    ok_vertex = np.zeros((assign.shape[0], nbhd.shape[1]), dtype=bool)
    for x in range(1, k + 1):
        counts = (assign == x).astype(np.int16) @ nbhd
        ok_vertex |= counts == 1
    return ok_vertex.all(axis=1)


def brute_force_colorable(g: Graph, k: int, mode: str = CLOSED) -> PartialColoring | None:
    """Enumerate all (k+1)^n assignments without pruning; n <= 12.

    Returns the first valid assignment in lexicographic order of the color
    vectors (uncolored = 0), or None.
    """
    check_mode(mode)
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise GraphError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if n == 0:
        return PartialColoring(k, ())
    nbhd = np.zeros((n, n), dtype=np.int16)
    for v in range(n):
        for u in g.neighborhood(v, mode):
            nbhd[u, v] = 1
    head = min(n, 8)
    head_rows = np.array(list(itertools.product(range(k + 1), repeat=head)), dtype=np.int8)
    for tail in itertools.product(range(k + 1), repeat=n - head):
        assign = np.hstack([head_rows, np.tile(np.array(tail, dtype=np.int8), (len(head_rows), 1))])
        hits = np.flatnonzero(_valid_rows(assign, nbhd, k))
        if hits.size:
            row = assign[hits[0]]
            return PartialColoring(k, tuple(int(c) if c else None for c in row))
    return None


def brute_force_chromatic(g: Graph, mode: str = CLOSED) -> int | None:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if brute_force_colorable(g, k, mode) is not None:
            return k
    return None


# -- census --------------------------------------------------------------------

CENSUS_MAX_N = 7


def _canonical_code(n: int, edges: frozenset[tuple[int, int]]) -> tuple:
    """Isomorphism-invariant code: min edge bitstring over degree-respecting relabelings."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(deg[v], []).append(v)
    groups = [classes[d] for d in sorted(classes)]
    best = None
    for parts in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        order = [v for part in parts for v in part]
        label = {v: i for i, v in enumerate(order)}
        code = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in edges))
        if best is None or code < best:
            best = code
    return (tuple(sorted(deg)), best)


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, by vertex extension."""
    if n == 0:
        return [make_graph(0, [])]
    layer = {_canonical_code(1, frozenset()): frozenset()}
    for m in range(2, n + 1):
        nxt: dict[tuple, frozenset] = {}
        for edges in layer.values():
            for mask in range(1 << (m - 1)):
                new = edges | {(u, m - 1) for u in range(m - 1) if mask >> u & 1}
                nxt.setdefault(_canonical_code(m, new), new)
        layer = nxt
    return [make_graph(n, sorted(e)) for _, e in sorted(layer.items())]


def census(max_n: int, guard: int = CENSUS_MAX_N, budget: int | None = None) -> dict[int, int]:
    """Maximum conflict-free chromatic number over all graphs on n vertices."""
    if max_n > guard:
        raise GraphError(
            f"census over n <= {max_n} exceeds the guard n <= {guard}; "
            "graph counts grow super-exponentially (raise the guard explicitly)"
        )
    table = {}
    for n in range(1, max_n + 1):
        table[n] = max(cf_chromatic_number(g, budget=budget).k for g in nonisomorphic_graphs(n))
    return table
