"""Lower-bound gadgets, the one-color hardness reduction, and instance generators."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from cfgeo.geometry import (
    INTERVAL,
    SQRT3,
    UNIT_DISK,
    UNIT_SQUARE,
    GeoObject,
    GeometricInstance,
    to_fraction,
)
from cfgeo.graph import Graph, GraphError, make_graph
from cfgeo.solver import all_cf_1_colorings

BASE_CLIQUE = "base-clique"
CLAUSE_VERTEX = "clause-vertex"
ENFORCER = "enforcer"
TRUE_VERTEX = "true-vertex"
CYCLE_VERTEX = "cycle-vertex"
PATH_VERTEX = "path-vertex"


def copy_role(level: int) -> str:
    return f"copy({level})"


def chain_role(index: int) -> str:
    return f"chain({index})"


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    roles: tuple[str, ...]
    provenance: dict = field(default_factory=dict, compare=False)

    def vertices_with(self, role: str) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r == role]


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.roles: list[str] = []

    def add(self, role: str) -> int:
        self.roles.append(role)
        self.n += 1
        return self.n - 1

    def attach_copy(self, sub: Graph, role: str, anchors) -> list[int]:
        """Disjoint copy of ``sub`` whose every vertex is also adjacent to all ``anchors``."""
        base = self.n
        for _ in range(sub.n):
            self.add(role)
        self.edges.extend((base + u, base + v) for u, v in sub.edges)
        for x in range(base, base + sub.n):
            self.edges.extend((a, x) for a in anchors)
        return list(range(base, base + sub.n))

    def build(self, provenance: dict) -> GadgetGraph:
        return GadgetGraph(make_graph(self.n, self.edges), tuple(self.roles), provenance)


# -- G_n: unbounded colors for general objects ------------------------------------


def gen_gn(n: int) -> GadgetGraph:
    """Gadget family whose members need exactly ``n`` colors.

    A base clique K_n; two copies of G_{n-1} hanging off each base vertex
    force it to be colored, two copies of G_{n-2} on each base pair force
    the pair apart.
    """
    if n < 1:
        raise GraphError(f"G_n is defined for n >= 1, got {n}")
    b = _Builder()
    if n == 1:
        b.add(BASE_CLIQUE)
        return b.build({"family": "gn", "n": 1})
    if n == 2:
        for _ in range(4):
            b.add(CYCLE_VERTEX)
        b.edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
        return b.build({"family": "gn", "n": 2})
    base = [b.add(BASE_CLIQUE) for _ in range(n)]
    b.edges.extend(itertools.combinations(base, 2))
    g1 = gen_gn(n - 1).graph
    g2 = gen_gn(n - 2).graph
    for v in base:
        for _ in range(2):
            b.attach_copy(g1, copy_role(n - 1), [v])
    for v, w in itertools.combinations(base, 2):
        for _ in range(2):
            b.attach_copy(g2, copy_role(n - 2), [v, w])
    return b.build({"family": "gn", "n": n})


def anchor_subgadget(n: int) -> Graph:
    """One base vertex (id 0) of G_n with its two attached copies of G_{n-1}."""
    if n < 3:
        raise GraphError("subgadgets exist for n >= 3")
    b = _Builder()
    v = b.add(BASE_CLIQUE)
    g1 = gen_gn(n - 1).graph
    for _ in range(2):
        b.attach_copy(g1, copy_role(n - 1), [v])
    return b.build({}).graph


# -- D_k: disk/square chains --------------------------------------------------------


def gen_dk(k: int) -> GadgetGraph:
    """Chain of 2^(k-1) mutually adjacent vertices with two copies of D_{k-1} per index interval."""
    if k < 1:
        raise GraphError(f"D_k is defined for k >= 1, got {k}")
    b = _Builder()
    if k == 1:
        b.add(chain_role(1))
        return b.build({"family": "dk", "k": 1})
    m = 2 ** (k - 1)
    chain = [b.add(chain_role(i + 1)) for i in range(m)]
    b.edges.extend(itertools.combinations(chain, 2))
    sub = gen_dk(k - 1).graph
    for i in range(m):
        for j in range(i, m):
            for _ in range(2):
                b.attach_copy(sub, copy_role(k - 1), chain[i : j + 1])
    return b.build({"family": "dk", "k": k})


def dk_construction_size(k: int) -> int:
    size = 1
    for level in range(2, k + 1):
        m = 2 ** (level - 1)
        size = m + m * (m + 1) * size
    return size


# -- chains as hypergraphs ------------------------------------------------------------


def has_unique_in_every_interval(colors) -> bool:
    m = len(colors)
    for i in range(m):
        counts: dict[int, int] = {}
        for j in range(i, m):
            counts[colors[j]] = counts.get(colors[j], 0) + 1
            if not any(c == 1 for c in counts.values()):
                return False
    return True


def ruler_coloring(m: int) -> list[int]:
    """color(i) = 2-adic valuation of i, plus one, for i = 1..m."""
    return [((i & -i).bit_length()) for i in range(1, m + 1)]


@dataclass(frozen=True)
class ChainResult:
    k: int
    witness: tuple[int, ...]


def chain_min_colors(m: int) -> ChainResult:
    """Fewest colors so that every index interval of a length-m chain has a unique color."""
    if m < 1:
        raise GraphError("chain length must be at least 1")
    witness = ruler_coloring(m)
    if not has_unique_in_every_interval(witness):
        raise AssertionError(f"ruler coloring failed for m={m}")
    return ChainResult(m.bit_length(), tuple(witness))


CHAIN_ORACLE_MAX = 8


def chain_oracle(m: int) -> int:
    """Exhaustive search over full colorings of 1..m; m <= 8."""
    if m < 1:
        raise GraphError("chain length must be at least 1")
    if m > CHAIN_ORACLE_MAX:
        raise GraphError(f"chain oracle enumerates k^m colorings; limited to m <= {CHAIN_ORACLE_MAX}")
    for k in range(1, m + 1):
        if any(has_unique_in_every_interval(c) for c in itertools.product(range(k), repeat=m)):
            return k
    raise AssertionError("unreachable: m distinct colors always work")


# -- recurrences ---------------------------------------------------------------------


def recurrence_gn(n: int) -> int:
    if n < 1:
        raise GraphError("n >= 1")
    vals = {1: 1, 2: 4}
    for i in range(3, n + 1):
        vals[i] = i + 2 * i * vals[i - 1] + i * (i - 1) * vals[i - 2]
    return vals[n]


def recurrence_dk_paper(k: int) -> int:
    """Published size recurrence for D_k (one copy counted per interval)."""
    if k < 1:
        raise GraphError("k >= 1")
    size = 1
    for level in range(2, k + 1):
        m = 2 ** (level - 1)
        size = m + m * (m + 1) // 2 * size
    return size


def gbar_recurrence(n: int) -> int:
    if n < 1:
        raise GraphError("n >= 1")
    vals = {1: 1, 2: 4}
    for i in range(3, n + 1):
        vals[i] = 3 * i * vals[i - 1] + i * (i - 1) * vals[i - 2]
    return vals[n]


def gbar_closed_form(n: int) -> float:
    """Closed form of the upper-bound recurrence, evaluated at 60 significant digits."""
    if n < 1:
        raise GraphError("n >= 1")
    with mpmath.workdps(60):
        r13 = mpmath.sqrt(13)
        value = (
            mpmath.factorial(n)
            / (13 * mpmath.mpf(2) ** (n + 1))
            * ((5 * r13 - 13) * (3 + r13) ** n - (13 + 5 * r13) * (3 - r13) ** n)
        )
        return float(value)


# -- positive 1-in-3-SAT reduction ------------------------------------------------------


@dataclass(frozen=True)
class Formula1in3:
    var_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for c in self.clauses:
            if len(c) != 3:
                raise GraphError(f"clause {c} does not have three variables")
            if len(set(c)) != 3:
                raise GraphError(f"clause {c} repeats a variable")
            for x in c:
                if not 0 <= x < self.var_count:
                    raise GraphError(f"variable {x} outside [0,{self.var_count})")

    def satisfied_by(self, assignment) -> bool:
        return all(sum(bool(assignment[x]) for x in c) == 1 for c in self.clauses)


def one_in_three_satisfiable(phi: Formula1in3) -> tuple[bool, ...] | None:
    """Brute force over all 2^n assignments."""
    for bits in itertools.product((False, True), repeat=phi.var_count):
        if phi.satisfied_by(bits):
            return bits
    return None


@dataclass(frozen=True)
class ReductionLayout:
    cycles: tuple[tuple[int, ...], ...]
    clause_vertices: tuple[int, ...]
    endpoints: tuple[tuple[int, int, int], ...]


def _reduction(phi: Formula1in3, path_length: int) -> tuple[GadgetGraph, ReductionLayout]:
    if not phi.clauses:
        raise GraphError("formula needs at least one clause")
    used = {x for c in phi.clauses for x in c}
    missing = sorted(set(range(phi.var_count)) - used)
    if missing:
        raise GraphError(f"variables {missing} occur in no clause")
    if path_length < 3 or path_length % 3:
        raise GraphError("connecting paths need a positive length divisible by 3")
    k = len(phi.clauses)
    b = _Builder()
    cycles = []
    for _ in range(phi.var_count):
        ring = [b.add(TRUE_VERTEX if i % 3 == 0 else CYCLE_VERTEX) for i in range(12 * k)]
        b.edges.extend((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
        cycles.append(tuple(ring))
    next_true = [0] * phi.var_count
    clause_vs, endpoints = [], []
    for clause in phi.clauses:
        c = b.add(CLAUSE_VERTEX)
        ds = []
        for x in clause:
            # a fresh true vertex per occurrence, spread 12 apart along the cycle
            t = cycles[x][12 * next_true[x]]
            next_true[x] += 1
            path = [b.add(PATH_VERTEX) for _ in range(path_length)]
            b.edges.extend(zip(path, path[1:]))
            b.edges.append((path[-1], t))
            b.edges.append((c, path[0]))
            ds.append(path[0])
        for _ in range(2):
            j = b.add(ENFORCER)
            b.edges.extend((j, d) for d in ds)
        clause_vs.append(c)
        endpoints.append(tuple(ds))
    gadget = b.build({"family": "reduction", "var_count": phi.var_count, "clauses": phi.clauses})
    return gadget, ReductionLayout(tuple(cycles), tuple(clause_vs), tuple(endpoints))


def gen_reduction(phi: Formula1in3, path_length: int = 3) -> GadgetGraph:
    """Abstract graph that is conflict-free 1-colorable iff ``phi`` is 1-in-3 satisfiable.

    Each variable is a cycle of length 12k (k clauses) whose every third
    vertex is a true vertex.  Each clause has a clause vertex joined to path
    endpoints d1, d2, d3, two enforcer vertices adjacent to exactly the d's,
    and each d_i reaches its own true vertex of the variable through a path
    of ``path_length`` edges.
    """
    return _reduction(phi, path_length)[0]


@dataclass(frozen=True)
class GadgetProperties:
    clause_uncolored: bool
    every_third: bool
    solutions: int


GADGET_ENUMERATION_MAX = 400


def verify_gadget_properties(phi: Formula1in3, max_vertices: int = GADGET_ENUMERATION_MAX) -> GadgetProperties:
    """Check the clause and variable gadget behavior over *all* conflict-free 1-colorings."""
    gadget, layout = _reduction(phi, 3)
    if gadget.graph.n > max_vertices:
        raise GraphError(
            f"G(phi) has {gadget.graph.n} vertices; exhaustive enumeration limited to {max_vertices}"
        )
    clause_uncolored = every_third = True
    count = 0
    for solution in all_cf_1_colorings(gadget.graph):
        count += 1
        chosen = set(solution)
        if chosen & set(layout.clause_vertices):
            clause_uncolored = False
        for ring in layout.cycles:
            hit = {i for i, v in enumerate(ring) if v in chosen}
            if not any(hit == set(range(r, len(ring), 3)) for r in range(3)):
                every_third = False
    return GadgetProperties(clause_uncolored, every_third, count)


def curated_formulas() -> list[Formula1in3]:
    """All formulas with at most two clauses over at most five variables (each variable used)."""
    out = []
    for n in range(3, 6):
        triples = list(itertools.combinations(range(n), 3))
        for count in (1, 2):
            for clauses in itertools.combinations_with_replacement(triples, count):
                if {x for c in clauses for x in c} == set(range(n)):
                    out.append(Formula1in3(n, clauses))
    return out


UNSAT_FOUR_CLAUSES = Formula1in3(4, ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)))


# -- named graphs and random instances --------------------------------------------------

BULL_CENTERS = (0, 2, 3, 4, 6)


def bull_graph() -> Graph:
    return make_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])


def bull_interval_instance() -> GeometricInstance:
    return GeometricInstance.from_points(INTERVAL, [(c - 1, c + 1) for c in BULL_CENTERS])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)] if n > 2 else [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_named(name: str, n: int | None = None):
    """``bull`` gives ``(graph, interval instance)``; the others give graphs."""
    if name == "bull":
        return bull_graph(), bull_interval_instance()
    if name == "c4":
        return cycle_graph(4)
    if name in ("star", "path", "cycle", "complete"):
        if n is None or n < 0:
            raise GraphError(f"{name} needs a size")
        return {"star": star_graph, "path": path_graph, "cycle": cycle_graph, "complete": complete_graph}[name](n)
    raise GraphError(f"unknown named graph {name!r}")


GRID = 1000


def _grid_max(bound) -> int:
    if bound is SQRT3:
        return math.isqrt(3 * GRID * GRID)
    return math.floor(to_fraction(bound) * GRID)


def random_instance(kind: str, n: int, width, height, seed: int, max_size=1) -> GeometricInstance:
    """Uniform centers on the 1/1000 grid inside [0, width] x [0, height].

    For intervals, ``lo`` is uniform in [0, width] and the length uniform in
    [0, height].  Non-unit disks and squares draw their size from
    (0, max_size] on the same grid.
    """
    if n < 0:
        raise GraphError("n must be non-negative")
    rng = random.Random(seed)
    wmax, hmax = _grid_max(width), _grid_max(height)
    smax = max(1, _grid_max(max_size))
    objs = []
    for i in range(n):
        a = Fraction(rng.randint(0, wmax), GRID)
        b = Fraction(rng.randint(0, hmax), GRID)
        if kind == INTERVAL:
            objs.append(GeoObject.interval(i, a, a + b))
        elif kind in (UNIT_DISK, UNIT_SQUARE):
            objs.append(GeoObject(i, kind, a, b))
        else:
            objs.append(GeoObject(i, kind, a, b, Fraction(rng.randint(1, smax), GRID)))
    return GeometricInstance(kind, tuple(objs))
