"""Greedy conflict-free colorings of strips, unit disks, unit squares and intervals.

Points are processed in lexicographic order ``(x, y, id)``.  The greedy
colors, one at a time, the largest point ``c`` such that every smaller point
is colored or adjacent to a colored point once ``c`` joins the colored set,
and alternates the two palette colors along the way.  Every result is
checked with :func:`cfgeo.graph.verify_cf` before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cfgeo.geometry import (
    INTERVAL,
    SQRT3,
    UNIT_DISK,
    UNIT_SQUARE,
    GeometricInstance,
    GeometryError,
    build_intersection_graph,
    format_fraction,
    instance_height,
    le_height,
    strip_decomposition,
)
from cfgeo.graph import Graph, PartialColoring, verify_cf


class PreconditionError(GeometryError):
    pass


class InvariantViolation(AssertionError):
    """A produced coloring failed verification: this is a bug, never expected."""


@dataclass(frozen=True)
class ColoredPointTrace:
    order: tuple[int, ...]
    colors: tuple[int, ...]


@dataclass(frozen=True)
class StripResult:
    coloring: PartialColoring
    trace: ColoredPointTrace
    graph: Graph


def _height_limit(kind: str, experimental: bool):
    if kind == UNIT_DISK:
        return Fraction(2) if experimental else SQRT3
    if kind == UNIT_SQUARE:
        return Fraction(2)
    raise PreconditionError(f"strip greedy needs unit disks or unit squares, got {kind}")


def check_height(inst: GeometricInstance, experimental: bool = False) -> None:
    limit = _height_limit(inst.kind, experimental)
    h = instance_height(inst)
    if not le_height(h, limit):
        ys = sorted(inst.objects, key=lambda o: o.y)
        lo, hi = ys[0], ys[-1]
        raise PreconditionError(
            f"{inst.kind} instance has height {format_fraction(h)} > {limit}: "
            f"object {lo.id} at y={format_fraction(lo.y)}, object {hi.id} at y={format_fraction(hi.y)}"
        )


def _greedy_cover_order(order: list[int], adj: list[set[int]], xs: list[Fraction], reach: Fraction) -> list[int]:
    """Chosen points, in selection order, for points sorted by ``order``.

    ``reach`` bounds the horizontal distance of adjacent points, so the scan
    for each candidate stops once it is out of reach of the first uncovered
    point.
    """
    covered = [False] * len(xs)
    chosen: list[int] = []
    start = 0
    n = len(order)
    while True:
        while start < n and covered[order[start]]:
            start += 1
        if start == n:
            return chosen
        u = order[start]
        best = u
        pending: list[int] = []  # uncovered points strictly before the candidate
        for pos in range(start, n):
            c = order[pos]
            if xs[c] - xs[u] > reach:
                break
            if all(w in adj[c] for w in pending):
                best = c
            if not covered[c]:
                pending.append(c)
        chosen.append(best)
        covered[best] = True
        for w in adj[best]:
            covered[w] = True


def greedy_strip_coloring(
    inst: GeometricInstance,
    palette: tuple[int, int] = (1, 2),
    experimental: bool = False,
) -> StripResult:
    """Two-color a unit-disk strip of height <= sqrt(3) or a unit-square strip of height <= 2.

    With ``experimental=True`` unit-disk instances of height up to 2 are
    accepted and the result is returned even when it fails verification;
    the caller inspects it with ``verify_cf``.
    """
    check_height(inst, experimental)
    g = build_intersection_graph(inst)
    adj = [set(row) for row in g.adj]
    xs = [o.x for o in inst.objects]
    order = sorted(range(len(inst)), key=lambda i: (inst.objects[i].x, inst.objects[i].y, i))
    chosen = _greedy_cover_order(order, adj, xs, Fraction(2))
    colors = tuple(palette[i % 2] for i in range(len(chosen)))
    assignment: list[int | None] = [None] * len(inst)
    for v, c in zip(chosen, colors):
        assignment[v] = c
    coloring = PartialColoring(max(palette), tuple(assignment))
    if not experimental:
        report = verify_cf(g, coloring)
        if not report.valid:
            raise InvariantViolation(f"greedy strip coloring invalid at vertices {report.violations}")
    return StripResult(coloring, ColoredPointTrace(tuple(chosen), colors), g)


def _color_by_strips(inst: GeometricInstance, height, period: int) -> PartialColoring:
    n = len(inst)
    assignment: list[int | None] = [None] * n
    decomposition = strip_decomposition(inst, height)
    for s, members in decomposition.strips().items():
        t = s % period
        sub = inst.subinstance(members)
        res = greedy_strip_coloring(sub, (2 * t + 1, 2 * t + 2))
        for local, v in enumerate(members):
            assignment[v] = res.coloring.colors[local]
    coloring = PartialColoring(2 * period, tuple(assignment))
    report = verify_cf(build_intersection_graph(inst), coloring)
    if not report.valid:
        raise InvariantViolation(f"strip-composed coloring invalid at vertices {report.violations}")
    return coloring


def color_unit_disks(inst: GeometricInstance) -> PartialColoring:
    """At most 6 colors: height-sqrt(3) strips, palettes {1,2},{3,4},{5,6} cyclically."""
    if inst.kind != UNIT_DISK:
        raise PreconditionError(f"expected a unit-disk instance, got {inst.kind}")
    return _color_by_strips(inst, SQRT3, 3)


def color_unit_squares(inst: GeometricInstance) -> PartialColoring:
    """At most 4 colors: height-2 strips, palettes {1,2},{3,4} alternating."""
    if inst.kind != UNIT_SQUARE:
        raise PreconditionError(f"expected a unit-square instance, got {inst.kind}")
    return _color_by_strips(inst, Fraction(2), 2)


def interval_greedy_order(inst: GeometricInstance) -> list[int]:
    """Intervals chosen by the interval greedy, in selection order."""
    objs = inst.objects
    n = len(objs)
    order = sorted(range(n), key=lambda i: (objs[i].lo, objs[i].hi, i))
    g = build_intersection_graph(inst)
    adj = [set(row) for row in g.adj]
    covered = [False] * n
    colored = [False] * n
    chosen: list[int] = []
    start = 0
    while True:
        while start < n and covered[order[start]]:
            start += 1
        if start == n:
            return chosen
        # any uncolored interval before the first uncovered one qualifies; past it,
        # a candidate must reach back to every uncovered interval it passes
        candidates = [order[p] for p in range(start) if not colored[order[p]]]
        reach_back = None
        for p in range(start, n):
            w = order[p]
            if reach_back is not None and objs[w].lo > reach_back:
                break
            if not colored[w]:
                candidates.append(w)
            if not covered[w]:
                reach_back = objs[w].hi if reach_back is None else min(reach_back, objs[w].hi)
        best = max(candidates, key=lambda i: (objs[i].hi, objs[i].lo, -i))
        chosen.append(best)
        colored[best] = covered[best] = True
        for w in adj[best]:
            covered[w] = True


def color_intervals(inst: GeometricInstance) -> PartialColoring:
    """Conflict-free 2-coloring of an interval graph with arbitrary lengths."""
    if inst.kind != INTERVAL:
        raise PreconditionError(f"expected an interval instance, got {inst.kind}")
    chosen = interval_greedy_order(inst)
    assignment: list[int | None] = [None] * len(inst)
    for i, v in enumerate(chosen):
        assignment[v] = 1 + i % 2
    coloring = PartialColoring(2, tuple(assignment))
    report = verify_cf(build_intersection_graph(inst), coloring)
    if not report.valid:
        raise InvariantViolation(f"interval greedy coloring invalid at vertices {report.violations}")
    return coloring
