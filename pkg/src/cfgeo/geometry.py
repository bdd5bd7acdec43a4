"""Exact geometric objects and their intersection graphs.

All coordinates are :class:`fractions.Fraction`.  Unit disks have radius 1;
unit squares are axis-aligned with half-side 1 (side length 2), the square
analog of a radius-1 disk.  Touching objects intersect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from cfgeo.graph import Graph, GraphError, PartialColoring, make_graph

UNIT_DISK = "unit-disk"
DISK = "disk"
UNIT_SQUARE = "unit-square"
SQUARE = "square"
INTERVAL = "interval"
KINDS = (UNIT_DISK, DISK, UNIT_SQUARE, SQUARE, INTERVAL)

_FAMILY = {UNIT_DISK: "disk", DISK: "disk", UNIT_SQUARE: "square", SQUARE: "square", INTERVAL: "interval"}


class GeometryError(ValueError):
    pass


def to_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction, or string like ``"3/2"`` or ``"0.125"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text.lower() for ch in "einf"):
            raise GeometryError(f"not an exact rational literal: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"not an exact rational literal: {value!r}") from exc
    raise GeometryError(f"refusing inexact number {value!r}; pass an int, Fraction or string")


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class GeoObject:
    id: int
    kind: str
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    size: Fraction = Fraction(1)  # radius or half-side; fixed at 1 for unit kinds
    lo: Fraction = Fraction(0)
    hi: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GeometryError(f"unknown object kind {self.kind!r}")
        for name in ("x", "y", "size", "lo", "hi"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        if self.kind in (UNIT_DISK, UNIT_SQUARE) and self.size != 1:
            raise GeometryError(f"{self.kind} {self.id} must have size 1, got {self.size}")
        if self.kind in (DISK, SQUARE) and self.size <= 0:
            raise GeometryError(f"{self.kind} {self.id} needs positive size, got {self.size}")
        if self.kind == INTERVAL and self.lo > self.hi:
            raise GeometryError(f"interval {self.id} has lo > hi")

    @classmethod
    def unit_disk(cls, id, x, y):
        return cls(id, UNIT_DISK, to_fraction(x), to_fraction(y))

    @classmethod
    def unit_square(cls, id, x, y):
        return cls(id, UNIT_SQUARE, to_fraction(x), to_fraction(y))

    @classmethod
    def disk(cls, id, x, y, r):
        return cls(id, DISK, to_fraction(x), to_fraction(y), to_fraction(r))

    @classmethod
    def square(cls, id, x, y, h):
        return cls(id, SQUARE, to_fraction(x), to_fraction(y), to_fraction(h))

    @classmethod
    def interval(cls, id, lo, hi):
        return cls(id, INTERVAL, lo=to_fraction(lo), hi=to_fraction(hi))

    @property
    def center(self) -> tuple[Fraction, Fraction]:
        if self.kind == INTERVAL:
            return ((self.lo + self.hi) / 2, Fraction(0))
        return (self.x, self.y)


@dataclass(frozen=True)
class GeometricInstance:
    kind: str
    objects: tuple[GeoObject, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GeometryError(f"unknown instance kind {self.kind!r}")
        object.__setattr__(self, "objects", tuple(self.objects))
        for i, o in enumerate(self.objects):
            if o.kind != self.kind:
                raise GeometryError(f"object {o.id} is a {o.kind} in a {self.kind} instance")
            if o.id != i:
                raise GeometryError(f"object ids must be 0..n-1 in order; position {i} has id {o.id}")

    def __len__(self) -> int:
        return len(self.objects)

    @classmethod
    def from_points(cls, kind: str, points: Sequence[tuple]) -> "GeometricInstance":
        """Objects from ``(x, y)``, ``(x, y, size)`` or ``(lo, hi)`` tuples, ids in order."""
        objs = []
        for i, p in enumerate(points):
            if kind == INTERVAL:
                objs.append(GeoObject.interval(i, *p))
            elif kind in (UNIT_DISK, UNIT_SQUARE):
                objs.append(GeoObject(i, kind, to_fraction(p[0]), to_fraction(p[1])))
            else:
                objs.append(GeoObject(i, kind, to_fraction(p[0]), to_fraction(p[1]), to_fraction(p[2])))
        return cls(kind, tuple(objs))

    def subinstance(self, ids: Sequence[int]) -> "GeometricInstance":
        """Objects ``ids`` renumbered 0..m-1 in the given order."""
        return GeometricInstance(
            self.kind, tuple(_replace_id(self.objects[v], i) for i, v in enumerate(ids))
        )

    def scaled(self, factor) -> "GeometricInstance":
        f = to_fraction(factor)
        if f <= 0:
            raise GeometryError("scale factor must be positive")
        objs = []
        for o in self.objects:
            size = o.size if o.kind in (UNIT_DISK, UNIT_SQUARE) else o.size * f
            objs.append(GeoObject(o.id, o.kind, o.x * f, o.y * f, size, o.lo * f, o.hi * f))
        kind = {UNIT_DISK: DISK, UNIT_SQUARE: SQUARE}.get(self.kind, self.kind)
        if kind != self.kind:
            objs = [GeoObject(o.id, kind, o.x, o.y, f) for o in objs]
        return GeometricInstance(kind, tuple(objs))


def _replace_id(o: GeoObject, new_id: int) -> GeoObject:
    return GeoObject(new_id, o.kind, o.x, o.y, o.size, o.lo, o.hi)


def intersects(a: GeoObject, b: GeoObject) -> bool:
    """Closed intersection test, exact in rationals."""
    fam = _FAMILY[a.kind]
    if fam != _FAMILY[b.kind]:
        raise GeometryError(f"cannot intersect a {a.kind} with a {b.kind}")
    if fam == "interval":
        return max(a.lo, b.lo) <= min(a.hi, b.hi)
    reach = a.size + b.size
    dx, dy = a.x - b.x, a.y - b.y
    if fam == "disk":
        return dx * dx + dy * dy <= reach * reach
    return abs(dx) <= reach and abs(dy) <= reach


def _integer_coords(inst: GeometricInstance) -> tuple[list[tuple[int, ...]], int]:
    """Scale everything by the common denominator so predicates run on ints."""
    vals = []
    for o in inst.objects:
        vals.extend((o.x, o.y, o.size, o.lo, o.hi))
    den = math.lcm(*(v.denominator for v in vals)) if vals else 1
    rows = [
        tuple(int(v * den) for v in (o.x, o.y, o.size, o.lo, o.hi)) for o in inst.objects
    ]
    return rows, den


def build_intersection_graph(inst: GeometricInstance) -> Graph:
    """Intersection graph via an x-sweep over integer-scaled coordinates."""
    n = len(inst)
    if n == 0:
        return make_graph(0, [])
    rows, _ = _integer_coords(inst)
    fam = _FAMILY[inst.kind]
    edges = []
    if fam == "interval":
        order = sorted(range(n), key=lambda i: (rows[i][3], i))
        active: list[int] = []
        for i in order:
            lo = rows[i][3]
            active = [j for j in active if rows[j][4] >= lo]
            edges.extend((j, i) for j in active)
            active.append(i)
        return make_graph(n, edges)
    order = sorted(range(n), key=lambda i: (rows[i][0], i))
    max_size = max(r[2] for r in rows)
    for a_pos, i in enumerate(order):
        xi, yi, si = rows[i][:3]
        for j in order[a_pos + 1:]:
            xj, yj, sj = rows[j][:3]
            if xj - xi > si + max_size:
                break
            reach = si + sj
            dx, dy = xj - xi, yj - yi
            if fam == "disk":
                hit = dx * dx + dy * dy <= reach * reach
            else:
                hit = abs(dx) <= reach and abs(dy) <= reach
            if hit:
                edges.append((i, j))
    return make_graph(n, edges)


def build_intersection_graph_naive(inst: GeometricInstance) -> Graph:
    """All-pairs reference using :func:`intersects` directly."""
    objs = inst.objects
    return make_graph(
        len(objs),
        [(i, j) for i in range(len(objs)) for j in range(i + 1, len(objs)) if intersects(objs[i], objs[j])],
    )


def instance_height(inst: GeometricInstance) -> Fraction:
    if inst.kind == INTERVAL:
        raise GeometryError("height is defined for 2-D instances only")
    if len(inst) <= 1:
        return Fraction(0)
    ys = [o.y for o in inst.objects]
    return max(ys) - min(ys)


# -- strips --------------------------------------------------------------------


class _Sqrt3:
    """The exact strip height sqrt(3); compare via squares, never floats."""

    def __repr__(self):
        return "SQRT3"

    def __str__(self):
        return "sqrt3"


SQRT3 = _Sqrt3()


def _ceil_sqrt(q: Fraction) -> int:
    m = math.isqrt(math.floor(q))
    return m if Fraction(m * m) == q else m + 1


def strip_index(y, origin, height) -> int:
    """``floor((y - origin) / height)`` exactly; strips are half-open ``[i*h, (i+1)*h)``."""
    d = to_fraction(y) - to_fraction(origin)
    if height is SQRT3:
        # floor(d/sqrt3) via floor/ceil of sqrt(d^2/3)
        q = d * d / 3
        if d >= 0:
            return math.isqrt(math.floor(q))
        return -_ceil_sqrt(q)
    h = to_fraction(height)
    if h <= 0:
        raise GeometryError("strip height must be positive")
    return math.floor(d / h)


def le_height(value: Fraction, height) -> bool:
    """Exact ``value <= height`` for a rational or :data:`SQRT3` height."""
    value = to_fraction(value)
    if height is SQRT3:
        return value <= 0 or value * value <= 3
    return value <= to_fraction(height)


@dataclass(frozen=True)
class StripDecomposition:
    strip_height: object
    origin: Fraction
    strip_of: tuple[int, ...]

    def strips(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, s in enumerate(self.strip_of):
            out.setdefault(s, []).append(v)
        return dict(sorted(out.items()))


def strip_decomposition(inst: GeometricInstance, height, origin=None) -> StripDecomposition:
    if inst.kind == INTERVAL:
        raise GeometryError("strips are defined for 2-D instances only")
    if origin is None:
        origin = min((o.y for o in inst.objects), default=Fraction(0))
    origin = to_fraction(origin)
    return StripDecomposition(
        height, origin, tuple(strip_index(o.y, origin, height) for o in inst.objects)
    )


# -- SVG -------------------------------------------------------------------------

PALETTE = ("#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4")
UNCOLORED_FILL = "#bbbbbb"
_PX = 40
_MARGIN = 20


def _fill(color: int | None) -> str:
    return UNCOLORED_FILL if color is None else PALETTE[(color - 1) % len(PALETTE)]


def render_svg(inst: GeometricInstance, coloring: PartialColoring | None = None) -> str:
    """SVG drawing of the instance; colors 1..6 from a fixed palette, uncolored gray."""
    n = len(inst)
    if coloring is not None and len(coloring) != n:
        raise GraphError(f"coloring has length {len(coloring)} but instance has {n} objects")
    colors = coloring.colors if coloring is not None else (None,) * n
    shapes = []
    if inst.kind == INTERVAL:
        xs = [float(v) for o in inst.objects for v in (o.lo, o.hi)] or [0.0]
        x0, x1 = min(xs), max(xs)
        y0, y1 = 0.0, float(max(n - 1, 0))
        for o, c in zip(inst.objects, colors):
            yy = _MARGIN + (y1 - o.id) * _PX * 0.5
            shapes.append(
                f'<line x1="{_MARGIN + (float(o.lo) - x0) * _PX:.3f}" y1="{yy:.3f}" '
                f'x2="{_MARGIN + (float(o.hi) - x0) * _PX:.3f}" y2="{yy:.3f}" '
                f'stroke="{_fill(c)}" stroke-width="6" data-id="{o.id}"/>'
            )
        width = (x1 - x0) * _PX + 2 * _MARGIN
        height = y1 * _PX * 0.5 + 2 * _MARGIN
    else:
        ext = [
            (float(o.x - o.size), float(o.y - o.size), float(o.x + o.size), float(o.y + o.size))
            for o in inst.objects
        ] or [(0.0, 0.0, 0.0, 0.0)]
        x0 = min(e[0] for e in ext)
        y0 = min(e[1] for e in ext)
        x1 = max(e[2] for e in ext)
        y1 = max(e[3] for e in ext)

        def px(x):
            return _MARGIN + (x - x0) * _PX

        def py(y):
            return _MARGIN + (y1 - y) * _PX

        for o, c in zip(inst.objects, colors):
            cx, cy, s = float(o.x), float(o.y), float(o.size)
            style = f'fill="{_fill(c)}" fill-opacity="0.35" stroke="{_fill(c)}" data-id="{o.id}"'
            if _FAMILY[inst.kind] == "disk":
                shapes.append(f'<circle cx="{px(cx):.3f}" cy="{py(cy):.3f}" r="{s * _PX:.3f}" {style}/>')
            else:
                shapes.append(
                    f'<rect x="{px(cx - s):.3f}" y="{py(cy + s):.3f}" '
                    f'width="{2 * s * _PX:.3f}" height="{2 * s * _PX:.3f}" {style}/>'
                )
        width = (x1 - x0) * _PX + 2 * _MARGIN
        height = (y1 - y0) * _PX + 2 * _MARGIN
    legend_y = height + 10
    legend = [
        f'<rect x="{_MARGIN + i * 70}" y="{legend_y:.3f}" width="12" height="12" fill="{col}"/>'
        f'<text x="{_MARGIN + i * 70 + 16}" y="{legend_y + 11:.3f}" font-size="11">{i + 1}</text>'
        for i, col in enumerate(PALETTE)
    ]
    legend.append(
        f'<rect x="{_MARGIN + 6 * 70}" y="{legend_y:.3f}" width="12" height="12" fill="{UNCOLORED_FILL}"/>'
        f'<text x="{_MARGIN + 6 * 70 + 16}" y="{legend_y + 11:.3f}" font-size="11">uncolored</text>'
    )
    total_w = max(width, _MARGIN * 2 + 7 * 70 + 60)
    total_h = legend_y + 30
    return "\n".join(
        [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w:.3f}" height="{total_h:.3f}" '
            f'viewBox="0 0 {total_w:.3f} {total_h:.3f}">',
            f'<g id="objects" data-kind="{inst.kind}">',
            *shapes,
            "</g>",
            '<g id="legend">',
            *legend,
            "</g>",
            "</svg>",
            "",
        ]
    )
