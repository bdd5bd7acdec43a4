import xml.etree.ElementTree as ET
from fractions import Fraction as F

import mpmath
import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cfgeo.generators import bull_graph, bull_interval_instance, path_graph, random_instance
from cfgeo.geometry import (
    DISK,
    INTERVAL,
    SQRT3,
    SQUARE,
    UNIT_DISK,
    UNIT_SQUARE,
    GeoObject,
    GeometricInstance,
    GeometryError,
    build_intersection_graph,
    build_intersection_graph_naive,
    instance_height,
    intersects,
    le_height,
    render_svg,
    strip_decomposition,
    strip_index,
    to_fraction,
)
from cfgeo.graph import GraphError, PartialColoring
from strategies import instances, rationals

SVG = "{http://www.w3.org/2000/svg}"


def nx_graph(g):
    h = nx.Graph(g.edges)
    h.add_nodes_from(range(g.n))
    return h


class TestIntersects:
    def test_tangent_unit_disks(self):
        assert intersects(GeoObject.unit_disk(0, 0, 0), GeoObject.unit_disk(1, 2, 0))

    def test_separated_unit_disks(self):
        assert not intersects(GeoObject.unit_disk(0, 0, 0), GeoObject.unit_disk(1, F(201, 100), 0))

    def test_unit_square_corner_contact(self):
        assert intersects(GeoObject.unit_square(0, 0, 0), GeoObject.unit_square(1, 2, 2))
        assert not intersects(GeoObject.unit_square(0, 0, 0), GeoObject.unit_square(1, 2, F(2001, 1000)))

    def test_intervals(self):
        assert intersects(GeoObject.interval(0, 0, 1), GeoObject.interval(1, 1, 3))
        assert not intersects(GeoObject.interval(0, 0, 1), GeoObject.interval(1, F(11, 10), 3))

    def test_mixed_kinds(self):
        with pytest.raises(GeometryError):
            intersects(GeoObject.unit_disk(0, 0, 0), GeoObject.unit_square(1, 0, 0))

    def test_disk_family_mixes(self):
        assert intersects(GeoObject.unit_disk(0, 0, 0), GeoObject.disk(1, 3, 0, 2))

    @given(instances(DISK, max_n=2), instances(SQUARE, max_n=2))
    def test_symmetric(self, disks, squares):
        for inst in (disks, squares):
            if len(inst) == 2:
                a, b = inst.objects
                assert intersects(a, b) == intersects(b, a)


class TestObjects:
    def test_unit_size_fixed(self):
        with pytest.raises(GeometryError):
            GeoObject(0, UNIT_DISK, F(0), F(0), F(2))

    def test_nonpositive_radius(self):
        with pytest.raises(GeometryError):
            GeoObject.disk(0, 0, 0, 0)

    def test_reversed_interval(self):
        with pytest.raises(GeometryError):
            GeoObject.interval(0, 2, 1)

    def test_ids_must_be_dense(self):
        with pytest.raises(GeometryError):
            GeometricInstance(UNIT_DISK, (GeoObject.unit_disk(1, 0, 0),))

    def test_homogeneous(self):
        with pytest.raises(GeometryError):
            GeometricInstance(UNIT_DISK, (GeoObject.unit_square(0, 0, 0),))

    @pytest.mark.parametrize("text,value", [("3/2", F(3, 2)), ("0.125", F(1, 8)), ("-7", F(-7)), ("1.10", F(11, 10))])
    def test_exact_literals(self, text, value):
        assert to_fraction(text) == value

    @pytest.mark.parametrize("bad", ["nan", "inf", "1e3", "", "x"])
    def test_rejects_inexact_literals(self, bad):
        with pytest.raises(GeometryError):
            to_fraction(bad)

    def test_rejects_floats(self):
        with pytest.raises(GeometryError):
            to_fraction(0.1)


class TestBuildGraph:
    def test_bull_intervals(self):
        g = build_intersection_graph(bull_interval_instance())
        assert g.edges == [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)]
        assert nx.is_isomorphic(nx_graph(g), nx_graph(bull_graph()))

    def test_empty(self):
        assert build_intersection_graph(GeometricInstance(UNIT_DISK, ())).n == 0

    def test_three_disks_path(self):
        inst = GeometricInstance.from_points(UNIT_DISK, [(0, 0), (F(3, 2), 0), (3, 0)])
        assert build_intersection_graph(inst) == path_graph(3)

    def test_coincident_centers_adjacent(self):
        inst = GeometricInstance.from_points(UNIT_DISK, [(1, 1), (1, 1)])
        assert build_intersection_graph(inst).edges == [(0, 1)]

    @pytest.mark.parametrize("kind", [UNIT_DISK, DISK, UNIT_SQUARE, SQUARE, INTERVAL])
    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_sweep_matches_all_pairs(self, kind, data):
        inst = data.draw(instances(kind, max_n=14))
        assert build_intersection_graph(inst) == build_intersection_graph_naive(inst)

    @pytest.mark.parametrize("kind", [UNIT_DISK, UNIT_SQUARE, INTERVAL, DISK])
    @given(data=st.data(), factor=st.fractions(min_value=F(1, 10), max_value=10, max_denominator=30))
    @settings(max_examples=30, deadline=None)
    def test_scaling_invariance(self, kind, data, factor):
        inst = data.draw(instances(kind, max_n=10))
        assert build_intersection_graph(inst.scaled(factor)) == build_intersection_graph(inst)

    def test_random_sweep_larger(self):
        for seed in range(5):
            for kind in (UNIT_DISK, UNIT_SQUARE, INTERVAL):
                inst = random_instance(kind, 120, 20, 6, seed)
                assert build_intersection_graph(inst) == build_intersection_graph_naive(inst)


class TestHeight:
    def test_examples(self):
        assert instance_height(GeometricInstance.from_points(UNIT_DISK, [(0, 0), (5, 1), (2, F(3, 2))])) == F(3, 2)
        assert instance_height(GeometricInstance.from_points(UNIT_DISK, [(4, 9)])) == 0
        assert instance_height(GeometricInstance.from_points(UNIT_SQUARE, [(0, F(-1, 2)), (0, 1)])) == F(3, 2)

    def test_interval_rejected(self):
        with pytest.raises(GeometryError):
            instance_height(bull_interval_instance())

    def test_le_sqrt3(self):
        assert le_height(F(1732, 1000), SQRT3)
        assert not le_height(F(1733, 1000), SQRT3)
        assert le_height(F(2), F(2)) and not le_height(F(2001, 1000), F(2))


def mp_floor_div_sqrt3(d: F) -> int:
    with mpmath.workdps(80):
        return int(mpmath.floor(mpmath.mpf(d.numerator) / d.denominator / mpmath.sqrt(3)))


class TestStripIndex:
    def test_examples(self):
        assert strip_index(0, 0, SQRT3) == 0
        assert strip_index(F(17, 10), 0, SQRT3) == 0
        assert strip_index(2, 0, 2) == 1
        assert strip_index(F(9, 5), 0, SQRT3) == 1

    def test_negative_offsets(self):
        assert strip_index(F(-1, 10), 0, SQRT3) == -1
        assert strip_index(-2, 0, 2) == -1
        assert strip_index(F(-1, 1), 0, 2) == -1

    @given(rationals, rationals)
    def test_matches_high_precision(self, y, origin):
        d = y - origin
        assert strip_index(y, origin, SQRT3) == mp_floor_div_sqrt3(d)

    @given(st.integers(-50, 50))
    def test_boundaries_belong_upper_strip(self, i):
        assert strip_index(2 * i, 0, 2) == i
        assert strip_index(F(2 * i) - F(1, 10**9), 0, 2) == i - 1

    def test_decomposition_origin_is_min_y(self):
        inst = GeometricInstance.from_points(UNIT_DISK, [(0, 5), (0, F(67, 10)), (0, 10)])
        dec = strip_decomposition(inst, SQRT3)
        assert dec.origin == 5 and dec.strip_of == (0, 0, 2)
        assert dec.strips() == {0: [0, 1], 2: [2]}

    @given(instances(UNIT_DISK, max_n=20), instances(UNIT_SQUARE, max_n=20))
    @settings(deadline=None)
    def test_strip_separation(self, disks, squares):
        for inst, height, gap in ((disks, SQRT3, 3), (squares, F(2), 2)):
            dec = strip_decomposition(inst, height)
            for u, v in build_intersection_graph(inst).edges:
                assert abs(dec.strip_of[u] - dec.strip_of[v]) < gap


class TestSvg:
    def shapes(self, svg):
        root = ET.fromstring(svg.split("\n", 1)[1])
        group = root.find(f"{SVG}g[@id='objects']")
        return list(group)

    def test_empty(self):
        assert self.shapes(render_svg(GeometricInstance(UNIT_DISK, ()))) == []

    def test_bull_intervals_two_colored(self):
        c = PartialColoring.from_dict(5, {1: 1, 4: 2})
        shapes = self.shapes(render_svg(bull_interval_instance(), c))
        assert len(shapes) == 5 and all(s.tag == f"{SVG}line" for s in shapes)
        assert sum(s.get("stroke") != "#bbbbbb" for s in shapes) == 2

    @pytest.mark.parametrize("kind,tag", [(UNIT_DISK, "circle"), (UNIT_SQUARE, "rect")])
    def test_uncolored_all_gray(self, kind, tag):
        shapes = self.shapes(render_svg(random_instance(kind, 7, 10, 3, 1)))
        assert len(shapes) == 7
        assert all(s.tag == f"{SVG}{tag}" and s.get("fill") == "#bbbbbb" for s in shapes)

    def test_size_mismatch(self):
        with pytest.raises(GraphError):
            render_svg(bull_interval_instance(), PartialColoring.uncolored(4))
