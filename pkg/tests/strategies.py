from fractions import Fraction

from hypothesis import strategies as st

from cfgeo.geometry import INTERVAL, UNIT_DISK, UNIT_SQUARE, GeoObject, GeometricInstance
from cfgeo.graph import make_graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
positive_rationals = st.fractions(min_value=Fraction(1, 50), max_value=10, max_denominator=50)


@st.composite
def instances(draw, kind, max_n=12, max_y=None):
    n = draw(st.integers(0, max_n))
    objs = []
    for i in range(n):
        if kind == INTERVAL:
            lo = draw(rationals)
            objs.append(GeoObject.interval(i, lo, lo + draw(st.fractions(0, 6, max_denominator=20))))
        elif kind in (UNIT_DISK, UNIT_SQUARE):
            y = draw(st.fractions(0, max_y, max_denominator=50)) if max_y is not None else draw(rationals)
            objs.append(GeoObject(i, kind, draw(rationals), y))
        else:
            objs.append(GeoObject(i, kind, draw(rationals), draw(rationals), draw(positive_rationals)))
    return GeometricInstance(kind, tuple(objs))


def random_graph(rng, n, p):
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
