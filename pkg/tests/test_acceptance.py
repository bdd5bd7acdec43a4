"""One test per acceptance criterion; each reports PASS/FAIL via ``record``."""

import itertools
import random
import time

import pytest

from cfgeo.generators import (
    Formula1in3,
    UNSAT_FOUR_CLAUSES,
    bull_graph,
    bull_interval_instance,
    chain_min_colors,
    chain_oracle,
    complete_graph,
    curated_formulas,
    cycle_graph,
    gbar_closed_form,
    gbar_recurrence,
    gen_dk,
    gen_gn,
    gen_reduction,
    has_unique_in_every_interval,
    one_in_three_satisfiable,
    path_graph,
    random_instance,
    recurrence_dk_paper,
    recurrence_gn,
    verify_gadget_properties,
)
from cfgeo.geometry import (
    INTERVAL,
    SQRT3,
    UNIT_DISK,
    UNIT_SQUARE,
    build_intersection_graph,
    instance_height,
    le_height,
    strip_decomposition,
)
from cfgeo.graph import CLOSED, OPEN, verify_cf
from cfgeo.solver import (
    brute_force_chromatic,
    brute_force_colorable,
    census,
    cf_chromatic_number,
    is_cf_1_colorable,
    is_cf_k_colorable,
)
from cfgeo.strips import color_intervals, color_unit_disks, color_unit_squares, greedy_strip_coloring
from strategies import random_graph

pytestmark = pytest.mark.slow


def trace_ok(inst, res) -> bool:
    colors = res.trace.colors
    xs = [inst.objects[v].x for v in res.trace.order]
    alternates = all(a != b for a, b in zip(colors, colors[1:]))
    spaced = all(b - a > 1 for a, b in zip(xs, xs[1:]))
    return alternates and spaced


def test_c1_named_chromatic_numbers(record):
    t = time.perf_counter()
    cases = [("bull", bull_graph(), 2), ("C4", cycle_graph(4), 2), ("P3", path_graph(3), 1)]
    cases += [(f"K{n}", complete_graph(n), 1) for n in range(1, 9)]
    wrong = [name for name, g, k in cases if cf_chromatic_number(g).k != k]
    dt = time.perf_counter() - t
    record("1 named chromatic numbers", not wrong and dt < 1, f"mismatches={wrong} time={dt:.2f}s")


def test_c2_strip_greedy(record):
    t = time.perf_counter()
    failures = []
    for seed in range(1000):
        r = random.Random(seed)
        n = r.randint(1, 200)
        inst = random_instance(UNIT_DISK, n, max(2, n // r.choice([1, 2, 4, 8])), SQRT3, seed)
        assert le_height(instance_height(inst), SQRT3)
        res = greedy_strip_coloring(inst)
        ok = verify_cf(res.graph, res.coloring).valid and res.coloring.used_colors <= {1, 2}
        if not (ok and trace_ok(inst, res)):
            failures.append(seed)
    dt = time.perf_counter() - t
    record("2 strip greedy (height sqrt3, 2 colors)", not failures and dt < 60, f"1000 instances failures={failures[:5]} time={dt:.1f}s")


def _strip_composition(kind, colorer, height, period, max_colors, max_span, count=500):
    failures = []
    for seed in range(count):
        r = random.Random(10_000 + seed)
        n = r.randint(1, 300)
        inst = random_instance(kind, n, max(2, n // r.choice([2, 4, 8])), r.choice([2, 5, 10, 40]), seed)
        g = build_intersection_graph(inst)
        c = colorer(inst)
        dec = strip_decomposition(inst, height)
        palettes = all(col in (2 * (dec.strip_of[v] % period) + 1, 2 * (dec.strip_of[v] % period) + 2) for v, col in c.as_dict().items())
        spans = all(abs(dec.strip_of[u] - dec.strip_of[v]) <= max_span for u, v in g.edges)
        if not (verify_cf(g, c).valid and c.used_colors <= set(range(1, max_colors + 1)) and palettes and spans):
            failures.append(seed)
    return failures


def test_c3_six_colors_unit_disks(record):
    failures = _strip_composition(UNIT_DISK, color_unit_disks, SQRT3, 3, 6, 2)
    record("3 six colors for unit disks", not failures, f"500 instances failures={failures[:5]}")


def test_c4_four_colors_unit_squares(record):
    failures = _strip_composition(UNIT_SQUARE, color_unit_squares, 2, 2, 4, 1)
    record("4 four colors for unit squares", not failures, f"500 instances failures={failures[:5]}")


def test_c5_interval_tightness(record):
    failures = []
    for seed in range(1000):
        r = random.Random(20_000 + seed)
        n = r.randint(1, 200)
        inst = random_instance(INTERVAL, n, max(2, n // r.choice([1, 2, 4])), r.choice([1, 2, 5]), seed)
        c = color_intervals(inst)
        if not (verify_cf(build_intersection_graph(inst), c).valid and c.used_colors <= {1, 2}):
            failures.append(seed)
    bull = build_intersection_graph(bull_interval_instance())
    lower = is_cf_k_colorable(bull, 1) is None and brute_force_colorable(bull, 1) is None
    upper = color_intervals(bull_interval_instance()).used_colors == {1, 2}
    record("5 interval tightness", not failures and lower and upper, f"failures={failures[:5]} bull_needs_2={lower} greedy_uses_2={upper}")


def test_c6_chain_lower_bound(record):
    t = time.perf_counter()
    got = {m: (chain_min_colors(m).k, chain_oracle(m)) for m in range(1, 9)}
    agree = all(a == b for a, b in got.values())
    ruler = all(has_unique_in_every_interval(chain_min_colors(m).witness) for m in range(1, 65))
    dt = time.perf_counter() - t
    ok = agree and got[4] == (3, 3) and ruler and dt < 30
    record("6 chain lower bound", ok, f"k(1..8)={[a for a, _ in got.values()]} ruler_ok={ruler} time={dt:.1f}s")


def test_c7_gadget_family(record):
    sizes = all(gen_gn(n).graph.n == recurrence_gn(n) for n in range(1, 7))
    # G_7 and G_8 are too large to build comfortably; check the recurrence against the count formula
    counted = {1: 1, 2: 4}
    for n in range(3, 9):
        counted[n] = n + 2 * n * counted[n - 1] + n * (n - 1) * counted[n - 2]
    sizes = sizes and all(recurrence_gn(n) == counted[n] for n in range(1, 9))
    t = time.perf_counter()
    chi2 = cf_chromatic_number(gen_gn(2).graph).k
    instant = time.perf_counter() - t < 1
    t = time.perf_counter()
    res3 = cf_chromatic_number(gen_gn(3).graph, budget=10**9)
    dt = time.perf_counter() - t
    ok = sizes and chi2 == 2 and instant and res3.k == 3 and dt < 600
    record("7 gadget family G_n", ok, f"sizes_ok={sizes} chi(G2)={chi2} chi(G3)={res3.k} time={dt:.2f}s")


def test_c8_dk_family(record):
    chi = cf_chromatic_number(gen_dk(2).graph).k
    two_copy = {1: 1}
    for k in range(2, 5):
        m = 2 ** (k - 1)
        two_copy[k] = m + 2 * (m * (m + 1) // 2) * two_copy[k - 1]
    sizes = {k: gen_dk(k).graph.n for k in range(1, 5)}
    published = [recurrence_dk_paper(k) for k in (1, 2, 3)]
    discrepancy = all(sizes[k] > recurrence_dk_paper(k) for k in (2, 3, 4))
    ok = chi == 2 and sizes == two_copy and published[:2] == [1, 5] and discrepancy
    record("8 D_k family", ok, f"chi(D2)={chi} sizes={list(sizes.values())} published_recurrence={published} two_copy_exceeds_published={discrepancy}")


def test_c9_closed_form(record):
    worst = max(abs(gbar_closed_form(n) - gbar_recurrence(n)) / gbar_recurrence(n) for n in range(1, 16))
    exact = gbar_closed_form(1) == 1 and gbar_closed_form(2) == 4
    record("9 closed form vs recurrence", worst < 1e-6 and exact, f"max_rel_err={worst:.2e} exact_base={exact}")


def _gadget_ok(props):
    return props.clause_uncolored and props.every_third


def test_c10_reduction_equivalence(record):
    corpus = curated_formulas() + [UNSAT_FOUR_CLAUSES]
    mismatches = []
    for phi in corpus:
        sat = one_in_three_satisfiable(phi) is not None
        if (is_cf_1_colorable(gen_reduction(phi).graph) is not None) != sat:
            mismatches.append(phi)
    # clause order changes which cycle slots the paths use, so try every ordering
    singles = [Formula1in3(3, (perm,)) for perm in itertools.permutations(range(3))]
    singles += [phi for phi in corpus if len(phi.clauses) == 1]
    gadget_bad = [phi for phi in singles if not _gadget_ok(verify_gadget_properties(phi))]
    ok = not mismatches and not gadget_bad and singles
    record("10 reduction equivalence", ok, f"{len(corpus)} formulas mismatches={len(mismatches)} single-clause gadgets={len(singles)} bad={len(gadget_bad)}")


def test_c11_census(record):
    t = time.perf_counter()
    result = census(7)
    dt = time.perf_counter() - t
    record("11 census n<=7", max(result.values()) == 2 and dt < 1800, f"{result} time={dt:.1f}s")


def test_c12_solver_cross_validation(record):
    r = random.Random(12)
    mismatches = []
    for i in range(200):
        g = random_graph(r, r.randint(1, 9), r.random())
        for mode in (CLOSED, OPEN):
            for k in (1, 2, 3):
                fast = is_cf_k_colorable(g, k, mode) is not None
                slow = brute_force_colorable(g, k, mode) is not None
                if fast != slow:
                    mismatches.append((i, mode, k))
            if g.n <= 6:
                res = cf_chromatic_number(g, mode)
                if (res.k if res else None) != brute_force_chromatic(g, mode):
                    mismatches.append((i, mode, "chi"))
    record("12 solver vs brute force", not mismatches, f"200 graphs x 2 modes x 3 k mismatches={mismatches[:5]}")
