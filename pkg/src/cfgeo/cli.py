"""Command-line entry point: ``cfgeo <command> ...``.

Exit status: 0 success, 1 negative answer (not colorable, invalid
coloring), 2 usage or input error, 3 inconclusive (node budget exhausted).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from cfgeo import formats
from cfgeo.generators import (
    chain_min_colors,
    gbar_closed_form,
    gbar_recurrence,
    gen_dk,
    gen_gn,
    gen_named,
    gen_reduction,
    random_instance,
    recurrence_dk_paper,
    recurrence_gn,
    verify_gadget_properties,
)
from cfgeo.geometry import INTERVAL, KINDS, SQRT3, UNIT_DISK, UNIT_SQUARE, build_intersection_graph, render_svg
from cfgeo.graph import CLOSED, OPEN, check_area_conditions, diameter, domination_number, verify_cf
from cfgeo.solver import BudgetExceeded, census, cf_chromatic_number, default_budget, is_cf_k_colorable
from cfgeo.strips import color_intervals, color_unit_disks, color_unit_squares, greedy_strip_coloring

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class _Output:
    def __init__(self, path: str | None):
        self.path = path
        self.parts: list[str] = []

    def write(self, text: str) -> None:
        self.parts.append(text)

    def flush(self) -> None:
        text = "".join(self.parts)
        if self.path and self.path != "-":
            Path(self.path).write_text(text)
        else:
            sys.stdout.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _mode(args) -> str:
    return OPEN if getattr(args, "open", False) else CLOSED


def _budget(args) -> int | None:
    return args.budget if args.budget is not None else default_budget()


def cmd_build_graph(args, out):
    out.write(formats.dump_graph(build_intersection_graph(formats.parse_instance(_read(args.instance)))))
    return EXIT_OK


def _maybe_svg(args, inst, coloring):
    if args.svg:
        Path(args.svg).write_text(render_svg(inst, coloring))


def cmd_color_strips(args, out):
    inst = formats.parse_instance(_read(args.instance))
    if args.experimental:
        if inst.kind != UNIT_DISK:
            raise ValueError("--experimental applies to unit-disk instances only")
        res = greedy_strip_coloring(inst, experimental=True)
        report = verify_cf(res.graph, res.coloring)
        out.write(formats.dump_coloring(res.coloring))
        _maybe_svg(args, inst, res.coloring)
        if not report.valid:
            sys.stderr.write(f"greedy failed on this instance; violations: {list(report.violations)}\n")
            return EXIT_NO
        return EXIT_OK
    if inst.kind == UNIT_DISK:
        coloring = color_unit_disks(inst)
    elif inst.kind == UNIT_SQUARE:
        coloring = color_unit_squares(inst)
    else:
        raise ValueError(f"color-strips needs unit-disk or unit-square objects, got {inst.kind}")
    out.write(formats.dump_coloring(coloring))
    _maybe_svg(args, inst, coloring)
    return EXIT_OK


def cmd_color_intervals(args, out):
    inst = formats.parse_instance(_read(args.instance))
    coloring = color_intervals(inst)
    out.write(formats.dump_coloring(coloring))
    _maybe_svg(args, inst, coloring)
    return EXIT_OK


def cmd_solve(args, out):
    g = formats.parse_graph(_read(args.graph))
    mode = _mode(args)
    if args.chromatic:
        res = cf_chromatic_number(g, mode, budget=_budget(args))
        if res is None:
            out.write("chi_cf none\n")
            return EXIT_NO
        out.write(f"chi_cf {res.k}\n")
        out.write(formats.dump_coloring(res.witness))
        return EXIT_OK
    witness = is_cf_k_colorable(g, args.k, mode, budget=_budget(args))
    if witness is None:
        out.write(f"colorable no k {args.k}\n")
        return EXIT_NO
    out.write(f"colorable yes k {args.k}\n")
    out.write(formats.dump_coloring(witness))
    return EXIT_OK


def cmd_verify(args, out):
    g = formats.parse_graph(_read(args.graph))
    c = formats.parse_coloring(_read(args.coloring), g.n)
    report = verify_cf(g, c, _mode(args))
    if report.valid:
        out.write(f"valid {report.mode}\n")
        return EXIT_OK
    out.write(f"invalid {report.mode}\n")
    out.write("violations " + " ".join(map(str, report.violations)) + "\n")
    return EXIT_NO


def cmd_solve_chain(args, out):
    res = chain_min_colors(formats.parse_chain(_read(args.chain)))
    out.write(f"k {res.k}\n")
    out.write("witness " + " ".join(map(str, res.witness)) + "\n")
    return EXIT_OK


def _parse_bound(text: str):
    return SQRT3 if text.lower() in ("sqrt3", "s3") else text


def cmd_gen(args, out):
    what = args.what
    if what == "gn":
        out.write(formats.dump_gadget(gen_gn(args.n)))
    elif what == "dk":
        out.write(formats.dump_gadget(gen_dk(args.k)))
    elif what == "chain":
        if args.m < 1:
            raise ValueError("chain length must be at least 1")
        out.write(formats.dump_chain(args.m))
    elif what == "bull":
        graph, inst = gen_named("bull")
        out.write(formats.dump_instance(inst) if args.instance else formats.dump_graph(graph))
    elif what == "c4":
        out.write(formats.dump_graph(gen_named("c4")))
    elif what in ("star", "path"):
        out.write(formats.dump_graph(gen_named(what, args.n)))
    elif what == "reduction":
        out.write(formats.dump_gadget(gen_reduction(formats.parse_formula(_read(args.formula)))))
    elif what == "random":
        inst = random_instance(args.kind, args.n, _parse_bound(args.width), _parse_bound(args.height), args.seed)
        out.write(formats.dump_instance(inst))
    return EXIT_OK


def cmd_render(args, out):
    inst = formats.parse_instance(_read(args.instance))
    coloring = formats.parse_coloring(_read(args.coloring), len(inst)) if args.coloring else None
    out.write(render_svg(inst, coloring))
    return EXIT_OK


def cmd_recurrence(args, out):
    if args.family == "gn":
        out.write(f"gn {args.n} {recurrence_gn(args.n)}\n")
    elif args.family == "dk":
        out.write(f"dk {args.n} {recurrence_dk_paper(args.n)}\n")
    else:
        out.write(f"gbar {args.n} {gbar_recurrence(args.n)}\n")
        out.write(f"closed_form {gbar_closed_form(args.n)!r}\n")
    return EXIT_OK


def cmd_census(args, out):
    for n, k in census(args.max_n, guard=max(args.guard, 1)).items():
        out.write(f"n {n} max_chi_cf {k}\n")
    return EXIT_OK


def cmd_analyze(args, out):
    g = formats.parse_graph(_read(args.graph))
    conds = check_area_conditions(g)
    diam = diameter(g)
    out.write(f"n {g.n}\nedges {len(g.edges)}\n")
    out.write(f"domination_number {domination_number(g)}\n")
    out.write(f"diameter {'unbounded' if diam == float('inf') else diam}\n")
    out.write(f"cond1 {str(conds.cond1).lower()}\ncond2 {str(conds.cond2).lower()}\n")
    return EXIT_OK


def cmd_check_gadget(args, out):
    props = verify_gadget_properties(formats.parse_formula(_read(args.formula)))
    out.write(f"solutions {props.solutions}\n")
    out.write(f"clause_uncolored {str(props.clause_uncolored).lower()}\n")
    out.write(f"every_third {str(props.every_third).lower()}\n")
    return EXIT_OK if props.clause_uncolored and props.every_third else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cfgeo", description="Conflict-free coloring of geometric intersection graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("-o", "--output", help="write result here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    sp = add("build-graph", cmd_build_graph, "intersection graph of an instance")
    sp.add_argument("instance")

    sp = add("color-strips", cmd_color_strips, "strip coloring of unit disks (<=6) or unit squares (<=4)")
    sp.add_argument("instance")
    sp.add_argument("--svg", help="also render the colored instance to this SVG file")
    sp.add_argument(
        "--experimental",
        action="store_true",
        help="run the two-color greedy on a unit-disk instance of height <= 2 (unproven; verifier decides)",
    )

    sp = add("color-intervals", cmd_color_intervals, "greedy conflict-free 2-coloring of intervals")
    sp.add_argument("instance")
    sp.add_argument("--svg")

    sp = add("solve", cmd_solve, "exact conflict-free colorability")
    sp.add_argument("graph")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int)
    group.add_argument("--chromatic", action="store_true")
    sp.add_argument("--open", action="store_true", help="use open neighborhoods")
    sp.add_argument("--budget", type=int, help="node budget (default: $CFGEO_BUDGET or unlimited)")

    sp = add("verify", cmd_verify, "check a coloring")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    sp.add_argument("--open", action="store_true")

    sp = add("solve-chain", cmd_solve_chain, "minimum colors for a chain read from a chain file")
    sp.add_argument("chain", nargs="?", default="-")

    sp = add("gen", cmd_gen, "generate graphs, instances and chains")
    gen = sp.add_subparsers(dest="what", required=True)

    def gen_add(name):
        gp = gen.add_parser(name)
        # SUPPRESS keeps a -o given before the family name from being reset
        gp.add_argument("-o", "--output", default=argparse.SUPPRESS)
        return gp

    gen_add("gn").add_argument("n", type=int)
    gen_add("dk").add_argument("k", type=int)
    gen_add("chain").add_argument("m", type=int)
    gen_add("bull").add_argument("--instance", action="store_true", help="emit the unit-interval realization")
    gen_add("c4")
    gen_add("star").add_argument("n", type=int, help="number of leaves")
    gen_add("path").add_argument("n", type=int)
    gen_add("reduction").add_argument("formula")
    rnd = gen_add("random")
    rnd.add_argument("kind", choices=KINDS)
    rnd.add_argument("n", type=int)
    rnd.add_argument("width")
    rnd.add_argument("height", help="rational or 'sqrt3'")
    rnd.add_argument("--seed", type=int, default=0)

    sp = add("render", cmd_render, "SVG drawing of an instance")
    sp.add_argument("instance")
    sp.add_argument("--coloring")

    sp = add("recurrence", cmd_recurrence, "gadget size recurrences")
    sp.add_argument("family", choices=("gn", "dk", "gbar"))
    sp.add_argument("n", type=int)

    sp = add("census", cmd_census, "max conflict-free chromatic number over all small graphs")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--guard", type=int, default=7, help="largest n allowed")

    sp = add("analyze", cmd_analyze, "domination number, diameter and area conditions")
    sp.add_argument("graph")

    sp = add("check-gadget", cmd_check_gadget, "enumerate all 1-colorings of G(phi) and check gadget behavior")
    sp.add_argument("formula")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Output(args.output)
    try:
        status = args.func(args, out)
    except BudgetExceeded as exc:
        sys.stderr.write(f"inconclusive: {exc}\n")
        return EXIT_INCONCLUSIVE
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    out.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
