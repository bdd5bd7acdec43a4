"""Line-oriented text formats for graphs, colorings, instances, formulas and chains.

Every format starts with a ``cfgeo-<name> v1`` header.  Blank lines and
``#`` comments are ignored by the parsers, except that graph files may carry
``# role <v> <label>`` annotations for generated gadgets.
"""

from __future__ import annotations

from cfgeo.geometry import INTERVAL, KINDS, UNIT_DISK, UNIT_SQUARE, GeoObject, GeometricInstance, format_fraction, to_fraction
from cfgeo.graph import Graph, PartialColoring, make_graph
from cfgeo.generators import Formula1in3, GadgetGraph

GRAPH_HEADER = "cfgeo-graph v1"
COLORING_HEADER = "cfgeo-coloring v1"
INSTANCE_HEADER = "cfgeo-instance v1"
FORMULA_HEADER = "cfgeo-1in3 v1"
CHAIN_HEADER = "cfgeo-chain v1"


class FormatError(ValueError):
    pass


def _lines(text: str, header: str) -> list[tuple[int, list[str]]]:
    rows = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not seen_header:
            if line != header:
                raise FormatError(f"line {lineno}: expected header {header!r}, got {line!r}")
            seen_header = True
            continue
        rows.append((lineno, line.split()))
    if not seen_header:
        raise FormatError(f"missing header {header!r}")
    return rows


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {tok!r}") from None


def dump_graph(g: Graph, roles=None) -> str:
    out = [GRAPH_HEADER, f"n {g.n}"]
    out.extend(f"e {u} {v}" for u, v in g.edges)
    if roles is not None:
        out.extend(f"# role {v} {label}" for v, label in enumerate(roles))
    return "\n".join(out) + "\n"


def dump_gadget(gadget: GadgetGraph) -> str:
    return dump_graph(gadget.graph, gadget.roles)


def parse_graph(text: str) -> Graph:
    n = None
    edges = []
    for lineno, toks in _lines(text, GRAPH_HEADER):
        if toks[0] == "n" and len(toks) == 2 and n is None:
            n = _int(toks[1], lineno)
        elif toks[0] == "e" and len(toks) == 3:
            if n is None:
                raise FormatError(f"line {lineno}: edge before 'n' line")
            edges.append((_int(toks[1], lineno), _int(toks[2], lineno)))
        else:
            raise FormatError(f"line {lineno}: unexpected {' '.join(toks)!r}")
    if n is None:
        raise FormatError("graph file has no 'n' line")
    return make_graph(n, edges)


def parse_roles(text: str) -> dict[int, str]:
    roles = {}
    for line in text.splitlines():
        toks = line.split()
        if len(toks) == 4 and toks[:2] == ["#", "role"]:
            roles[int(toks[2])] = toks[3]
    return roles


def dump_coloring(c: PartialColoring) -> str:
    out = [COLORING_HEADER, f"palette {c.palette_size}"]
    out.extend(f"c {v} {col}" for v, col in c.as_dict().items())
    return "\n".join(out) + "\n"


def parse_coloring(text: str, n: int) -> PartialColoring:
    palette = None
    assignment: dict[int, int] = {}
    for lineno, toks in _lines(text, COLORING_HEADER):
        if toks[0] == "palette" and len(toks) == 2 and palette is None:
            palette = _int(toks[1], lineno)
        elif toks[0] == "c" and len(toks) == 3:
            v = _int(toks[1], lineno)
            if v in assignment:
                raise FormatError(f"line {lineno}: vertex {v} colored twice")
            assignment[v] = _int(toks[2], lineno)
        else:
            raise FormatError(f"line {lineno}: unexpected {' '.join(toks)!r}")
    if palette is None:
        raise FormatError("coloring file has no 'palette' line")
    return PartialColoring.from_dict(n, assignment, palette)


def dump_instance(inst: GeometricInstance) -> str:
    out = [INSTANCE_HEADER, f"shape {inst.kind}"]
    for o in inst.objects:
        if inst.kind == INTERVAL:
            vals = (o.lo, o.hi)
        elif inst.kind in (UNIT_DISK, UNIT_SQUARE):
            vals = (o.x, o.y)
        else:
            vals = (o.x, o.y, o.size)
        out.append(" ".join(["object", str(o.id), *map(format_fraction, vals)]))
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> GeometricInstance:
    kind = None
    objs = []
    for lineno, toks in _lines(text, INSTANCE_HEADER):
        if toks[0] == "shape" and len(toks) == 2 and kind is None:
            if toks[1] not in KINDS:
                raise FormatError(f"line {lineno}: unknown shape {toks[1]!r}")
            kind = toks[1]
        elif toks[0] == "object":
            if kind is None:
                raise FormatError(f"line {lineno}: object before 'shape' line")
            arity = {INTERVAL: 2, UNIT_DISK: 2, UNIT_SQUARE: 2}.get(kind, 3)
            if len(toks) != 2 + arity:
                raise FormatError(f"line {lineno}: {kind} objects take {arity} numbers")
            oid = _int(toks[1], lineno)
            try:
                vals = [to_fraction(t) for t in toks[2:]]
            except ValueError as exc:
                raise FormatError(f"line {lineno}: {exc}") from None
            if kind == INTERVAL:
                objs.append(GeoObject.interval(oid, *vals))
            else:
                objs.append(GeoObject(oid, kind, *vals))
        else:
            raise FormatError(f"line {lineno}: unexpected {' '.join(toks)!r}")
    if kind is None:
        raise FormatError("instance file has no 'shape' line")
    objs.sort(key=lambda o: o.id)
    return GeometricInstance(kind, tuple(objs))


def dump_formula(phi: Formula1in3) -> str:
    out = [FORMULA_HEADER, f"vars {phi.var_count}"]
    out.extend("clause " + " ".join(map(str, c)) for c in phi.clauses)
    return "\n".join(out) + "\n"


def parse_formula(text: str) -> Formula1in3:
    n = None
    clauses = []
    for lineno, toks in _lines(text, FORMULA_HEADER):
        if toks[0] == "vars" and len(toks) == 2 and n is None:
            n = _int(toks[1], lineno)
        elif toks[0] == "clause" and len(toks) == 4:
            clauses.append(tuple(_int(t, lineno) for t in toks[1:]))
        else:
            raise FormatError(f"line {lineno}: unexpected {' '.join(toks)!r}")
    if n is None:
        raise FormatError("formula file has no 'vars' line")
    return Formula1in3(n, tuple(clauses))


def dump_chain(m: int) -> str:
    return f"{CHAIN_HEADER}\nm {m}\n"


def parse_chain(text: str) -> int:
    rows = _lines(text, CHAIN_HEADER)
    if len(rows) != 1 or rows[0][1][0] != "m" or len(rows[0][1]) != 2:
        raise FormatError("chain file must contain exactly one 'm <length>' line")
    return _int(rows[0][1][1], rows[0][0])
