"""Line-based text formats.

Hedge graph (``.hg``)::

    # comment
    p hg <n> <m> <l>        optional header, counts are checked
    e <u> <v> <token>       1-based vertices

Formula (``.cf``)::

    p cf <nvars> <nclauses> optional header
    v <tok> <tok> ...       optional declarations; once present, every
                            clause variable must be declared
    f1 a b c | g1 a b | g2 a b | f2 a | fp a b c

Solution::

    k <count>
    <token>                 one per line, sorted

Plain graph (``.gr``)::

    p edge <n> <m>
    e <u> <v>

Serialisation is canonical (sorted edges, 1-based vertices) and carries no
trailing newline.
"""

from __future__ import annotations

from .core import HedgeGraph, Solution, build
from .cover import SimpleGraph
from .errors import InputError
from .reductions import ARITY, Clause, ConstraintFormula

KINDS = ("hedgegraph", "formula", "solution", "graph")


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0] if not raw.lstrip().startswith("c ") else ""
        fields = line.split()
        if fields:
            yield i, raw, fields


def _column(raw: str, fields: list[str], k: int) -> int:
    pos = 0
    for j in range(k + 1):
        pos = raw.index(fields[j], pos)
        if j < k:
            pos += len(fields[j])
    return pos + 1


def _int(raw, fields, k, line, what) -> int:
    try:
        return int(fields[k])
    except ValueError:
        raise InputError(f"{what} must be an integer, got {fields[k]!r}", line, _column(raw, fields, k)) from None


def _header(raw, fields, line, tag, arity):
    if len(fields) != arity + 2 or fields[1] != tag:
        raise InputError(f"malformed header, expected 'p {tag}' with {arity} counts", line, 1)
    vals = [_int(raw, fields, k, line, "count") for k in range(2, arity + 2)]
    if any(v < 0 for v in vals):
        raise InputError("counts must be non-negative", line, 1)
    return vals


def parse_hedgegraph(text: str) -> HedgeGraph:
    header = None
    labeled, lines = [], []
    for line, raw, fields in _lines(text):
        tag = fields[0]
        if tag == "p":
            if header is not None or labeled:
                raise InputError("header must come first and only once", line, 1)
            header = (line, *_header(raw, fields, line, "hg", 3))
        elif tag == "e":
            if len(fields) != 4:
                raise InputError(f"edge line needs 3 fields, got {len(fields) - 1}", line, 1)
            u = _int(raw, fields, 1, line, "vertex")
            v = _int(raw, fields, 2, line, "vertex")
            labeled.append((u - 1, v - 1, fields[3]))
            lines.append(line)
        else:
            raise InputError(f"unknown line type {tag!r}", line, 1)
    if header is None:
        n = max((max(u, v) + 1 for u, v, _ in labeled), default=0)
    else:
        n = header[1]
    H = build(n, labeled, lines)
    if header is not None:
        hline, _, m, ell = header
        if m != H.m:
            raise InputError(f"header announces {m} edges, body has {H.m}", hline)
        if ell != H.num_hedges:
            raise InputError(f"header announces {ell} hedges, body has {H.num_hedges}", hline)
    return H


def serialize_hedgegraph(H: HedgeGraph) -> str:
    out = [f"p hg {H.n} {H.m} {H.num_hedges}"]
    out += [f"e {u + 1} {v + 1} {t}" for u, v, t in H.labeled_edges()]
    return "\n".join(out)


def parse_formula(text: str) -> ConstraintFormula:
    header = None
    declared: dict[str, None] | None = None
    seen: dict[str, None] = {}
    clauses = []
    for line, raw, fields in _lines(text):
        tag = fields[0]
        if tag == "p":
            if header is not None or clauses or declared is not None:
                raise InputError("header must come first and only once", line, 1)
            header = (line, *_header(raw, fields, line, "cf", 2))
            continue
        if tag == "v":
            if clauses:
                raise InputError("variable declarations must precede clauses", line, 1)
            declared = declared if declared is not None else {}
            for k, tok in enumerate(fields[1:], start=1):
                if tok in ("0", "1") or tok in declared:
                    raise InputError(f"invalid or repeated variable {tok!r}", line, _column(raw, fields, k))
                declared[tok] = None
            continue
        kind = tag.upper()
        if kind not in ARITY:
            raise InputError(f"unknown clause kind {tag!r}", line, 1)
        args = []
        if len(fields) - 1 != ARITY[kind]:
            raise InputError(f"{tag} takes {ARITY[kind]} arguments, got {len(fields) - 1}", line, 1)
        for k, tok in enumerate(fields[1:], start=1):
            col = _column(raw, fields, k)
            if tok in ("0", "1"):
                if kind not in ("F1", "FP"):
                    raise InputError(f"constants are not allowed in {tag}", line, col)
                args.append(int(tok))
            else:
                if declared is not None and tok not in declared:
                    raise InputError(f"undeclared variable {tok!r}", line, col)
                seen.setdefault(tok, None)
                args.append(tok)
        clauses.append(Clause(kind, tuple(args)))
    variables = tuple(declared if declared is not None else seen)
    if header is not None:
        hline, nv, nc = header
        if nv != len(variables):
            raise InputError(f"header announces {nv} variables, found {len(variables)}", hline)
        if nc != len(clauses):
            raise InputError(f"header announces {nc} clauses, found {len(clauses)}", hline)
    return ConstraintFormula(variables, tuple(clauses))


def serialize_formula(phi: ConstraintFormula) -> str:
    out = [f"p cf {len(phi.variables)} {len(phi.clauses)}", " ".join(("v",) + phi.variables)]
    out += [" ".join([c.kind.lower(), *map(str, c.args)]) for c in phi.clauses]
    return "\n".join(out)


def parse_solution(text: str, graph: HedgeGraph | None = None):
    """Sorted token tuple, or a :class:`Solution` when ``graph`` is given."""
    count = None
    tokens: list[str] = []
    for line, raw, fields in _lines(text):
        if fields[0] == "k" and count is None and not tokens:
            if len(fields) != 2:
                raise InputError("malformed count line, expected 'k <count>'", line, 1)
            count = (line, _int(raw, fields, 1, line, "count"))
            continue
        if count is None:
            raise InputError("solution must start with 'k <count>'", line, 1)
        if len(fields) != 1:
            raise InputError("one hedge token per line", line, _column(raw, fields, 1))
        if graph is not None and fields[0] not in graph.token_ids:
            raise InputError(f"unknown hedge token {fields[0]!r}", line, 1)
        tokens.append(fields[0])
    if count is None:
        raise InputError("empty solution file, expected 'k <count>'", 1, 1)
    if count[1] != len(tokens):
        raise InputError(f"count line announces {count[1]} hedges, found {len(tokens)}", count[0])
    if len(set(tokens)) != len(tokens):
        raise InputError("repeated hedge token")
    if graph is None:
        return tuple(sorted(tokens))
    return Solution.of(graph, (graph.token_ids[t] for t in tokens))


def serialize_solution(value, graph: HedgeGraph | None = None) -> str:
    if isinstance(value, Solution):
        if graph is None:
            raise InputError("serialising a Solution needs its hedge graph")
        tokens = graph.tokens(value.deleted)
    else:
        tokens = tuple(sorted(value))
    return "\n".join([f"k {len(tokens)}", *tokens])


def parse_graph(text: str) -> SimpleGraph:
    header = None
    edges, lines = [], []
    for line, raw, fields in _lines(text):
        if fields[0] == "p":
            if header is not None or edges:
                raise InputError("header must come first and only once", line, 1)
            header = (line, *_header(raw, fields, line, "edge", 2))
        elif fields[0] == "e":
            if len(fields) != 3:
                raise InputError(f"edge line needs 2 fields, got {len(fields) - 1}", line, 1)
            edges.append((_int(raw, fields, 1, line, "vertex") - 1, _int(raw, fields, 2, line, "vertex") - 1))
            lines.append(line)
        else:
            raise InputError(f"unknown line type {fields[0]!r}", line, 1)
    n = header[1] if header else max((max(e) + 1 for e in edges), default=0)
    seen = set()
    for (u, v), line in zip(edges, lines):
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"vertex out of range in edge ({u + 1}, {v + 1})", line)
        if u == v:
            raise InputError(f"self-loop on vertex {u + 1}", line)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise InputError(f"duplicate edge ({e[0] + 1}, {e[1] + 1})", line)
        seen.add(e)
    if header and header[2] != len(edges):
        raise InputError(f"header announces {header[2]} edges, body has {len(edges)}", header[0])
    return SimpleGraph.from_edges(n, edges)


def serialize_graph(g: SimpleGraph) -> str:
    return "\n".join([f"p edge {g.n} {len(g.edges)}", *(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())])


def parse(kind: str, text: str, graph: HedgeGraph | None = None):
    if kind == "hedgegraph":
        return parse_hedgegraph(text)
    if kind == "formula":
        return parse_formula(text)
    if kind == "solution":
        return parse_solution(text, graph)
    if kind == "graph":
        return parse_graph(text)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def serialize(kind: str, value, graph: HedgeGraph | None = None) -> str:
    if kind == "hedgegraph":
        return serialize_hedgegraph(value)
    if kind == "formula":
        return serialize_formula(value)
    if kind == "solution":
        return serialize_solution(value, graph)
    if kind == "graph":
        return serialize_graph(value)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")

