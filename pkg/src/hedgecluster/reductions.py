"""Reductions between hedge cluster deletion, vertex cover and Boolean formulas.

Formulas are conjunctions of clauses over named variables.  Clause kinds:

========  =====  ================================================
kind      arity  satisfied when
========  =====  ================================================
``F1``    3      not exactly one argument is 1
``G1``    2      ``not a or b``
``G2``    2      ``a or b``
``F2``    1      ``a``
``FP``    3      ``not a or b or c``
========  =====  ================================================

``F1`` and ``FP`` arguments may be the constants ``0``/``1`` (Python ints);
variables are strings.  A variable set to 1 stands for a deleted hedge.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .core import HedgeGraph, build, enumerate_triples, normalize
from .cover import SimpleGraph
from .errors import InputError

Arg = Union[str, int]

ARITY = {"F1": 3, "G1": 2, "G2": 2, "F2": 1, "FP": 3}
CONSTANTS_ALLOWED = {"F1", "FP"}


@dataclass(frozen=True)
class Clause:
    kind: str
    args: tuple[Arg, ...]

    def __post_init__(self):
        if self.kind not in ARITY:
            raise InputError(f"unknown clause kind {self.kind!r}")
        if len(self.args) != ARITY[self.kind]:
            raise InputError(f"{self.kind} takes {ARITY[self.kind]} arguments, got {len(self.args)}")
        for a in self.args:
            if isinstance(a, int):
                if a not in (0, 1):
                    raise InputError(f"constant must be 0 or 1, got {a}")
                if self.kind not in CONSTANTS_ALLOWED:
                    raise InputError(f"constants are not allowed in {self.kind}")
            elif not a or a in ("0", "1") or any(ch.isspace() for ch in a):
                raise InputError(f"invalid variable token {a!r}")

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(a for a in self.args if isinstance(a, str))

    @property
    def constant_free(self) -> bool:
        return all(isinstance(a, str) for a in self.args)

    def holds(self, value: Mapping[str, int]) -> bool:
        v = [a if isinstance(a, int) else value[a] for a in self.args]
        if self.kind == "F1":
            return sum(v) != 1
        if self.kind == "G1":
            return not v[0] or bool(v[1])
        if self.kind == "G2":
            return bool(v[0] or v[1])
        if self.kind == "F2":
            return bool(v[0])
        return not v[0] or bool(v[1] or v[2])

    def __str__(self):
        return f"{self.kind}({', '.join(map(str, self.args))})"


def f1(*args: Arg) -> Clause:
    """``F1`` clause with constants moved to the front (the predicate is symmetric)."""
    consts = sorted(a for a in args if isinstance(a, int))
    return Clause("F1", tuple(consts) + tuple(a for a in args if isinstance(a, str)))


@dataclass(frozen=True)
class ConstraintFormula:
    variables: tuple[str, ...]
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise InputError("duplicate variable declaration")
        declared = set(self.variables)
        for c in self.clauses:
            if not isinstance(c, Clause):
                raise InputError(f"not a clause: {c!r}")
            for a in c.variables:
                if a not in declared:
                    raise InputError(f"undeclared variable {a!r} in {c}")

    @classmethod
    def of(cls, clauses: Iterable[Clause], variables: Iterable[str] | None = None) -> "ConstraintFormula":
        """Formula over ``variables``, or over the clause variables in first-use order."""
        clauses = tuple(clauses)
        if variables is None:
            variables = dict.fromkeys(a for c in clauses for a in c.variables)
        return cls(tuple(variables), clauses)

    def kinds(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.clauses:
            out[c.kind] = out.get(c.kind, 0) + 1
        return out


@dataclass(frozen=True)
class Infeasible:
    """No assignment satisfies the formula; ``clause`` is an unsatisfiable witness."""

    reason: str
    clause: Clause | None = None


def eval_formula(phi: ConstraintFormula, a: Mapping[str, int]) -> bool:
    missing = [v for v in phi.variables if v not in a]
    if missing:
        raise InputError(f"assignment misses variables {missing}")
    unknown = [v for v in a if v not in set(phi.variables)]
    if unknown:
        raise InputError(f"assignment mentions undeclared variables {unknown}")
    return all(c.holds(a) for c in phi.clauses)


def weight(a: Mapping[str, int]) -> int:
    return sum(1 for v in a.values() if v)


def _variable_names(tokens: Sequence[str]) -> list[str]:
    # hedge tokens become variable names; 0 and 1 are reserved for constants
    taken = set(tokens)
    out = []
    for t in tokens:
        name = t
        while name in ("0", "1"):
            name = "_" + name
            while name in taken:
                name = "_" + name
        taken.add(name)
        out.append(name)
    return out


# --- vertex cover and host embedding -------------------------------------------

def vc_to_hcd(g: SimpleGraph) -> tuple[HedgeGraph, dict[int, int]]:
    """One three-vertex path per edge ``{x, y}``: ``e_x - e_xy - e_y``.

    Edge ``i`` (in sorted order) occupies vertices ``3i`` (``e_x``), ``3i+1``
    (``e_xy``) and ``3i+2`` (``e_y``).  The hedge of vertex ``z`` is named
    ``E<z+1>`` and holds every path edge ending at a copy of ``z``.
    """
    isolated = [v for v in range(g.n) if not g.adjacency[v]]
    if isolated:
        warnings.warn(f"isolated vertices {isolated} are dropped", stacklevel=2)
    labeled = []
    for i, (x, y) in enumerate(g.sorted_edges()):
        labeled.append((3 * i, 3 * i + 1, f"E{x + 1}"))
        labeled.append((3 * i + 1, 3 * i + 2, f"E{y + 1}"))
    H = build(3 * len(g.edges), labeled)
    mapping = {v: H.token_ids[f"E{v + 1}"] for v in range(g.n) if g.adjacency[v]}
    return H, mapping


def _p3_components(core: HedgeGraph) -> list[tuple[int, int]]:
    """Hedges ``(h1, h2)`` of every component of a disjoint union of P3's."""
    adj = core.adjacency
    seen: set[int] = set()
    out = []
    for s in range(core.n):
        if s in seen or not adj[s]:
            continue
        comp, stack = {s}, [s]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        centre = [v for v in comp if len(adj[v]) == 2]
        if len(comp) != 3 or len(centre) != 1:
            raise InputError(f"core component {sorted(comp)} is not a three-vertex path")
        b = centre[0]
        a, c = sorted(adj[b])
        out.append((core.hedge(a, b), core.hedge(b, c)))
    return out


def embed_host(core: HedgeGraph, host: str, host_size: int) -> HedgeGraph:
    """Spread the hedges of a disjoint union of P3's across a larger host graph.

    The host is a path or an almost-clique (``K_n`` minus the edge ``{0, 2}``)
    packed by the consecutive triples ``{3j, 3j+1, 3j+2}``.  The triple at 0
    contains the induced path ``0 - 1 - 2``; every later triple ``j`` up to the
    number of core components copies the hedges of core component ``j - 1`` on
    its edges ``{3j, 3j+1}`` and ``{3j+1, 3j+2}``.  All other edges form one
    fresh hedge, which the optimum always deletes, so the optimum grows by one.
    """
    if host not in ("path", "clique"):
        raise InputError(f"unknown host kind {host!r}")
    if host_size < 3 or host_size % 3:
        raise InputError(f"host size must be a positive multiple of 3, got {host_size}")
    comps = _p3_components(core)
    if host_size // 3 - 1 < len(comps):
        raise InputError(
            f"host of size {host_size} has {host_size // 3 - 1} free triples, "
            f"the core needs {len(comps)}"
        )
    if host == "path":
        pairs = [(i, i + 1) for i in range(host_size - 1)]
    else:
        pairs = [(u, v) for u in range(host_size) for v in range(u + 1, host_size) if (u, v) != (0, 2)]
    mapped: dict[tuple[int, int], str] = {}
    for j, (h1, h2) in enumerate(comps, start=1):
        mapped[(3 * j, 3 * j + 1)] = core.token(h1)
        mapped[(3 * j + 1, 3 * j + 2)] = core.token(h2)
    fresh = f"E{core.num_hedges + 1}"
    while fresh in core.token_ids:
        fresh += "+"
    return build(host_size, [(u, v, mapped.get((u, v), fresh)) for u, v in pairs])


# --- MinOnes ------------------------------------------------------------------

def minones_to_hcd(phi: ConstraintFormula) -> tuple[HedgeGraph, dict[str, int]]:
    """A triangle per ``F1`` clause and a one-hedge path per ``F2`` clause."""
    labeled = []
    base = 0
    for c in phi.clauses:
        if c.kind == "F1" and c.constant_free:
            x, y, z = c.args
            labeled += [(base, base + 1, x), (base, base + 2, y), (base + 1, base + 2, z)]
        elif c.kind == "F2":
            (x,) = c.args
            labeled += [(base, base + 1, x), (base + 1, base + 2, x)]
        else:
            raise InputError(f"clause {c} is not a constant-free F1 or an F2")
        base += 3
    H = build(base, labeled)
    return H, {v: H.token_ids[v] for v in phi.variables if v in H.token_ids}


def hcd_to_minones(H: HedgeGraph) -> tuple[ConstraintFormula, dict[int, str]]:
    """One clause per catalogued triple of the normalised graph.

    Three-hedge triangle: ``F1``; two-hedge triangle: ``G1(single, doubled)``;
    simple P3: ``G2``; internal P3: ``F2``; one-hedge triangle: nothing.
    """
    names = dict(zip(H.hedges, _variable_names([H.token(h) for h in H.hedges])))
    cat = enumerate_triples(normalize(H))
    clauses = []
    for p in cat.p3s:
        if p.internal:
            clauses.append(Clause("F2", (names[p.hedges[0]],)))
        else:
            clauses.append(Clause("G2", tuple(names[h] for h in p.hedges)))
    for t in cat.k3s:
        if t.multiplicity == 3:
            clauses.append(Clause("F1", tuple(names[h] for h in t.hedges)))
        elif t.multiplicity == 2:
            clauses.append(Clause("G1", (names[t.single], names[t.doubled])))
    return ConstraintFormula(tuple(names.values()), tuple(clauses)), names


# --- propagational formulas -----------------------------------------------------

def eliminate_constants(phi: ConstraintFormula) -> ConstraintFormula | Infeasible:
    """Remove every ``F1(0, 0, x)`` clause by fixing ``x`` to 0, to a fixpoint.

    Eliminated variables leave the variable list; all-constant clauses are
    dropped when satisfied and yield :class:`Infeasible` otherwise.
    """
    for c in phi.clauses:
        if c.kind != "F1":
            raise InputError(f"only F1 clauses are accepted, got {c}")
    zero: set[str] = set()
    clauses = [f1(*c.args) for c in phi.clauses]
    while True:
        new = set()
        for c in clauses:
            if c.args[:2] == (0, 0) and isinstance(c.args[2], str):
                new.add(c.args[2])
        if not new:
            break
        zero |= new
        clauses = [f1(*(0 if a in new else a for a in c.args)) for c in clauses]
    out = []
    for c in clauses:
        if c.variables:
            out.append(c)
        elif not c.holds({}):
            return Infeasible(f"clause {c} is unsatisfiable", c)
    return ConstraintFormula(tuple(v for v in phi.variables if v not in zero), tuple(out))


def propsat_to_hcd(phi: ConstraintFormula) -> tuple[HedgeGraph, dict[str, int]]:
    """Hedge graph whose solutions are the satisfying assignments of an ``F1`` formula.

    ``F1(0,1,x)``: one-hedge path; ``F1(1,1,x)``: one-hedge triangle;
    ``F1(0,x,y)``: two triangles, one doubled by each hedge; ``F1(1,x,y)``:
    two-hedge path; ``F1(x,y,z)``: three-hedge triangle.
    """
    labeled = []
    base = 0

    def tri(a, b, c):
        nonlocal base
        labeled.extend([(base, base + 1, a), (base, base + 2, b), (base + 1, base + 2, c)])
        base += 3

    def path(a, b):
        nonlocal base
        labeled.extend([(base, base + 1, a), (base + 1, base + 2, b)])
        base += 3

    for c in phi.clauses:
        if c.kind != "F1":
            raise InputError(f"only F1 clauses are accepted, got {c}")
        c = f1(*c.args)
        consts, vs = c.args[: 3 - len(c.variables)], c.variables
        if consts[:2] == (0, 0):
            raise InputError(f"clause {c} fixes a variable to 0; run eliminate_constants first")
        if not vs:
            if not c.holds({}):
                raise InputError(f"clause {c} is unsatisfiable")
            continue
        if consts == (0, 1):
            path(vs[0], vs[0])
        elif consts == (1, 1):
            tri(vs[0], vs[0], vs[0])
        elif consts == (0,):
            x, y = vs
            tri(x, x, y)  # x doubled, y single
            tri(y, y, x)
        elif consts == (1,):
            path(*vs)
        else:
            tri(*vs)
    H = build(base, labeled)
    return H, {v: H.token_ids[v] for v in phi.variables if v in H.token_ids}


def hcd_to_propsat(H: HedgeGraph) -> tuple[ConstraintFormula, dict[int, str]]:
    """``FP`` formula (``not a or b or c``) equivalent to a hedge graph.

    Three-hedge triangle ``x, y, z``: ``FP(x,y,z) FP(y,x,z) FP(z,x,y)``;
    two-hedge triangle doubled by ``x``, single ``y``: ``FP(y,x,0)``; simple
    P3 on ``x, y``: ``FP(1,x,y)``; internal P3 of ``x``: ``FP(1,0,x)``.
    """
    names = dict(zip(H.hedges, _variable_names([H.token(h) for h in H.hedges])))
    cat = enumerate_triples(normalize(H))
    clauses = []
    for p in cat.p3s:
        if p.internal:
            clauses.append(Clause("FP", (1, 0, names[p.hedges[0]])))
        else:
            clauses.append(Clause("FP", (1,) + tuple(names[h] for h in p.hedges)))
    for t in cat.k3s:
        if t.multiplicity == 3:
            x, y, z = (names[h] for h in t.hedges)
            clauses += [Clause("FP", (x, y, z)), Clause("FP", (y, x, z)), Clause("FP", (z, x, y))]
        elif t.multiplicity == 2:
            clauses.append(Clause("FP", (names[t.single], names[t.doubled], 0)))
    return ConstraintFormula(tuple(names.values()), tuple(clauses)), names


def indicator(variables: Iterable[str], ones: Iterable[str]) -> dict[str, int]:
    ones = set(ones)
    return {v: int(v in ones) for v in variables}
