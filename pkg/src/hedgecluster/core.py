"""Hedge graphs: construction, validity checking, triple enumeration.

A hedge graph is a simple graph on vertices ``0..n-1`` whose edges are
partitioned into named groups (hedges).  Deleting a hedge deletes all of its
edges at once.  The optimisation problem is to delete as few hedges as
possible so that what remains is a cluster graph (a disjoint union of
cliques, equivalently a graph with no induced P3).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import InputError

Edge = tuple[int, int]


def _pair(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class HedgeGraph:
    """Immutable simple graph with an edge partition into hedges.

    Hedge ids are small integers.  :func:`build` assigns them densely in order
    of first appearance; graphs derived by :func:`remove_hedges` or
    :func:`normalize` keep the ids of the source, so ids may have gaps there.

    Equality compares the vertex count and the set of ``(u, v, token)``
    triples, i.e. the instance itself and not the id numbering.
    """

    n: int
    edge_hedge: Mapping[Edge, int]
    hedge_names: Mapping[int, str]

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edge_hedge))

    @cached_property
    def hedges(self) -> tuple[int, ...]:
        return tuple(sorted(self.hedge_names))

    @property
    def num_hedges(self) -> int:
        return len(self.hedge_names)

    @property
    def m(self) -> int:
        return len(self.edge_hedge)

    @cached_property
    def hedge_edges(self) -> dict[int, tuple[Edge, ...]]:
        out: dict[int, list[Edge]] = {h: [] for h in self.hedge_names}
        for e in self.edges:
            out[self.edge_hedge[e]].append(e)
        return {h: tuple(es) for h, es in out.items()}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edge_hedge:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def token_ids(self) -> dict[str, int]:
        return {t: h for h, t in self.hedge_names.items()}

    def hedge(self, u: int, v: int) -> int:
        return self.edge_hedge[_pair(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return _pair(u, v) in self.edge_hedge

    def token(self, h: int) -> str:
        return self.hedge_names[h]

    def hedge_id(self, token: str) -> int:
        try:
            return self.token_ids[token]
        except KeyError:
            raise InputError(f"unknown hedge token {token!r}") from None

    def tokens(self, ids: Iterable[int]) -> tuple[str, ...]:
        return tuple(sorted(self.hedge_names[h] for h in ids))

    def labeled_edges(self) -> list[tuple[int, int, str]]:
        return [(u, v, self.hedge_names[self.edge_hedge[(u, v)]]) for u, v in self.edges]

    @cached_property
    def fingerprint(self) -> str:
        canon = "\n".join(f"{u} {v} {t}" for u, v, t in self.labeled_edges())
        return hashlib.sha256(f"{self.n}\n{canon}".encode()).hexdigest()[:16]

    def __eq__(self, other):
        if not isinstance(other, HedgeGraph):
            return NotImplemented
        return self.n == other.n and self.labeled_edges() == other.labeled_edges()

    def __hash__(self):
        return hash(self.fingerprint)

    def __repr__(self):
        return f"HedgeGraph(n={self.n}, m={self.m}, hedges={self.num_hedges})"


def build(
    n: int,
    labeled_edges: Sequence[tuple[int, int, str]],
    lines: Sequence[int] | None = None,
) -> HedgeGraph:
    """Build a hedge graph from ``(u, v, token)`` triples with 0-based vertices.

    Hedge ids are assigned densely in order of first token appearance.
    ``lines`` optionally gives the source line of each triple for error
    reporting; by default the 1-based position in ``labeled_edges`` is used.
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    edge_hedge: dict[Edge, int] = {}
    ids: dict[str, int] = {}
    for i, (u, v, token) in enumerate(labeled_edges):
        line = lines[i] if lines is not None else i + 1
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"vertex out of range in edge ({u}, {v}) with n={n}", line)
        if u == v:
            raise InputError(f"self-loop on vertex {u}", line)
        if not token or any(ch.isspace() for ch in token):
            raise InputError(f"invalid hedge token {token!r}", line)
        e = _pair(u, v)
        if e in edge_hedge:
            raise InputError(f"duplicate edge ({e[0]}, {e[1]})", line)
        edge_hedge[e] = ids.setdefault(token, len(ids))
    return HedgeGraph(n, edge_hedge, {h: t for t, h in ids.items()})


def _check_ids(H: HedgeGraph, U: Iterable[int]) -> frozenset[int]:
    U = frozenset(U)
    unknown = U.difference(H.hedge_names)
    if unknown:
        raise InputError(f"unknown hedge ids {sorted(unknown)}")
    return U


def remove_hedges(H: HedgeGraph, U: Iterable[int]) -> HedgeGraph:
    """Hedge-subgraph ``H \\ U``: same vertices, the edges of ``U`` removed."""
    U = _check_ids(H, U)
    if not U:
        return H
    edge_hedge = {e: h for e, h in H.edge_hedge.items() if h not in U}
    names = {h: t for h, t in H.hedge_names.items() if h not in U}
    return HedgeGraph(H.n, edge_hedge, names)


@dataclass(frozen=True)
class Solution:
    """A set of deleted hedge ids tied to the graph it was computed on."""

    deleted: frozenset[int]
    fingerprint: str = ""

    @classmethod
    def of(cls, H: HedgeGraph, ids: Iterable[int]) -> "Solution":
        return cls(frozenset(ids), H.fingerprint)

    def __len__(self):
        return len(self.deleted)

    def __iter__(self):
        return iter(sorted(self.deleted))


@dataclass(frozen=True)
class Verdict:
    valid: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self):
        return self.valid


def _masks(H: HedgeGraph, removed: frozenset[int] = frozenset()) -> list[int]:
    adj = [0] * H.n
    for (u, v), h in H.edge_hedge.items():
        if h not in removed:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def least_p3(adj: Sequence[int]) -> tuple[int, int, int] | None:
    """Lexicographically least induced P3 ``(a, b, c)``, ``a < c``, centre ``b``.

    ``adj`` holds one neighbourhood bitmask per vertex.
    """
    for a, na in enumerate(adj):
        above = ~((1 << (a + 1)) - 1)
        for b in _bits(na):
            cand = adj[b] & ~na & above
            if cand:
                return (a, b, (cand & -cand).bit_length() - 1)
    return None


def validate_solution(H: HedgeGraph, U: Iterable[int] | Solution) -> Verdict:
    """Check whether deleting the hedges ``U`` leaves a cluster graph.

    An invalid verdict carries the lexicographically least induced P3 of the
    residual graph as a witness.
    """
    if isinstance(U, Solution):
        if U.fingerprint and U.fingerprint != H.fingerprint:
            raise InputError("solution was computed for a different hedge graph")
        U = U.deleted
    U = _check_ids(H, U)
    witness = least_p3(_masks(H, U))
    return Verdict(witness is None, witness)


# --- triple catalogue -------------------------------------------------------

class P3(NamedTuple):
    """Induced path ``a - b - c`` (centre ``b``, ``a < c``)."""

    a: int
    b: int
    c: int
    hedges: tuple[int, int]  # hedge of {a,b}, hedge of {b,c}

    @property
    def internal(self) -> bool:
        return self.hedges[0] == self.hedges[1]

    @property
    def kind(self) -> str:
        return "internal" if self.internal else "simple"


class K3(NamedTuple):
    """Triangle ``a < b < c``."""

    a: int
    b: int
    c: int
    hedges: tuple[int, int, int]  # hedges of {a,b}, {a,c}, {b,c}

    @property
    def multiplicity(self) -> int:
        return len(set(self.hedges))

    @property
    def doubled(self) -> int | None:
        """Hedge covering two edges of a two-hedge triangle."""
        if self.multiplicity != 2:
            return None
        x, y, z = self.hedges
        return x if x in (y, z) else y

    @property
    def single(self) -> int | None:
        """Hedge covering exactly one edge of a two-hedge triangle."""
        if self.multiplicity != 2:
            return None
        d = self.doubled
        return next(h for h in self.hedges if h != d)


@dataclass(frozen=True)
class TripleCatalog:
    p3s: tuple[P3, ...] = ()
    k3s: tuple[K3, ...] = ()

    @property
    def internal_p3s(self) -> tuple[P3, ...]:
        return tuple(p for p in self.p3s if p.internal)

    @property
    def simple_p3s(self) -> tuple[P3, ...]:
        return tuple(p for p in self.p3s if not p.internal)

    def k3s_of_multiplicity(self, k: int) -> tuple[K3, ...]:
        return tuple(t for t in self.k3s if t.multiplicity == k)

    def __len__(self):
        return len(self.p3s) + len(self.k3s)


def enumerate_triples(H: HedgeGraph) -> TripleCatalog:
    """All induced P3's and all triangles of the underlying graph, sorted."""
    adj = H.adjacency
    p3s: list[P3] = []
    k3s: list[K3] = []
    for b in range(H.n):
        nb = sorted(adj[b])
        for i, a in enumerate(nb):
            for c in nb[i + 1:]:
                if c in adj[a]:
                    if b < a:  # count each triangle once, from its smallest vertex
                        k3s.append(K3(b, a, c, (H.hedge(b, a), H.hedge(b, c), H.hedge(a, c))))
                else:
                    p3s.append(P3(a, b, c, (H.hedge(a, b), H.hedge(b, c))))
    p3s.sort()
    k3s.sort()
    return TripleCatalog(tuple(p3s), tuple(k3s))


def normalize(H: HedgeGraph) -> HedgeGraph:
    """Replace ``H`` by disjoint copies of its P3's and triangles.

    Component ``i`` of the result sits on vertices ``3i, 3i+1, 3i+2`` and
    copies the ``i``-th catalogued triple (P3's first, then triangles), with
    every edge keeping the hedge id of the edge it copies.  Hedges that occur
    in no triple are dropped.  Deleting a set of surviving hedges yields a
    cluster graph here exactly when it does in ``H``.
    """
    cat = enumerate_triples(H)
    edge_hedge: dict[Edge, int] = {}
    base = 0
    for p in cat.p3s:
        edge_hedge[(base, base + 1)] = p.hedges[0]
        edge_hedge[(base + 1, base + 2)] = p.hedges[1]
        base += 3
    for t in cat.k3s:
        edge_hedge[(base, base + 1)] = t.hedges[0]
        edge_hedge[(base, base + 2)] = t.hedges[1]
        edge_hedge[(base + 1, base + 2)] = t.hedges[2]
        base += 3
    used = set(edge_hedge.values())
    names = {h: t for h, t in H.hedge_names.items() if h in used}
    return HedgeGraph(base, edge_hedge, names)


def internal_p3_hedges(H: HedgeGraph, removed: frozenset[int] = frozenset()) -> set[int]:
    """Hedges spanning an internal P3 in ``H \\ removed``."""
    adj = _masks(H, removed)
    out: set[int] = set()
    for b in range(H.n):
        by_hedge: dict[int, int] = {}
        for a in _bits(adj[b]):
            h = H.hedge(a, b)
            by_hedge[h] = by_hedge.get(h, 0) | (1 << a)
        for h, group in by_hedge.items():
            if h in out:
                continue
            for a in _bits(group):
                if group & ~adj[a] & ~(1 << a):
                    out.add(h)
                    break
    return out


def forced_closure(H: HedgeGraph) -> frozenset[int]:
    """Hedges that belong to every solution because they span internal P3's.

    Iterated to a fixpoint: deleting a forced hedge may leave another hedge
    spanning an internal P3 (two edges of a triangle whose third edge is gone).
    """
    forced: frozenset[int] = frozenset()
    while True:
        new = internal_p3_hedges(H, forced) - forced
        if not new:
            return forced
        forced |= new


# --- F3 packings ------------------------------------------------------------

def connected_triples(H: HedgeGraph) -> list[tuple[int, int, int]]:
    """Vertex sets of all connected three-vertex subgraphs, sorted."""
    cat = enumerate_triples(H)
    sets = {tuple(sorted((p.a, p.b, p.c))) for p in cat.p3s}
    sets.update((t.a, t.b, t.c) for t in cat.k3s)
    return sorted(sets)


def max_f3_packing(H: HedgeGraph, cap: int) -> tuple[tuple[int, int, int], ...]:
    """A maximum set of vertex-disjoint connected triples, searched up to ``cap + 1``.

    Returns a packing of size ``min(delta_max, cap + 1)``; a result longer
    than ``cap`` means the packing number exceeds the cap.
    """
    triples = connected_triples(H)
    by_vertex: dict[int, list[int]] = {}
    tmask = []
    for i, t in enumerate(triples):
        tmask.append((1 << t[0]) | (1 << t[1]) | (1 << t[2]))
        for v in t:
            by_vertex.setdefault(v, []).append(i)
    limit = cap + 1
    best: list[tuple[int, int, int]] = []
    chosen: list[int] = []

    def live(avail: int) -> int:
        out = 0
        for v in _bits(avail):
            if any(tmask[i] & avail == tmask[i] for i in by_vertex.get(v, ())):
                out |= 1 << v
        return out

    def search(avail: int) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = [triples[i] for i in chosen]
            if len(best) >= limit:
                return True
        avail = live(avail)
        if not avail or len(chosen) + bin(avail).count("1") // 3 <= len(best):
            return False
        v = (avail & -avail).bit_length() - 1
        for i in by_vertex[v]:
            if tmask[i] & avail == tmask[i]:
                chosen.append(i)
                if search(avail & ~tmask[i]):
                    return True
                chosen.pop()
        return search(avail & ~(1 << v))

    search((1 << H.n) - 1)
    return tuple(best)


@dataclass(frozen=True)
class StructuralReport:
    bihedge: bool
    delta_max: int | None  # None when the packing number exceeds the cap
    packing: tuple[tuple[int, int, int], ...]
    delta_cap: int
    p3_counts: dict[str, int] = field(default_factory=dict)
    k3_counts: dict[int, int] = field(default_factory=dict)
    offending_triangle: K3 | None = None

    @property
    def exceeds_cap(self) -> bool:
        return self.delta_max is None


def structural_stats(H: HedgeGraph, delta_cap: int = 3) -> StructuralReport:
    """Triple counts, the bi-hedge flag, and the F3-packing number up to a cap."""
    if delta_cap < 0:
        raise InputError("delta_cap must be non-negative")
    cat = enumerate_triples(H)
    bad = next((t for t in cat.k3s if t.multiplicity == 3), None)
    packing = max_f3_packing(H, delta_cap)
    delta = len(packing) if len(packing) <= delta_cap else None
    return StructuralReport(
        bihedge=bad is None,
        delta_max=delta,
        packing=packing,
        delta_cap=delta_cap,
        p3_counts={"internal": len(cat.internal_p3s), "simple": len(cat.simple_p3s)},
        k3_counts={k: len(cat.k3s_of_multiplicity(k)) for k in (1, 2, 3)},
        offending_triangle=bad,
    )
