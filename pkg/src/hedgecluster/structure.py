"""Domination between hedges and the hedge intersection graph.

For a hedge ``x`` of a bi-hedge graph, ``sk3(x)`` lists the triangles with
exactly one edge in ``x``; the other two edges of such a triangle share a
hedge, and ``d(x)`` collects those hedges.  Deleting ``x`` turns each of these
triangles into a P3 of the partner hedge, so the partner must go too.  The
set ``r(x)`` closes this relation: every hedge whose deletion is forced,
directly or transitively, by deleting ``x`` (``x`` itself included).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .core import K3, HedgeGraph, TripleCatalog, enumerate_triples
from .errors import StructuralError


@dataclass(frozen=True)
class DominationIndex:
    sk3: dict[int, tuple[K3, ...]]
    d: dict[int, frozenset[int]]
    r: dict[int, frozenset[int]]


def build_domination(H: HedgeGraph, catalog: TripleCatalog | None = None) -> DominationIndex:
    """Compute ``sk3``, ``d`` and ``r`` for every hedge of a bi-hedge graph."""
    cat = catalog if catalog is not None else enumerate_triples(H)
    sk3: dict[int, list[K3]] = {h: [] for h in H.hedges}
    d: dict[int, set[int]] = {h: set() for h in H.hedges}
    for t in cat.k3s:
        if t.multiplicity == 3:
            raise StructuralError(
                f"triangle {t.a, t.b, t.c} is covered by three hedges; domination "
                "is only defined on bi-hedge graphs",
                witness=t,
            )
        if t.multiplicity == 2:
            sk3[t.single].append(t)
            d[t.single].add(t.doubled)
    # r(x): everything that reaches x along arcs z -> w with z in d(w)
    r: dict[int, frozenset[int]] = {}
    for x in H.hedges:
        seen = {x}
        queue = deque([x])
        while queue:
            w = queue.popleft()
            for z in d[w]:
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        r[x] = frozenset(seen)
    return DominationIndex(
        sk3={h: tuple(ts) for h, ts in sk3.items()},
        d={h: frozenset(s) for h, s in d.items()},
        r=r,
    )


class EdgeType(enum.Enum):
    P = "P"          # the pair spans only P3's
    TRI = "TRI"      # only triangles
    P_TRI = "P_TRI"  # both


@dataclass(frozen=True)
class HedgeIntersectionGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    edge_type: dict[tuple[int, int], EdgeType]
    p3_support: dict[tuple[int, int], int]   # simple P3's spanned by the pair
    k3_support: dict[tuple[int, int], int]   # triangles spanned by the pair

    def neighbors(self, x: int) -> list[int]:
        return sorted({b if a == x else a for a, b in self.edges if x in (a, b)})

    def edges_of_type(self, t: EdgeType) -> list[tuple[int, int]]:
        return sorted(e for e in self.edges if self.edge_type[e] is t)


def build_intersection_graph(H: HedgeGraph, catalog: TripleCatalog | None = None) -> HedgeIntersectionGraph:
    """Hedges as vertices; two hedges adjacent when their edges share a vertex.

    A pair sharing vertex ``b`` through edges ``{a, b}`` and ``{b, c}`` spans a
    P3 when ``{a, c}`` is absent and a triangle otherwise, which types every
    edge.  Outside bi-hedge graphs the closing edge of a triangle may lie in a
    third hedge; it is still counted as a triangle for the pair.
    """
    cat = catalog if catalog is not None else enumerate_triples(H)
    edges: set[tuple[int, int]] = set()
    for b in range(H.n):
        incident = sorted({H.hedge(a, b) for a in H.adjacency[b]})
        for i, x in enumerate(incident):
            for y in incident[i + 1:]:
                edges.add((x, y))
    p3_support = {e: 0 for e in edges}
    k3_support = {e: 0 for e in edges}
    for p in cat.simple_p3s:
        x, y = sorted(p.hedges)
        p3_support[(x, y)] += 1
    for t in cat.k3s:
        hs = sorted(set(t.hedges))
        for i, x in enumerate(hs):
            for y in hs[i + 1:]:
                k3_support[(x, y)] += 1
    edge_type = {}
    for e in edges:
        if p3_support[e] and k3_support[e]:
            edge_type[e] = EdgeType.P_TRI
        elif k3_support[e]:
            edge_type[e] = EdgeType.TRI
        else:
            edge_type[e] = EdgeType.P
    return HedgeIntersectionGraph(H.hedges, frozenset(edges), edge_type, p3_support, k3_support)


def mixed_vertices(F: HedgeIntersectionGraph, D: DominationIndex) -> frozenset[int]:
    """Hedges ``x`` on a both-type edge ``{x, y}`` with ``x`` in ``d(y)``.

    Every solution deletes these: the pair spans a P3, so one of them goes,
    and deleting ``y`` leaves ``x`` with an internal P3 anyway.
    """
    out = set()
    for x, y in F.edges_of_type(EdgeType.P_TRI):
        if x in D.d[y]:
            out.add(x)
        if y in D.d[x]:
            out.add(y)
    return frozenset(out)


def find_cycle(F: HedgeIntersectionGraph) -> list[int] | None:
    """Vertices of some cycle of ``F`` in traversal order, or None for a forest."""
    adj: dict[int, list[int]] = {v: [] for v in F.vertices}
    for a, b in sorted(F.edges):
        adj[a].append(b)
        adj[b].append(a)
    parent: dict[int, int | None] = {}
    for root in F.vertices:
        if root in parent:
            continue
        parent[root] = None
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w == parent[v]:
                    continue
                if w in parent:
                    return _cycle_path(parent, v, w)
                parent[w] = v
                stack.append(w)
    return None


def _cycle_path(parent, v, w):
    # both v and w are in the DFS forest; join their root paths
    pv, pw = [v], [w]
    while parent[pv[-1]] is not None:
        pv.append(parent[pv[-1]])
    anc = set(pv)
    while pw[-1] not in anc:
        pw.append(parent[pw[-1]])
    meet = pw[-1]
    return pv[: pv.index(meet) + 1] + pw[-2::-1]


def is_acyclic(F: HedgeIntersectionGraph) -> bool:
    return find_cycle(F) is None
