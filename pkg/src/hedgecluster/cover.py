"""Vertex cover toolkit and the list-constrained Multi-Vertex Cover variant.

In Multi-Vertex Cover every vertex ``v`` carries a list ``L(v)`` containing
``v``; a feasible cover ``S`` must be closed under the lists (``L(S) = S``).
With list-monotone lists (``x in L(y)`` implies ``L(x) <= L(y)``) the problem
reduces to plain vertex cover on an auxiliary graph, which gives a factor-2
algorithm.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, RefusalError, StructuralError

BRUTEFORCE_LIMIT = 24


@dataclass(frozen=True)
class SimpleGraph:
    """Simple graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        out = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"vertex out of range in edge ({u}, {v}) with n={n}")
            out.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(out))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def is_vertex_cover(g: SimpleGraph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(u in s or v in s for u, v in g.edges)


def vc_2approx(g: SimpleGraph) -> frozenset[int]:
    """Both endpoints of a greedy maximal matching, edges taken in sorted order."""
    cover: set[int] = set()
    for u, v in g.sorted_edges():
        if u not in cover and v not in cover:
            cover.add(u)
            cover.add(v)
    return frozenset(cover)


def vc_bruteforce(g: SimpleGraph) -> frozenset[int]:
    """Minimum vertex cover by enumerating subsets in increasing size."""
    if g.n > BRUTEFORCE_LIMIT:
        raise RefusalError(f"brute-force vertex cover refused for n={g.n} > {BRUTEFORCE_LIMIT}")
    edges = g.sorted_edges()
    touched = sorted({v for e in edges for v in e})
    for k in range(len(touched) + 1):
        for s in combinations(touched, k):
            ss = set(s)
            if all(u in ss or v in ss for u, v in edges):
                return frozenset(s)
    raise AssertionError("unreachable: the touched vertices always cover")


def two_coloring(g: SimpleGraph) -> list[int]:
    """Side (0 or 1) of every vertex; raises with an odd cycle otherwise."""
    side = [-1] * g.n
    parent = [-1] * g.n
    adj = g.adjacency
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    parent[w] = v
                    queue.append(w)
                elif side[w] == side[v]:
                    raise StructuralError(
                        "graph is not bipartite", witness=_odd_cycle(parent, v, w)
                    )
    return side


def _odd_cycle(parent, v, w):
    pv, pw = [v], [w]
    while parent[pv[-1]] >= 0:
        pv.append(parent[pv[-1]])
    anc = set(pv)
    while pw[-1] not in anc:
        pw.append(parent[pw[-1]])
    meet = pw[-1]
    return pv[: pv.index(meet) + 1] + pw[-2::-1]


def maximum_matching(g: SimpleGraph, side: Sequence[int]) -> dict[int, int]:
    """Hopcroft-Karp on a bipartite graph; returns the mate of every matched vertex."""
    adj = g.adjacency
    left = [v for v in range(g.n) if side[v] == 0]
    mate: dict[int, int] = {}
    inf = g.n + 1

    while True:
        dist: dict[int, int] = {}
        queue = deque()
        for u in left:
            if u not in mate:
                dist[u] = 0
                queue.append(u)
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in sorted(adj[u]):
                m = mate.get(w)
                if m is None:
                    found = min(found, dist[u] + 1)
                elif m not in dist:
                    dist[m] = dist[u] + 1
                    queue.append(m)
        if found == inf:
            return mate

        def augment(u: int) -> bool:
            for w in sorted(adj[u]):
                m = mate.get(w)
                if (m is None and dist[u] + 1 == found) or (
                    m is not None and dist.get(m) == dist[u] + 1 and augment(m)
                ):
                    mate[u], mate[w] = w, u
                    return True
            dist[u] = inf
            return False

        for u in left:
            if u not in mate:
                augment(u)


def vc_bipartite_exact(g: SimpleGraph) -> frozenset[int]:
    """Minimum vertex cover of a bipartite graph via Koenig's theorem.

    From every unmatched left vertex walk alternating paths (non-matching
    edges left to right, matching edges back); the cover is the unreached
    left vertices plus the reached right vertices.
    """
    side = two_coloring(g)
    mate = maximum_matching(g, side)
    adj = g.adjacency
    reached = set()
    queue = deque(v for v in range(g.n) if side[v] == 0 and v not in mate)
    reached.update(queue)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w in reached or mate.get(u) == w:
                continue
            reached.add(w)
            m = mate.get(w)
            if m is not None and m not in reached:
                reached.add(m)
                queue.append(m)
    cover = {v for v in range(g.n) if adj[v] and (side[v] == 0) != (v in reached)}
    return frozenset(cover)


def minimalize_vc(g: SimpleGraph, s: Iterable[int]) -> frozenset[int]:
    """Drop redundant vertices (all neighbours already in the cover).

    Removal is tried from the largest id down, so smaller ids are kept.
    """
    cover = set(s)
    if not is_vertex_cover(g, cover):
        raise InputError("the given set is not a vertex cover")
    for v in sorted(cover, reverse=True):
        if g.adjacency[v] <= cover - {v}:
            cover.discard(v)
    return frozenset(cover)


# --- Multi-Vertex Cover ------------------------------------------------------

@dataclass(frozen=True)
class ListCoverInstance:
    g: SimpleGraph
    lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.lists) != self.g.n:
            raise InputError(f"expected {self.g.n} lists, got {len(self.lists)}")
        for v, lv in enumerate(self.lists):
            if v not in lv:
                raise InputError(f"vertex {v} is missing from its own list")
            for x in lv:
                if not self.lists[x] <= lv:
                    raise StructuralError(
                        f"lists are not monotone: {x} is in L({v}) but L({x}) is not a subset",
                        witness=(x, v),
                    )

    @classmethod
    def build(cls, g: SimpleGraph, lists: Sequence[Iterable[int]]) -> "ListCoverInstance":
        return cls(g, tuple(frozenset(lv) for lv in lists))

    def closure(self, s: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for v in s:
            out |= self.lists[v]
        return frozenset(out)

    def is_feasible(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return is_vertex_cover(self.g, s) and self.closure(s) == s

    def is_minimal(self, s: Iterable[int], skip: Iterable[int] = ()) -> bool:
        """Every member outside ``skip`` has a reason to be there.

        ``x`` is justified by an edge ``{x, y}`` with ``y`` outside, or by some
        ``y`` in the cover with ``x`` in ``L(y)`` and an edge ``{y, z}``, ``z``
        outside.  Vertices forced by :func:`mvc_to_vc` can fail this test while
        belonging to every solution, hence ``skip``.
        """
        s = frozenset(s)
        adj = self.g.adjacency
        exposed = {y for y in s if adj[y] - s}
        return all(any(x in self.lists[y] for y in exposed) for x in s.difference(skip))


def mvc_to_vc(inst: ListCoverInstance) -> tuple[SimpleGraph, frozenset[int]]:
    """Auxiliary plain vertex-cover graph and the vertices every solution contains.

    ``forced`` gathers ``L(x) & L(y)`` over the edges.  The auxiliary graph keeps
    the vertex ids of ``inst.g``; forced vertices are left isolated.  Each edge
    ``{x, y}`` between surviving vertices is blown up into all pairs between
    the surviving parts of ``L(x)`` and ``L(y)``.
    """
    lists = inst.lists
    forced: set[int] = set()
    for x, y in inst.g.edges:
        forced |= lists[x] & lists[y]
    edges = set()
    for x, y in inst.g.edges:
        if x in forced or y in forced:
            continue
        for a in lists[x] - forced:
            for b in lists[y] - forced:
                edges.add((a, b) if a < b else (b, a))
    return SimpleGraph(inst.g.n, frozenset(edges)), frozenset(forced)


def mvc_solve_2approx(inst: ListCoverInstance) -> frozenset[int]:
    """List-closed vertex cover of size at most twice the optimum."""
    aux, forced = mvc_to_vc(inst)
    return minimalize_vc(aux, vc_2approx(aux)) | forced


def mvc_bruteforce(inst: ListCoverInstance) -> frozenset[int]:
    """Minimum list-closed vertex cover by subset enumeration."""
    if inst.g.n > BRUTEFORCE_LIMIT:
        raise RefusalError(f"brute-force refused for n={inst.g.n} > {BRUTEFORCE_LIMIT}")
    for k in range(inst.g.n + 1):
        for s in combinations(range(inst.g.n), k):
            if inst.is_feasible(s):
                return frozenset(s)
    raise AssertionError("unreachable: the full vertex set is feasible")
