import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from hedgecluster import InputError, RefusalError, StructuralError
from hedgecluster.cover import (
    ListCoverInstance,
    SimpleGraph,
    is_vertex_cover,
    maximum_matching,
    minimalize_vc,
    mvc_bruteforce,
    mvc_solve_2approx,
    mvc_to_vc,
    two_coloring,
    vc_2approx,
    vc_bipartite_exact,
    vc_bruteforce,
)
from instances import CHAIN_TOKENS, chain_lists
from strategies import simple_graphs


def G(n, edges):
    return SimpleGraph.from_edges(n, edges)


def path(n):
    return G(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return G(n, [(i, (i + 1) % n) for i in range(n)])


# --- plain vertex cover ---------------------------------------------------------

def test_simple_graph_rejects_loops_and_merges_duplicates():
    with pytest.raises(InputError):
        G(2, [(0, 0)])
    with pytest.raises(InputError):
        G(2, [(0, 2)])
    assert G(2, [(0, 1), (1, 0)]).edges == {(0, 1)}


def test_2approx_examples():
    assert vc_2approx(G(3, [])) == set()
    assert vc_2approx(G(2, [(0, 1)])) == {0, 1}
    assert vc_2approx(path(3)) == {0, 1}


def test_bruteforce_examples():
    assert len(vc_bruteforce(G(3, [(0, 1), (0, 2), (1, 2)]))) == 2
    assert vc_bruteforce(G(4, [])) == set()
    assert len(vc_bruteforce(cycle(5))) == 3


def test_bruteforce_guard():
    with pytest.raises(RefusalError):
        vc_bruteforce(path(25))


def test_bipartite_examples():
    assert len(vc_bipartite_exact(G(4, [(0, 2), (0, 3), (1, 2), (1, 3)]))) == 2
    assert vc_bipartite_exact(path(3)) == {1}


def test_bipartite_rejects_odd_cycle():
    with pytest.raises(StructuralError) as exc:
        vc_bipartite_exact(cycle(5))
    cyc = exc.value.witness
    assert len(cyc) % 2 == 1
    g = cycle(5)
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert b in g.adjacency[a]


@settings(max_examples=300)
@given(simple_graphs(max_n=12))
def test_2approx_within_factor_two(ng):
    n, edges = ng
    g = G(n, edges)
    out = vc_2approx(g)
    assert is_vertex_cover(g, out)
    assert len(out) <= 2 * O.brute_vc_size(n, edges)


@st.composite
def bipartite_graphs(draw, max_n=14):
    n = draw(st.integers(0, max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return n, sorted(chosen)


@settings(max_examples=300)
@given(bipartite_graphs())
def test_bipartite_cover_is_minimum(ng):
    n, edges = ng
    g = G(n, edges)
    out = vc_bipartite_exact(g)
    assert is_vertex_cover(g, out)
    mate = maximum_matching(g, two_coloring(g))
    assert len(out) == len(mate) // 2
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(edges)
    assert len(mate) // 2 == len(nx.max_weight_matching(nxg, maxcardinality=True))
    assert len(out) == len(vc_bruteforce(g))


def test_minimalize_examples():
    assert minimalize_vc(G(2, [(0, 1)]), {0, 1}) == {0}
    assert minimalize_vc(G(1, []), {0}) == set()
    with pytest.raises(InputError):
        minimalize_vc(path(3), {0})


@settings(max_examples=300)
@given(simple_graphs(max_n=10), st.data())
def test_minimalize_yields_minimal_cover(ng, data):
    n, edges = ng
    g = G(n, edges)
    extra = data.draw(st.sets(st.integers(0, max(n - 1, 0)))) if n else set()
    s = vc_2approx(g) | extra
    out = minimalize_vc(g, s)
    assert out <= s and is_vertex_cover(g, out)
    for v in out:
        assert not is_vertex_cover(g, out - {v})


# --- multi vertex cover --------------------------------------------------------------

def test_lists_must_contain_their_vertex():
    with pytest.raises(InputError):
        ListCoverInstance.build(G(2, [(0, 1)]), [{1}, {1}])


def test_lists_must_be_monotone():
    with pytest.raises(StructuralError) as exc:
        ListCoverInstance.build(G(3, [(0, 1)]), [{0, 1}, {1, 2}, {2}])
    assert exc.value.witness == (1, 0)


def test_chain_cover_graph():
    inst = chain_lists()
    ix = {t: i for i, t in enumerate(CHAIN_TOKENS)}
    aux, forced = mvc_to_vc(inst)
    assert forced == set()
    xs = [ix[t] for t in ("x1", "x2", "x3", "x5")]
    ys = [ix[t] for t in ("y1", "y2")]
    want = {(min(a, b), max(a, b)) for a in xs for b in ys} | {(ix["x2"], ix["z1"])}
    assert set(aux.edges) == want


def test_chain_list_cover_beats_plain_cover():
    inst = chain_lists()
    assert len(mvc_bruteforce(inst)) == 3
    assert len(vc_bruteforce(inst.g)) == 2
    out = mvc_solve_2approx(inst)
    assert inst.is_feasible(out) and len(out) <= 6


def test_shared_list_vertex_is_forced():
    # L(0) = {0, 2}, L(1) = {1, 2}: vertex 2 lies in both lists of edge {0, 1}
    inst = ListCoverInstance.build(G(3, [(0, 1)]), [{0, 2}, {1, 2}, {2}])
    aux, forced = mvc_to_vc(inst)
    assert forced == {2}
    assert aux.adjacency[2] == frozenset()


def test_singleton_lists_reduce_to_plain_cover():
    g = cycle(5)
    aux, forced = mvc_to_vc(ListCoverInstance.build(g, [{v} for v in range(5)]))
    assert aux.edges == g.edges and forced == set()


def test_edgeless_list_cover():
    assert mvc_solve_2approx(ListCoverInstance.build(G(3, []), [{0}, {1}, {2}])) == set()


@st.composite
def list_instances(draw, max_n=11):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = sorted(draw(st.lists(st.sampled_from(pairs), unique=True))) if pairs else []
    # x in L(y) along a random relation, closed transitively so lists are monotone
    arcs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n))
    lists = [{v} for v in range(n)]
    changed = True
    while changed:
        changed = False
        for x, y in arcs:
            if not lists[x] <= lists[y]:
                lists[y] |= lists[x]
                changed = True
    return n, edges, lists


def minimal_by_definition(n, edges, lists, s, members):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for x in members:
        direct = any(y not in s for y in adj[x])
        through = any(x in lists[y] and any(z not in s for z in adj[y]) for y in s)
        if not (direct or through):
            return False
    return True


@settings(max_examples=200)
@given(list_instances())
def test_list_cover_within_factor_two(inst_data):
    n, edges, lists = inst_data
    inst = ListCoverInstance.build(G(n, edges), lists)
    out = mvc_solve_2approx(inst)
    assert is_vertex_cover(inst.g, out)
    assert inst.closure(out) == out
    best = O.brute_mvc_size(n, edges, lists)
    assert len(mvc_bruteforce(inst)) == best
    assert len(out) <= 2 * best


@settings(max_examples=150)
@given(list_instances(max_n=9))
def test_minimal_auxiliary_covers_give_minimal_list_covers(inst_data):
    # forced vertices may have every neighbour inside the cover (an edge whose
    # endpoints share one list); they are justified by lying in every solution
    n, edges, lists = inst_data
    inst = ListCoverInstance.build(G(n, edges), lists)
    aux, forced = mvc_to_vc(inst)
    feasible = [frozenset(v for v in range(n) if m >> v & 1) for m in range(1 << n)]
    feasible = [s for s in feasible if inst.is_feasible(s)]
    assert all(forced <= s for s in feasible)
    alive = [v for v in range(n) if v not in forced]
    idx = {v: i for i, v in enumerate(alive)}
    for cover in O.minimal_covers(len(alive), [(idx[a], idx[b]) for a, b in aux.edges]):
        core = frozenset(alive[i] for i in cover)
        s = core | forced
        assert inst.is_feasible(s)
        assert minimal_by_definition(n, edges, lists, s, core)
        assert inst.is_minimal(s, skip=forced)
        assert not any(inst.is_feasible(s - {x}) for x in core)


def test_forced_pair_is_the_only_cover():
    inst = ListCoverInstance.build(G(2, [(0, 1)]), [{0, 1}, {0, 1}])
    assert mvc_to_vc(inst)[1] == {0, 1}
    assert mvc_bruteforce(inst) == {0, 1}
    assert not inst.is_minimal({0, 1})
    assert inst.is_minimal({0, 1}, skip={0, 1})
