from itertools import chain, combinations

import pytest
from hypothesis import given, settings

import oracles as O
from hedgecluster import (
    InputError,
    build,
    enumerate_triples,
    forced_closure,
    normalize,
    remove_hedges,
    structural_stats,
    validate_solution,
)
from hedgecluster.core import Solution, internal_p3_hedges
from instances import cover_gadget, domination_chain, k3_aab, k3_abc, p3_aa, p3_ab
from strategies import hedge_graphs


def ids(H, *tokens):
    return {H.hedge_id(t) for t in tokens}


# --- build -----------------------------------------------------------------

def test_build_two_hedge_path():
    H = p3_ab()
    assert (H.num_hedges, H.m) == (2, 2)
    assert H.hedge_names == {0: "A", 1: "B"}


def test_build_one_hedge_path():
    assert p3_aa().num_hedges == 1


def test_build_rejects_duplicate_edge_with_line():
    with pytest.raises(InputError) as exc:
        build(3, [(0, 1, "A"), (0, 1, "B")])
    assert exc.value.line == 2


@pytest.mark.parametrize("edges, line", [
    ([(0, 1, "A"), (2, 2, "B")], 2),
    ([(0, 5, "A")], 1),
    ([(0, 1, "A"), (1, 0, "A")], 2),
    ([(0, 1, "two words")], 1),
])
def test_build_errors_name_the_line(edges, line):
    with pytest.raises(InputError) as exc:
        build(3, edges)
    assert exc.value.line == line


def test_ids_follow_first_appearance():
    H = build(4, [(2, 3, "z"), (0, 1, "a"), (1, 2, "z")])
    assert H.hedge_id("z") == 0 and H.hedge_id("a") == 1


def test_equality_ignores_id_numbering():
    a = build(3, [(0, 1, "A"), (1, 2, "B")])
    b = build(3, [(1, 2, "B"), (0, 1, "A")])
    assert a == b and hash(a) == hash(b)
    assert a != build(3, [(0, 1, "B"), (1, 2, "A")])


@given(hedge_graphs())
def test_every_hedge_is_nonempty_and_covers_edges(H):
    assert set(H.edge_hedge.values()) == set(H.hedge_names)
    for U in ([], H.hedges[:1], H.hedges[::2]):
        R = remove_hedges(H, U)
        assert set(R.edge_hedge.values()) == set(R.hedge_names)
    N = normalize(H)
    assert set(N.edge_hedge.values()) == set(N.hedge_names)


# --- remove_hedges -------------------------------------------------------------

def test_remove_one_hedge_from_path():
    H = p3_ab()
    R = remove_hedges(H, ids(H, "A"))
    assert R.edges == ((1, 2),) and R.n == 3
    assert R.hedge_names == {1: "B"}


def test_remove_nothing_is_identity():
    H = p3_ab()
    assert remove_hedges(H, set()) == H


def test_remove_only_hedge_leaves_edgeless():
    R = remove_hedges(p3_aa(), {0})
    assert R.n == 3 and R.m == 0 and R.num_hedges == 0


def test_remove_unknown_hedge():
    with pytest.raises(InputError):
        remove_hedges(p3_ab(), {7})


# --- validate_solution ---------------------------------------------------------

def test_validate_examples():
    H = p3_ab()
    assert validate_solution(H, ids(H, "A")).valid
    v = validate_solution(H, set())
    assert not v.valid and v.witness == (0, 1, 2)


def test_validate_cover_gadget_with_cover_hedges():
    H = cover_gadget()
    assert validate_solution(H, ids(H, "E2", "E3", "E4")).valid
    assert not validate_solution(H, ids(H, "E2", "E3")).valid


def test_validate_unknown_hedge():
    with pytest.raises(InputError):
        validate_solution(p3_ab(), {5})


def test_solution_from_another_graph_is_rejected():
    sol = Solution.of(p3_ab(), {0})
    with pytest.raises(InputError):
        validate_solution(cover_gadget(), sol)


@settings(max_examples=300)
@given(hedge_graphs(max_n=9, max_hedges=5))
def test_validate_matches_triple_scan(H):
    for U in chain.from_iterable(combinations(H.hedges, k) for k in range(len(H.hedges) + 1)):
        v = validate_solution(H, U)
        residual = O.residual_edges(H, set(U))
        p3s = O.naive_p3s(H.n, residual)
        assert v.valid == (not p3s)
        assert v.valid == (v.witness is None)
        if p3s:
            assert v.witness == min(p3s, key=lambda t: (t[0], t[1], t[2]))


# --- enumerate_triples -----------------------------------------------------------

def test_catalog_internal_path():
    cat = enumerate_triples(p3_aa())
    assert len(cat.p3s) == 1 and cat.p3s[0].kind == "internal" and not cat.k3s


def test_catalog_doubled_triangle():
    H = k3_aab()
    cat = enumerate_triples(H)
    assert not cat.p3s and len(cat.k3s) == 1
    t = cat.k3s[0]
    assert t.multiplicity == 2 and t.doubled == H.hedge_id("A") and t.single == H.hedge_id("B")


def test_catalog_domination_chain():
    H = domination_chain()
    cat = enumerate_triples(H)
    assert len(cat.simple_p3s) == 2 and not cat.internal_p3s
    assert len(cat.k3s) == 5 and all(t.multiplicity == 2 for t in cat.k3s)
    pairs = {tuple(sorted(H.token(h) for h in p.hedges)) for p in cat.p3s}
    assert pairs == {("x2", "z1"), ("x5", "y2")}


@settings(max_examples=300)
@given(hedge_graphs(max_n=9))
def test_catalog_matches_naive_scan(H):
    E = O.raw_edges(H)
    cat = enumerate_triples(H)
    assert [(p.a, p.b, p.c) for p in cat.p3s] == O.naive_p3s(H.n, set(E))
    assert [(t.a, t.b, t.c) for t in cat.k3s] == O.naive_triangles(H.n, set(E))
    for p in cat.p3s:
        assert (p.a, p.c) not in E
        assert p.hedges == (E[(min(p.a, p.b), max(p.a, p.b))], E[(min(p.b, p.c), max(p.b, p.c))])
        assert p.internal == (p.hedges[0] == p.hedges[1])
    for t in cat.k3s:
        hs = (E[(t.a, t.b)], E[(t.a, t.c)], E[(t.b, t.c)])
        assert t.hedges == hs and t.multiplicity == len(set(hs))


# --- normalize ---------------------------------------------------------------

def test_normalize_drops_small_components():
    N = normalize(build(3, [(0, 1, "A")]))
    assert N.n == 0 and N.num_hedges == 0


def test_normalize_single_triangle_is_identity():
    H = k3_abc()
    assert normalize(H) == H


def test_normalize_copies_shared_edge():
    # edge {0,1} in A lies in triangles 012 and 013
    H = build(4, [(0, 1, "A"), (0, 2, "B"), (1, 2, "C"), (0, 3, "D"), (1, 3, "E")])
    N = normalize(H)
    a = H.hedge_id("A")
    assert N.n % 3 == 0
    comps_with_a = {u // 3 for (u, v), h in N.edge_hedge.items() if h == a}
    triangles = [t for t in enumerate_triples(N).k3s]
    assert len(comps_with_a) >= 2
    assert sum(a in t.hedges for t in triangles) == 2
    assert set(O.valid_solutions(H)) == set(O.valid_solutions(N))


@settings(max_examples=200)
@given(hedge_graphs(max_n=8, max_hedges=6))
def test_normalize_preserves_solutions(H):
    N = normalize(H)
    for u, v in N.edges:
        assert u // 3 == v // 3
    surviving = set(N.hedge_names)
    full = {U & surviving for U in O.valid_solutions(H)}
    assert full == set(O.valid_solutions(N))


# --- forced_closure ----------------------------------------------------------------

def test_forced_internal_path():
    assert forced_closure(p3_aa()) == {0}


def test_forced_doubled_triangle_alone():
    assert forced_closure(k3_aab()) == set()


def test_forced_chain_through_triangle():
    # triangle A,A,B; B also spans the internal path 3-4-5
    H = build(6, [(0, 1, "A"), (0, 2, "A"), (1, 2, "B"), (3, 4, "B"), (4, 5, "B")])
    assert internal_p3_hedges(H) == ids(H, "B")
    assert forced_closure(H) == ids(H, "A", "B")
    for U in O.valid_solutions(H):
        assert ids(H, "A", "B") <= U


@settings(max_examples=300)
@given(hedge_graphs(max_n=8, max_hedges=6))
def test_forced_hedges_lie_in_every_solution(H):
    Z = forced_closure(H)
    for U in O.valid_solutions(H):
        assert Z <= U


# --- structural_stats ---------------------------------------------------------

def test_stats_three_hedge_triangle():
    rep = structural_stats(k3_abc())
    assert not rep.bihedge and rep.delta_max == 1
    assert rep.offending_triangle is not None


def test_stats_domination_chain_exceeds_small_cap():
    rep = structural_stats(domination_chain(), 2)
    assert rep.bihedge and rep.exceeds_cap and len(rep.packing) == 3


def test_stats_star():
    star = build(4, [(0, 1, "a"), (0, 2, "b"), (0, 3, "c")])
    assert structural_stats(star).delta_max == 1


def test_stats_rejects_negative_cap():
    with pytest.raises(InputError):
        structural_stats(p3_ab(), -1)


def packing_number_brute(H):
    E = O.raw_edges(H)
    triples = [t for t in combinations(range(H.n), 3)
               if sum(p in E for p in combinations(t, 2)) >= 2]
    best = 0

    def rec(i, used, k):
        nonlocal best
        best = max(best, k)
        for j in range(i, len(triples)):
            if not used & set(triples[j]):
                rec(j + 1, used | set(triples[j]), k + 1)

    rec(0, set(), 0)
    return best


@settings(max_examples=150)
@given(hedge_graphs(max_n=9, max_hedges=3))
def test_packing_number_matches_exhaustive(H):
    rep = structural_stats(H, delta_cap=3)
    true = packing_number_brute(H)
    if true <= 3:
        assert rep.delta_max == true
    else:
        assert rep.exceeds_cap
    used = [v for t in rep.packing for v in t]
    assert len(used) == len(set(used))
