"""Elimination orderings, maximal fans, and cut-spine construction."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moprc import (
    CanonicalMop,
    Graph,
    NotChordal,
    build_ccs,
    chordal_peo,
    edge,
    fan,
    from_canonical,
    lad,
    maximal_fans,
    mcs,
    random_mop_graph,
    realize_paths,
    triangles,
)
from moprc.spine import _realize_with_stats

from conftest import is_vertex_pair_cut

K3 = Graph(3, [(1, 2), (1, 3), (2, 3)])
C4 = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
SUN6 = from_canonical(CanonicalMop(6, {4: 1, 5: 2, 6: 1}, {4: 2, 5: 3, 6: 3}))


def test_mcs_base_case_and_determinism():
    assert mcs(K3) == (1, 2, 3)
    g = random_mop_graph(20, 5)
    assert mcs(g) == mcs(g)


def test_elimination_ordering_verified_independently():
    for g in (fan(5).graph, lad(4).graph, random_mop_graph(30, 11)):
        order = chordal_peo(g)
        assert sorted(order) == list(g.vertices())
        pos = {v: i for i, v in enumerate(order)}
        for v in order:
            later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
            assert all(
                g.has_edge(a, b) for i, a in enumerate(later) for b in later[i + 1 :]
            )


def test_four_cycle_is_not_chordal():
    with pytest.raises(NotChordal):
        chordal_peo(C4)


def test_maximal_fans():
    assert maximal_fans(K3) == ((1, frozenset({1, 2, 3})),)
    hub_fans = maximal_fans(fan(7).graph)
    assert hub_fans == ((8, frozenset(range(1, 9))),)
    # Strip: every triangle lies inside some retained fan.
    g = lad(3).graph
    fans = maximal_fans(g)
    covered = set()
    for center, closed in fans:
        for t in triangles(g):
            if center in t and t <= closed:
                covered.add(t)
    assert covered == set(triangles(g))


def test_spine_of_strip_length_three():
    g = lad(3).graph
    s = build_ccs(g)
    assert s.root_vertex == 2
    assert s.radius == 2 and not s.degenerate_radius
    assert s.layers == ((2,), (1, 3, 4), (5, 6))
    kinds = [(nd.kind, nd.realization, nd.level) for nd in s.nodes]
    assert kinds == [("root", (2,), 0), ("green", (3, 4), 1)]
    (leaf,) = s.leaves()
    assert realize_paths(g, s, leaf) == ((2, 3), (2, 4))


def test_spine_of_strip_length_four():
    s = build_ccs(lad(4).graph)
    assert s.root_vertex == 4
    kinds = [(nd.kind, nd.realization, nd.level) for nd in s.nodes]
    assert kinds == [
        ("root", (4,), 0),
        ("green", (2, 3), 1),
        ("green", (5, 6), 1),
    ]
    assert all(s.parent[nd] == s.root for nd in s.nodes[1:])


def test_spine_of_sun():
    s = build_ccs(SUN6)
    assert s.root_vertex == 4
    kinds = [(nd.kind, nd.realization, nd.level) for nd in s.nodes]
    assert kinds == [("root", (4,), 0), ("green", (1, 2), 1)]


def test_degenerate_spine_for_hub_graphs():
    s = build_ccs(fan(9).graph)
    assert s.degenerate_radius
    assert s.nodes == (s.root,)
    assert realize_paths(fan(9).graph, s, s.root) == ((10,), (10,))


def test_spine_invariants_on_corpus():
    for n, seed in [(12, 0), (20, 3), (40, 8), (60, 21)]:
        g = random_mop_graph(n, seed)
        s = build_ccs(g)
        if s.degenerate_radius:
            continue
        for nd in s.nodes[1:]:
            par = s.parent[nd]
            assert par.level < nd.level
            if nd.kind == "green":
                a, b = nd.realization
                assert g.has_edge(a, b)
                assert is_vertex_pair_cut(g, a, b)
            chain = s.ancestors(nd)
            assert chain[0] == s.root and chain[-1] == nd


def test_trees_are_identical_across_runs():
    g = random_mop_graph(35, 14)
    s1, s2 = build_ccs(g), build_ccs(g)
    assert s1.nodes == s2.nodes
    assert s1.parent == s2.parent
    assert s1.layers == s2.layers


def test_realized_paths_are_edge_disjoint_with_length_contracts():
    for n, seed in [(15, 2), (30, 9), (45, 17), (60, 33)]:
        g = random_mop_graph(n, seed)
        s = build_ccs(g)
        if s.degenerate_radius:
            continue
        for nd in s.nodes[1:]:
            short, long_, repairs = _realize_with_stats(g, s, nd)
            se = {edge(short[i], short[i + 1]) for i in range(len(short) - 1)}
            le = {edge(long_[i], long_[i + 1]) for i in range(len(long_) - 1)}
            assert not se & le
            assert short[0] == long_[0] == s.root_vertex
            assert len(short) - 1 <= s.radius - 1
            assert len(long_) - 1 <= 2 * (s.radius - 1) + repairs
            assert len(long_) - 1 <= 2 * s.radius - 2


@given(st.integers(min_value=5, max_value=40), st.integers(min_value=0, max_value=2**63))
@settings(max_examples=40, deadline=None)
def test_realized_paths_edge_disjoint_property(n, seed):
    g = random_mop_graph(n, seed)
    s = build_ccs(g)
    if s.degenerate_radius:
        return
    for leaf in s.leaves():
        short, long_ = realize_paths(g, s, leaf)
        se = {edge(short[i], short[i + 1]) for i in range(len(short) - 1)}
        le = {edge(long_[i], long_[i + 1]) for i in range(len(long_) - 1)}
        assert not se & le
