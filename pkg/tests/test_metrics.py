"""Distances, eccentricities, layers, and the linear-time scheme."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moprc import (
    CanonicalMop,
    DomainError,
    Graph,
    NotMop,
    bfs,
    ecc_diam_rad_center,
    eta,
    fan,
    from_canonical,
    lad,
    layers,
    linear_eccentricities,
    random_mop_graph,
)

TRIANGLE = from_canonical(CanonicalMop(3))


def test_bfs_on_triangle():
    t = bfs(TRIANGLE, 1)
    assert t.dist == {1: 0, 2: 1, 3: 1}
    assert t.parent[1] is None
    assert t.path_to(3) == (1, 3)


def test_bfs_strip_and_hub():
    assert bfs(lad(3).graph, 1).dist[6] == 3
    hub_table = bfs(fan(7).graph, 8)
    assert set(hub_table.dist.values()) == {0, 1}


def test_bfs_rejects_bad_source_and_disconnected():
    with pytest.raises(DomainError):
        bfs(TRIANGLE, 9)
    with pytest.raises(DomainError):
        bfs(Graph(4, [(1, 2), (3, 4)]), 1)


def test_bfs_path_is_shortest():
    g = random_mop_graph(20, 8)
    t = bfs(g, 5)
    for v in g.vertices():
        p = t.path_to(v)
        assert p[0] == 5 and p[-1] == v
        assert len(p) - 1 == t.dist[v]
        assert all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


def test_global_metrics_on_families():
    assert ecc_diam_rad_center(lad(4).graph).diameter == 4
    s = ecc_diam_rad_center(fan(9).graph)
    assert (s.diameter, s.radius, s.center) == (2, 1, (10,))


def test_chordal_radius_diameter_sandwich():
    for n, seed in [(10, 1), (25, 5), (60, 2), (120, 3)]:
        s = ecc_diam_rad_center(random_mop_graph(n, seed))
        assert 2 * s.radius - 2 <= s.diameter <= 2 * s.radius
        assert all(s.radius <= e <= s.diameter for e in s.ecc.values())


def test_layers_partition():
    g = lad(3).graph
    assert layers(g, 1) == ((1,), (2, 3), (4, 5), (6,))
    assert layers(g, tuple(g.vertices())) == (tuple(g.vertices()),)
    f = fan(7).graph
    assert layers(f, 8) == ((8,), (1, 2, 3, 4, 5, 6, 7))
    with pytest.raises(DomainError):
        layers(g, ())


def test_every_mop_edge_lies_in_a_triangle():
    assert eta(TRIANGLE) == 3
    assert eta(fan(7).graph) == 3
    assert eta(random_mop_graph(50, 6)) == 3
    with pytest.raises(NotMop):
        eta(Graph(3, [(1, 2), (2, 3)]))


def test_linear_eccentricities_fixed_values():
    assert linear_eccentricities(TRIANGLE) == {1: 1, 2: 1, 3: 1}
    g = lad(5).graph
    assert linear_eccentricities(g) == ecc_diam_rad_center(g).ecc


def test_linear_eccentricities_match_oracle_large():
    g = random_mop_graph(200, 99)
    assert linear_eccentricities(g) == ecc_diam_rad_center(g).ecc


@given(st.integers(min_value=3, max_value=60), st.integers(min_value=0, max_value=2**63))
@settings(max_examples=60, deadline=None)
def test_linear_eccentricities_match_oracle(n, seed):
    g = random_mop_graph(n, seed)
    assert linear_eccentricities(g) == ecc_diam_rad_center(g).ecc


@given(st.integers(min_value=3, max_value=40), st.integers(min_value=0, max_value=2**63))
@settings(max_examples=40, deadline=None)
def test_distance_table_edge_invariant(n, seed):
    g = random_mop_graph(n, seed)
    t = bfs(g, 1)
    assert t.dist[1] == 0
    for u, v in g.edges:
        assert abs(t.dist[u] - t.dist[v]) <= 1
