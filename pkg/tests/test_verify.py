"""Brute-force oracles: connectivity checks, exact values, cuts."""

import pytest

from moprc import (
    DomainError,
    EdgeColoring,
    Graph,
    NotACut,
    ScaleLimit,
    disjoint_cut_property,
    edge,
    enumerate_small_edge_cuts,
    exact_rc,
    exact_src,
    fan,
    is_rainbow_connected,
    is_strong_rainbow_connected,
    lad,
    rainbow_coloring,
    rainbow_witness,
    random_mop_graph,
)
from moprc._rng import SplitMix64

from conftest import independent_rainbow_ok

K3 = Graph(3, [(1, 2), (1, 3), (2, 3)])
P3 = Graph(3, [(1, 2), (2, 3)])
P3_MONO = EdgeColoring({(1, 2): 1, (2, 3): 1})


def cycle(n: int) -> Graph:
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def test_single_color_triangle_is_connected():
    res = is_rainbow_connected(K3, EdgeColoring({e: 1 for e in K3.edges}))
    assert res.ok and res.counterexample is None
    assert res.pairs_checked == 3


def test_monochromatic_path_fails_with_counterexample():
    res = is_rainbow_connected(P3, P3_MONO)
    assert not res.ok
    assert res.counterexample == (1, 3)


def test_family_colorings_pass():
    inst = lad(4)
    assert is_rainbow_connected(inst.graph, inst.coloring).ok
    assert is_strong_rainbow_connected(inst.graph, inst.coloring).ok


def test_complete_graph_single_color_is_strongly_connected():
    k5 = Graph(5, [(u, v) for u in range(1, 6) for v in range(u + 1, 6)])
    res = is_strong_rainbow_connected(k5, EdgeColoring({e: 1 for e in k5.edges}))
    assert res.ok


def test_strong_check_distinguishes_shortest_paths():
    # Spokes carry distinct colors except the two end spokes, which
    # share color 1. The path ends' unique geodesic runs through the
    # hub on those two spokes, so the strong check fails exactly there;
    # a one-step detour (end, neighbor, hub, other end) is still
    # rainbow, so the plain check passes.
    g = fan(7).graph
    hub = 8
    colors = {edge(j, hub): j for j in range(1, 8)}
    colors[edge(7, hub)] = 1
    for j in range(1, 7):
        colors[edge(j, j + 1)] = 7
    tweaked = EdgeColoring(colors)
    assert is_rainbow_connected(g, tweaked).ok
    res = is_strong_rainbow_connected(g, tweaked)
    assert not res.ok
    assert res.counterexample == (1, 7)


def test_verdicts_match_independent_path_enumeration():
    # Deliberately tiny palettes so both verdicts occur.
    rng = SplitMix64(2024)
    checked_fail = checked_ok = 0
    for n in (5, 6, 7, 8):
        for trial in range(6):
            g = random_mop_graph(n, 400 + 10 * n + trial)
            k = 2 + rng.below(3)
            colors = {e: 1 + rng.below(k) for e in sorted(g.edges)}
            res = is_rainbow_connected(g, EdgeColoring(colors))
            expect = independent_rainbow_ok(g, colors)
            if expect is None:
                checked_ok += 1
                assert res.ok, (n, trial, colors)
            else:
                checked_fail += 1
                assert not res.ok, (n, trial, colors)
    assert checked_ok and checked_fail


def test_scale_caps_raise():
    g = random_mop_graph(10, 1)
    mono = EdgeColoring({e: 1 for e in g.edges})
    with pytest.raises(ScaleLimit):
        is_rainbow_connected(g, mono, max_n=5)
    rainbow = EdgeColoring({e: i + 1 for i, e in enumerate(sorted(g.edges))})
    with pytest.raises(ScaleLimit):
        is_rainbow_connected(g, rainbow, max_colors=4)


def test_witness_path_revalidates():
    inst = lad(4)
    w = rainbow_witness(inst.graph, inst.coloring, 1, 8, strong=True)
    assert w == (1, 2, 4, 6, 8)
    cols = [inst.coloring.color(w[i], w[i + 1]) for i in range(len(w) - 1)]
    assert len(cols) == len(set(cols))
    assert rainbow_witness(P3, P3_MONO, 1, 3) is None
    with pytest.raises(DomainError):
        rainbow_witness(P3, P3_MONO, 1, 1)


def test_exact_values_on_small_graphs():
    assert exact_rc(K3).value == 1
    assert exact_rc(cycle(4)).value == 2
    assert exact_rc(cycle(5)).value == 3
    assert exact_rc(Graph(4, [(1, 2), (2, 3), (3, 4)])).value == 3
    assert exact_rc(fan(7).graph).value == 3
    assert exact_src(cycle(4)).value == 2
    assert exact_src(lad(3).graph).value == 3


def test_exact_result_certificate_and_bounds():
    g = cycle(6)
    res = exact_rc(g)
    assert res.value == 3
    assert len(res.certificate.used) == res.value
    assert is_rainbow_connected(g, res.certificate).ok
    assert res.infeasible_below == res.value - 1
    assert res.ruled_out == ()  # diameter 3 = answer: nothing tried below
    path = Graph(4, [(1, 2), (2, 3), (3, 4)])
    assert exact_rc(path).ruled_out == ()
    star = Graph(5, [(1, 5), (2, 5), (3, 5), (4, 5)])
    res = exact_rc(star)
    assert res.value == 4
    assert res.ruled_out == (2, 3)


def test_exact_search_respects_caps():
    with pytest.raises(ScaleLimit):
        exact_rc(random_mop_graph(30, 1))
    with pytest.raises(ScaleLimit):
        # The two-color attempt on a wide fan burns well past the
        # deadline check interval before it can be refuted.
        exact_rc(fan(10).graph, timeout_s=0.0)


def test_small_cut_enumeration():
    path = Graph(4, [(1, 2), (2, 3), (3, 4)])
    singles = enumerate_small_edge_cuts(path, max_size=1)
    assert {frozenset({e}) for e in path.edges} == set(singles)
    k3_cuts = enumerate_small_edge_cuts(K3, max_size=2)
    assert all(len(c) == 2 for c in k3_cuts)
    assert len(k3_cuts) == 3
    strip_cuts = enumerate_small_edge_cuts(lad(3).graph, max_size=3)
    assert frozenset({(2, 4), (3, 4), (3, 5)}) in strip_cuts
    for a in strip_cuts:
        for b in strip_cuts:
            assert not (a < b), "cuts must be minimal"
    with pytest.raises(ScaleLimit):
        enumerate_small_edge_cuts(random_mop_graph(61, 1))


def test_disjoint_cut_colors():
    g = lad(4).graph
    coloring, _ = rainbow_coloring(g)
    cuts = [c for c in enumerate_small_edge_cuts(g, max_size=2) if len(c) == 2]
    s1, s2 = cuts[0], cuts[1]
    assert disjoint_cut_property(g, coloring, s1, s2)
    with pytest.raises(DomainError):
        disjoint_cut_property(g, coloring, s1, s1)
    with pytest.raises(NotACut):
        disjoint_cut_property(g, coloring, s1, frozenset({(2, 3)}))
    # The two path ends of a fan cross both corner cuts, and the hand
    # coloring places two colors on the union.
    f = fan(7)
    f_cuts = [c for c in enumerate_small_edge_cuts(f.graph, max_size=2) if len(c) == 2]
    assert disjoint_cut_property(f.graph, f.coloring, f_cuts[0], f_cuts[1])


def test_exact_value_dominates_diameter_on_small_mops():
    from moprc import ecc_diam_rad_center

    for n in range(4, 9):
        g = random_mop_graph(n, 77 + n)
        s = ecc_diam_rad_center(g)
        res = exact_rc(g)
        assert s.diameter <= res.value <= g.m
        assert res.value <= 3 * s.radius
