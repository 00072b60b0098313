"""Exhaustive verification oracles for rainbow connectivity.

Everything here is independent of the constructive algorithms: these
routines work on arbitrary connected graphs and edge colorings, use
plain state-space search, and are meant as ground truth for tests and
for the CLI `verify` / `rc` commands. The exact solvers never reuse a
coloring produced elsewhere in the package; certificates come out of
their own search.

A path is rainbow when its edges carry pairwise distinct colors. A
coloring is rainbow connected when every vertex pair is joined by a
rainbow path, and strongly rainbow connected when every pair is joined
by a rainbow shortest path.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import EdgeColoring, Graph, edge
from .errors import DomainError, NotACut, ScaleLimit
from .metrics import bfs, ecc_diam_rad_center

_DEFAULT_MAX_N = 200
_DEFAULT_MAX_COLORS = 32


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of a rainbow-connectivity check.

    counterexample is the lexicographically first pair with no
    qualifying rainbow path, or None when the property holds.
    """

    ok: bool
    counterexample: tuple[int, int] | None
    pairs_checked: int


def _prepare(g: Graph, coloring: EdgeColoring, max_n: int, max_colors: int):
    """Bit-encode colors and build (neighbor, bit) adjacency."""
    coloring.check_total(g)
    if g.n > max_n:
        raise ScaleLimit(f"n={g.n} exceeds cap {max_n}; raise max_n to override")
    distinct = sorted(coloring.used)
    if len(distinct) > max_colors:
        raise ScaleLimit(
            f"{len(distinct)} colors exceed cap {max_colors}; raise max_colors to override"
        )
    bit = {c: 1 << i for i, c in enumerate(distinct)}
    tmp: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices()}
    for (u, v), c in coloring.colors.items():
        b = bit[c]
        tmp[u].append((v, b))
        tmp[v].append((u, b))
    adj: list[tuple[tuple[int, int], ...]] = [()] * (g.n + 1)
    for v in g.vertices():
        adj[v] = tuple(sorted(tmp[v]))
    return adj, len(distinct)


def _reach(adj, n: int, source: int, targets, max_len: int, level=None):
    """Vertices from `targets` reachable by a rainbow path from source.

    States are (vertex, color mask); per-vertex mask antichains prune
    dominated states (a superset mask reached no sooner is useless).
    With `level` set, only level-increasing edges are expanded, which
    restricts the search to shortest paths from the source.
    """
    remaining = set(targets)
    remaining.discard(source)
    found = set(targets) - remaining
    if not remaining:
        return found
    best: list[list[int]] = [[] for _ in range(n + 1)]
    best[source].append(0)
    frontier: list[tuple[int, int]] = [(source, 0)]
    for _ in range(max_len):
        nxt: list[tuple[int, int]] = []
        for v, mask in frontier:
            lv = level[v] + 1 if level is not None else 0
            for w, b in adj[v]:
                if mask & b:
                    continue
                if level is not None and level[w] != lv:
                    continue
                nm = mask | b
                bw = best[w]
                dominated = False
                for old in bw:
                    if old & nm == old:
                        dominated = True
                        break
                if dominated:
                    continue
                bw.append(nm)
                nxt.append((w, nm))
                if w in remaining:
                    remaining.discard(w)
                    found.add(w)
                    if not remaining:
                        return found
        if not nxt:
            break
        frontier = nxt
    return found


def is_rainbow_connected(
    g: Graph,
    coloring: EdgeColoring,
    *,
    max_n: int = _DEFAULT_MAX_N,
    max_colors: int = _DEFAULT_MAX_COLORS,
) -> VerifyResult:
    """Exhaustively check that every pair has a rainbow path."""
    adj, k = _prepare(g, coloring, max_n, max_colors)
    max_len = min(g.n - 1, k)
    pairs = 0
    for u in range(1, g.n):
        targets = range(u + 1, g.n + 1)
        pairs += g.n - u
        got = _reach(adj, g.n, u, targets, max_len)
        if len(got) != g.n - u:
            v = min(set(targets) - got)
            return VerifyResult(False, (u, v), pairs)
    return VerifyResult(True, None, pairs)


def is_strong_rainbow_connected(
    g: Graph,
    coloring: EdgeColoring,
    *,
    max_n: int = _DEFAULT_MAX_N,
    max_colors: int = _DEFAULT_MAX_COLORS,
) -> VerifyResult:
    """Exhaustively check that every pair has a rainbow shortest path."""
    adj, _ = _prepare(g, coloring, max_n, max_colors)
    pairs = 0
    for u in range(1, g.n):
        level = bfs(g, u).dist
        targets = range(u + 1, g.n + 1)
        pairs += g.n - u
        got = _reach(adj, g.n, u, targets, g.n - 1, level=level)
        if len(got) != g.n - u:
            v = min(set(targets) - got)
            return VerifyResult(False, (u, v), pairs)
    return VerifyResult(True, None, pairs)


def rainbow_witness(
    g: Graph,
    coloring: EdgeColoring,
    u: int,
    v: int,
    *,
    strong: bool = False,
    max_n: int = _DEFAULT_MAX_N,
    max_colors: int = _DEFAULT_MAX_COLORS,
) -> tuple[int, ...] | None:
    """An actual rainbow path u..v (shortest when strong), or None."""
    if not (1 <= u <= g.n and 1 <= v <= g.n) or u == v:
        raise DomainError(f"need two distinct vertices in 1..{g.n}")
    adj, k = _prepare(g, coloring, max_n, max_colors)
    level = bfs(g, u).dist if strong else None
    parent: dict[tuple[int, int], tuple[int, int] | None] = {(u, 0): None}
    best: list[list[int]] = [[] for _ in range(g.n + 1)]
    best[u].append(0)
    frontier = [(u, 0)]
    max_len = g.n - 1 if strong else min(g.n - 1, k)
    for _ in range(max_len):
        nxt = []
        for x, mask in frontier:
            lv = level[x] + 1 if level is not None else 0
            for w, b in adj[x]:
                if mask & b:
                    continue
                if level is not None and level[w] != lv:
                    continue
                nm = mask | b
                bw = best[w]
                if any(old & nm == old for old in bw):
                    continue
                bw.append(nm)
                parent[(w, nm)] = (x, mask)
                if w == v:
                    out = [w]
                    state = (x, mask)
                    while state is not None:
                        out.append(state[0])
                        state = parent[state]
                    return tuple(reversed(out))
                nxt.append((w, nm))
        if not nxt:
            break
        frontier = nxt
    return None


@dataclass(frozen=True)
class ExactResult:
    """Minimum number of colors plus a certificate coloring.

    infeasible_below: every smaller palette size is impossible, by the
    diameter lower bound together with the exhausted sizes listed in
    ruled_out (the sizes the search actually tried and refuted).
    """

    value: int
    certificate: EdgeColoring
    infeasible_below: int
    ruled_out: tuple[int, ...]


def _pair_possible(adj_idx, colors, u, v, k, level=None) -> bool:
    """Optimistic reachability under a partial coloring.

    Unassigned edges act as wildcards (a fresh color each); assigned
    edges consume their color bit. If even this relaxation cannot join
    u and v within k steps (on shortest paths when level is given),
    no completion of the partial coloring can.
    """
    best: dict[int, list[int]] = {u: [0]}
    frontier = [(u, 0)]
    steps = 0
    while frontier and steps < k:
        steps += 1
        nxt = []
        for x, mask in frontier:
            lv = level[x] + 1 if level is not None else 0
            for w, ei in adj_idx[x]:
                if level is not None and level[w] != lv:
                    continue
                c = colors[ei]
                if c:
                    b = 1 << c
                    if mask & b:
                        continue
                    nm = mask | b
                else:
                    nm = mask
                bw = best.setdefault(w, [])
                if any(old & nm == old for old in bw):
                    continue
                if w == v:
                    return True
                bw.append(nm)
                nxt.append((w, nm))
        frontier = nxt
    return False


def _full_check(adj_idx, n, colors, k, strong_levels=None):
    """First failing pair under a total assignment, or None if valid."""
    for u in range(1, n):
        level = strong_levels[u] if strong_levels is not None else None
        for v in range(u + 1, n + 1):
            if not _pair_possible(adj_idx, colors, u, v, k, level):
                return (u, v)
    return None


def _search_k(g: Graph, edges_sorted, k: int, strong: bool, deadline) -> EdgeColoring | None:
    """Find any valid k-coloring, or prove there is none.

    DFS in lexicographic edge order with the restricted-growth rule:
    color i may be used only if some earlier edge used color i-1, which
    kills color-permutation symmetry. Recently failing pairs are
    re-checked first (against the wildcard relaxation) to prune early.
    """
    m = len(edges_sorted)
    adj_idx: list[tuple[tuple[int, int], ...]] = [()] * (g.n + 1)
    tmp: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices()}
    for i, (a, b) in enumerate(edges_sorted):
        tmp[a].append((b, i))
        tmp[b].append((a, i))
    for v in g.vertices():
        adj_idx[v] = tuple(sorted(tmp[v]))
    strong_levels = None
    if strong:
        strong_levels = {u: bfs(g, u).dist for u in range(1, g.n + 1)}
    colors = [0] * m
    watched: list[tuple[int, int]] = []
    ticks = 0

    def watched_ok() -> bool:
        for (u, v) in watched:
            level = strong_levels[u] if strong_levels is not None else None
            if not _pair_possible(adj_idx, colors, u, v, k, level):
                return False
        return True

    def dfs(idx: int, max_used: int) -> bool:
        nonlocal ticks
        ticks += 1
        if deadline is not None and ticks % 256 == 0 and time.monotonic() > deadline:
            raise ScaleLimit("exact search timed out")
        if idx == m:
            bad = _full_check(adj_idx, g.n, colors, k, strong_levels)
            if bad is None:
                return True
            if bad not in watched:
                watched.insert(0, bad)
                del watched[8:]
            return False
        for c in range(1, min(max_used + 1, k) + 1):
            colors[idx] = c
            if watched_ok():
                if dfs(idx + 1, max(max_used, c)):
                    return True
            colors[idx] = 0
        return False

    if dfs(0, 0):
        return EdgeColoring({e: colors[i] for i, e in enumerate(edges_sorted)})
    return None


def _exact(g: Graph, strong: bool, max_edges: int, max_n: int, timeout_s) -> ExactResult:
    if g.n < 2:
        raise DomainError("need at least two vertices")
    if g.n > max_n or g.m > max_edges:
        raise ScaleLimit(
            f"exact search capped at n<={max_n}, m<={max_edges}; got n={g.n}, m={g.m}"
        )
    summary = ecc_diam_rad_center(g)  # also proves connectivity
    deadline = time.monotonic() + timeout_s if timeout_s is not None else None
    ruled: list[int] = []
    for k in range(summary.diameter, g.m + 1):
        cert = _search_k(g, sorted(g.edges), k, strong, deadline)
        if cert is not None:
            return ExactResult(k, cert, k - 1, tuple(ruled))
        ruled.append(k)
    raise AssertionError("all-distinct coloring must be feasible")


def exact_rc(
    g: Graph,
    *,
    max_edges: int = 25,
    max_n: int = 40,
    timeout_s: float | None = None,
) -> ExactResult:
    """Minimum colors for rainbow connectivity, by exhaustive search.

    Palette sizes are tried in ascending order from the diameter (no
    coloring below the diameter can work, since some pair needs that
    many edges on any joining path). Single-threaded and deliberately
    independent of the constructive coloring algorithms.
    """
    return _exact(g, False, max_edges, max_n, timeout_s)


def exact_src(
    g: Graph,
    *,
    max_edges: int = 25,
    max_n: int = 40,
    timeout_s: float | None = None,
) -> ExactResult:
    """Minimum colors for strong rainbow connectivity, exhaustively."""
    return _exact(g, True, max_edges, max_n, timeout_s)


def _components_without(g: Graph, removed: frozenset[tuple[int, int]]) -> dict[int, int]:
    """Component label per vertex after deleting the given edges."""
    comp: dict[int, int] = {}
    label = 0
    for s in g.vertices():
        if s in comp:
            continue
        label += 1
        stack = [s]
        comp[s] = label
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if edge(u, v) in removed or u in comp:
                    continue
                comp[u] = label
                stack.append(u)
    return comp


def enumerate_small_edge_cuts(
    g: Graph, *, max_size: int = 3, max_n: int = 60
) -> tuple[frozenset[tuple[int, int]], ...]:
    """All minimal edge cuts with at most max_size edges.

    Brute force over edge subsets in increasing size; a candidate that
    contains an already-found cut is not minimal and is dropped.
    """
    if g.n > max_n:
        raise ScaleLimit(f"n={g.n} exceeds cap {max_n}")
    if max_size < 1:
        raise DomainError("max_size must be at least 1")
    from itertools import combinations

    found: list[frozenset[tuple[int, int]]] = []
    all_edges = sorted(g.edges)
    for size in range(1, max_size + 1):
        for combo in combinations(all_edges, size):
            cand = frozenset(combo)
            if any(prev < cand for prev in found):
                continue
            comp = _components_without(g, cand)
            if len(set(comp.values())) > 1:
                found.append(cand)
    return tuple(sorted(found, key=sorted))


def disjoint_cut_property(
    g: Graph,
    coloring: EdgeColoring,
    s1: frozenset[tuple[int, int]],
    s2: frozenset[tuple[int, int]],
) -> bool:
    """Check the two-cut color condition for a rainbow-connected coloring.

    For disjoint edge cuts s1, s2 that both separate some common vertex
    pair, any joining path crosses both cuts, so a rainbow-connected
    coloring must put at least two colors on s1 union s2. Returns True
    when the condition holds (vacuously if no pair is split by both).
    Raises NotACut when either set fails to disconnect the graph.
    """
    coloring.check_total(g)
    s1 = frozenset(edge(u, v) for u, v in s1)
    s2 = frozenset(edge(u, v) for u, v in s2)
    for s in (s1, s2):
        bad = s - g.edges
        if bad:
            raise DomainError(f"not edges of the graph: {sorted(bad)}")
    if s1 & s2:
        raise DomainError("cuts must be edge-disjoint")
    comps = []
    for s in (s1, s2):
        comp = _components_without(g, s)
        if len(set(comp.values())) < 2:
            raise NotACut(f"removing {sorted(s)} leaves the graph connected")
        comps.append(comp)
    c1, c2 = comps
    crossing = any(
        c1[u] != c1[v] and c2[u] != c2[v]
        for u in g.vertices()
        for v in range(u + 1, g.n + 1)
    )
    if not crossing:
        return True
    seen = {coloring.colors[e] for e in (s1 | s2)}
    return len(seen) >= 2
