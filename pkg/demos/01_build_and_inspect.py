"""Build a maximal outerplanar graph three ways and inspect it.

Run:  python3 demos/01_build_and_inspect.py
"""

from moprc import (
    CanonicalMop,
    Graph,
    ecc_diam_rad_center,
    from_canonical,
    hamiltonian_cycle,
    layers,
    mop_from_edges,
    to_canonical,
    triangles,
    validate_mop,
)

# 1. From a construction order: vertex i lands on exterior edge (low, high).
canon = CanonicalMop(7, {4: 1, 5: 3, 6: 4, 7: 5}, {4: 3, 5: 4, 6: 5, 7: 6})
g = from_canonical(canon)
print(f"construction order -> {g!r}")
print(f"  hamiltonian cycle: {g.ham_cycle}")
print(f"  triangles ({len(triangles(g))}):")
for t in triangles(g):
    print(f"    {tuple(sorted(t))}")

# 2. From a bare edge list: the unique cycle is rederived and checked.
g2 = mop_from_edges(g.n, sorted(g.edges))
print(f"edge list -> same cycle: {hamiltonian_cycle(g2) == g.ham_cycle}")

# 3. Validation catches non-examples with a reason, not just a verdict.
square = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
report = validate_mop(square)
print(f"4-cycle valid? {report.ok}")
for reason in report.violations:
    print(f"  violation: {reason}")

# Metric summary and distance layers around a most-central vertex.
summary = ecc_diam_rad_center(g)
print(f"diameter {summary.diameter}, radius {summary.radius}, center {summary.center}")
root = summary.center[0]
for depth, band in enumerate(layers(g, root)):
    print(f"  distance {depth} from {root}: {band}")

# Round trip back to the construction order.
again, relabel = to_canonical(g)
print(f"round trip equal: {again == canon} (relabelling {relabel})")
