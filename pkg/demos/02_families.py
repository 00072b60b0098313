"""The built-in graph families and their ready-made colorings.

fan(n)      -- a path joined to one hub vertex; radius 1.
lad(d)      -- the smallest MOP with diameter d (a triangle strip).
lad_plus(d) -- the strip plus one extra triangle at the far end; same
               diameter, one more vertex.

Each family instance ships a coloring whose size matches the family's
known rainbow connection number, and the exhaustive checker agrees.

Run:  python3 demos/02_families.py
"""

from moprc import (
    ecc_diam_rad_center,
    exact_rc,
    fan,
    is_rainbow_connected,
    is_strong_rainbow_connected,
    lad,
    lad_plus,
)

print("fans: claimed rainbow connection number vs exhaustive search")
for n in range(2, 9):
    inst = fan(n)
    found = exact_rc(inst.graph).value
    ok = is_rainbow_connected(inst.graph, inst.coloring).ok
    print(
        f"  fan({n}): {inst.graph.n} vertices, claimed {inst.claimed_rc}, "
        f"exact {found}, shipped coloring ok={ok}"
    )

print()
print("strips: diameter d, d colors, and the coloring is even strong")
for d in range(2, 7):
    for inst in (lad(d), lad_plus(d)):
        summary = ecc_diam_rad_center(inst.graph)
        strong = is_strong_rainbow_connected(inst.graph, inst.coloring).ok
        print(
            f"  {inst.family_tag}({d}): n={inst.graph.n}, diam={summary.diameter}, "
            f"colors={len(inst.coloring.used)}, strong={strong}"
        )

print()
print("why lad matters: no MOP of diameter d has fewer vertices, so the")
print("strip is the worst case per vertex; its rainbow connection number")
print("equals its diameter, the floor for any graph.")
