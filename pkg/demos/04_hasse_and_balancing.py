#!/usr/bin/env python3
"""Covering structure, balancing moves, and Graphviz/JSON exports.

Writes DOT files into ./out; render them with e.g.
    dot -Tpng out/hasse_7.dot -o hasse_7.png
"""

from pathlib import Path

from imbalattice import (
    balancing_step,
    covering_pairs,
    excess_indices,
    hasse,
    hasse_dot,
    hasse_json,
    minimal_balancing_relation,
    validate,
)

print("== excess indices and balancing moves ==")
for raw in [(1, 2, 3, 4, 4), (1, 3, 3, 3, 4, 5, 5), (2, 3, 3, 3, 3, 3, 3)]:
    l = validate(raw)
    indices = excess_indices(l)
    print(f"{l}: excess indices {list(indices) or 'none'}")
    for j in indices:
        print(f"   move at {j} -> {balancing_step(l, j)}")

print()
print("== the whole balancing relation for 7 components ==")
for step in minimal_balancing_relation(7):
    print(f"  {step.source} --{step.excess_index}--> {step.target}")

print()
print("== covering pairs (transitive reduction) ==")
for low, high in covering_pairs(7):
    print(f"  {low} is covered by {high}")
print("note: the balancing move (1,2,4,4,4,5,5) -> (1,3,3,4,4,4,4) is not a")
print("cover; (1,3,3,3,4,5,5) sits strictly between the two.")

print()
print("== exports ==")
out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
for n in (5, 7, 8):
    universe = hasse(n)
    path = out / f"hasse_{n}.dot"
    path.write_text(hasse_dot(universe))
    print(f"wrote {path} ({len(universe.cover_edges)} cover edges)")
print()
print("JSON for n=5:")
print(hasse_json(hasse(5)))
