#!/usr/bin/env python3
"""Canonical trees, prefix codes, and the two monotone tree parameters."""

from pathlib import Path

from imbalattice import (
    canonical_code,
    enumerate_universe,
    leq,
    nodes_within_depth,
    sum_components,
    tree_ascii,
    tree_dot,
    tree_from_sequence,
    validate,
)

l = validate((1, 2, 3, 4, 4))
print(f"canonical prefix code for {l}:")
for word in canonical_code(l):
    print(f"  {word}")

print()
print("the matching tree (shallow leaves leftmost):")
print(tree_ascii(tree_from_sequence(l)))

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
path = out / "tree_1_2_3_4_4.dot"
path.write_text(tree_dot(tree_from_sequence(l)))
print(f"wrote {path}")

print()
print("== external path length grows with imbalance ==")
chain = [validate(c) for c in ((2, 2, 2, 3, 3), (1, 3, 3, 3, 3), (1, 2, 3, 4, 4))]
for l in chain:
    print(f"  {l}: component sum {sum_components(l)}")

print()
print("== node counts within a depth budget shrink with imbalance ==")
universe = enumerate_universe(7)
print(f"{'sequence':>16}  " + "  ".join(f"d<={d}" for d in range(8)))
for l in sorted(universe, key=lambda u: sum_components(u)):
    counts = [nodes_within_depth(l, d) for d in range(8)]
    print(f"{str(l):>16}  " + "  ".join(f"{c:4d}" for c in counts))
print()
print("checking antitonicity against the order on all 7-component pairs:")
for a in universe:
    for b in universe:
        if leq(a, b):
            assert all(
                nodes_within_depth(a, d) >= nodes_within_depth(b, d) for d in range(8)
            )
print("  more balanced never has fewer nodes within any budget: confirmed")
