#!/usr/bin/env python3
"""Splitting leaves (expansion) and merging them back (contraction)."""

from imbalattice import (
    compare,
    contraction,
    expansion_at,
    lower_expansion,
    suffix_length,
    upper_expansion,
    validate,
)

l = validate((1, 2, 3, 4, 4))
print(f"start with {l} (suffix length {suffix_length(l)})")
for i in (1, 3, 5):
    print(f"  expansion at position {i}: {expansion_at(l, i)}")
print(f"  upper expansion (split last leaf): {upper_expansion(l)}")
print(f"  lower expansion (split before the trailing run): {lower_expansion(l)}")

print()
constant = validate((2, 2, 2, 2))
print(f"a constant sequence has a single expansion: "
      f"{lower_expansion(constant)} == {upper_expansion(constant)}")

print()
print("contraction merges the deepest structure and drops one component:")
for raw in [(1, 2, 3, 4, 4), (1, 3, 3, 3, 3), (2, 2, 3, 3, 3, 4, 4)]:
    l = validate(raw)
    squeezed = contraction(l)
    print(f"  {l} -> {squeezed}")
    back = expansion_at(squeezed, len(l) - suffix_length(l) + 1)
    print(f"     re-expanding the merged position gives back {back}")

print()
print("the original always sits between the contraction's two expansions:")
l = validate((1, 2, 3, 5, 5, 5, 5))
squeezed = contraction(l)
low, high = lower_expansion(squeezed), upper_expansion(squeezed)
print(f"  {low}  <=  {l}  <=  {high}")
print(f"  verdicts: {compare(low, l).value}, {compare(l, high).value}")
