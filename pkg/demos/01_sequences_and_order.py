#!/usr/bin/env python3
"""Validating path-length sequences and comparing them exactly.

A path-length sequence lists the leaf depths of a full binary tree in
nondecreasing order; the weights 2**-depth must add up to exactly 1.
"""

from imbalattice import (
    KraftSumNotOne,
    NotSorted,
    compare,
    scaled_partial_sums,
    suffix_length,
    validate,
)

print("== validation ==")
for raw in [(0,), (1, 2, 3, 4, 4), (1, 2, 2, 3), (2, 1, 1)]:
    try:
        l = validate(raw)
        print(f"{raw} -> valid, suffix length {suffix_length(l)}")
    except KraftSumNotOne as exc:
        print(f"{raw} -> rejected: weights sum to {exc.kraft_sum}")
    except NotSorted:
        print(f"{raw} -> rejected: not sorted")

print()
print("== partial sums witness the order ==")
balanced = validate((2, 2, 2, 3, 3))
skewed = validate((1, 3, 3, 3, 3))
for l in (balanced, skewed):
    witness = scaled_partial_sums(l, 3)
    print(f"{l}: sums {witness.sums} at scale 2**-{witness.scale_exponent}")
print(f"compare: {balanced} is {compare(balanced, skewed).value} than {skewed}")

print()
print("== the first incomparable pair appears at 7 components ==")
s = validate((2, 2, 2, 3, 4, 5, 5))
t = validate((1, 3, 3, 4, 4, 4, 4))
print(f"{s} vs {t}: {compare(s, t).value}")
print("sums:", scaled_partial_sums(s, 5).sums, "vs", scaled_partial_sums(t, 5).sums)

print()
print("== any common scale gives the same verdict ==")
for scale in (5, 6, 9):
    print(f"scale 2**-{scale}: {compare(s, t, scale=scale).value}")
