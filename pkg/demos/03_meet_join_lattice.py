#!/usr/bin/env python3
"""Meets and joins: the fixed-length universes really are lattices."""

from imbalattice import (
    bottom,
    enumerate_universe,
    join,
    leq,
    meet,
    top,
    validate,
)

print("universe sizes:", [len(enumerate_universe(n)) for n in range(1, 11)])

print()
print("the nine sequences with 7 components, bottom to top:")
universe = enumerate_universe(7)
for l in sorted(universe, key=lambda u: sum(u.components)):
    marks = []
    if l == bottom(7):
        marks.append("bottom")
    if l == top(7):
        marks.append("top")
    print(f"  {l} {'(' + ', '.join(marks) + ')' if marks else ''}")

print()
s = validate((2, 2, 2, 3, 4, 5, 5))
t = validate((1, 3, 3, 4, 4, 4, 4))
low, high = meet(s, t), join(s, t)
print(f"meet({s}, {t}) = {low}")
print(f"join({s}, {t}) = {high}")
print(f"last(meet) = {low.last} = min(last s, last t) = {min(s.last, t.last)}")

print()
print("lattice identities on the whole 7-component universe:")
assert all(meet(a, a) == a and join(a, a) == a for a in universe)
assert all(meet(a, b) == meet(b, a) for a in universe for b in universe)
assert all(join(a, meet(a, b)) == a for a in universe for b in universe)
assert all(leq(meet(a, b), a) for a in universe for b in universe)
print("  idempotence, commutativity, absorption, lower-bound: all hold")
