"""Brute-force reference implementations used only for verification.

Nothing here is a production path.  The point of this module is to share as
little as possible with the fast implementations so that agreement between
the two is evidence rather than tautology: order checks recompute partial
sums as exact rationals straight from the definition, enumeration searches
dyadic partitions of 1 instead of closing under expansions, and meets and
joins are found by exhaustive scans over a universe.

``closure_equals_order`` is the one deliberate exception: it consumes the
minimal balancing relation (the artifact under test) and checks that its
reflexive-transitive closure, computed by plain relational squaring,
reproduces the order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotALattice, ResourceLimit
from .lattice import DEFAULT_CEILING, LatticeUniverse, minimal_balancing_relation
from .sequences import PathLengthSequence

__all__ = [
    "PropertyReport",
    "closure_equals_order",
    "enumerate_by_partition",
    "join_bruteforce",
    "leq_by_definition",
    "meet_bruteforce",
]


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one verification run: a property name, the size it was
    checked up to, a pass/fail status and a witness for failures."""

    property: str
    n: int
    status: str
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        return json.dumps(
            {"property": self.property, "n": self.n, "status": self.status,
             "witness": self.witness},
            separators=(", ", ": "),
        )

    def __str__(self) -> str:
        text = f"{self.status} {self.property} (n={self.n})"
        if self.witness:
            text += f" -- {self.witness}"
        return text


@lru_cache(maxsize=None)
def _fraction_sums(components: tuple[int, ...]) -> tuple[Fraction, ...]:
    sums = []
    acc = Fraction(0)
    for depth in components:
        acc += Fraction(1, 2**depth)
        sums.append(acc)
    return tuple(sums)


def leq_by_definition(l: PathLengthSequence, h: PathLengthSequence) -> bool:
    """Definition-level order check via exact rational partial sums."""
    a = _fraction_sums(l.components)
    b = _fraction_sums(h.components)
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


def enumerate_by_partition(n: int, ceiling: int = DEFAULT_CEILING) -> tuple[PathLengthSequence, ...]:
    """All dyadic partitions of 1 into ``n`` nondecreasing depths.

    Depth-first search with an exact rational budget, pruning a branch as
    soon as the remaining components cannot reach the remaining budget even
    at the current (largest allowed) weight.
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if n > ceiling:
        raise ResourceLimit(
            f"n={n} exceeds the enumeration ceiling {ceiling}; "
            "pass a larger ceiling explicitly to proceed"
        )
    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(budget: Fraction, remaining: int, min_depth: int) -> None:
        if remaining == 0:
            if budget == 0:
                found.append(tuple(prefix))
            return
        if budget <= 0:
            return
        depth = min_depth
        while Fraction(remaining, 2**depth) >= budget:
            weight = Fraction(1, 2**depth)
            if weight <= budget:
                prefix.append(depth)
                extend(budget - weight, remaining - 1, depth)
                prefix.pop()
            depth += 1

    extend(Fraction(1), n, 0)
    return tuple(PathLengthSequence(c) for c in sorted(found))


def meet_bruteforce(
    s: PathLengthSequence, t: PathLengthSequence, universe: LatticeUniverse
) -> PathLengthSequence:
    """Unique maximum of the common lower bounds, by exhaustive scan."""
    universe.index(s)
    universe.index(t)
    lowers = [
        u for u in universe if leq_by_definition(u, s) and leq_by_definition(u, t)
    ]
    greatest = [m for m in lowers if all(leq_by_definition(u, m) for u in lowers)]
    if len(greatest) != 1:
        raise NotALattice(
            f"lower bounds of {s} and {t} have no unique maximum",
            pair=(s, t),
            bounds=tuple(lowers),
        )
    return greatest[0]


def join_bruteforce(
    s: PathLengthSequence, t: PathLengthSequence, universe: LatticeUniverse
) -> PathLengthSequence:
    """Unique minimum of the common upper bounds, by exhaustive scan."""
    universe.index(s)
    universe.index(t)
    uppers = [
        u for u in universe if leq_by_definition(s, u) and leq_by_definition(t, u)
    ]
    least = [m for m in uppers if all(leq_by_definition(m, u) for u in uppers)]
    if len(least) != 1:
        raise NotALattice(
            f"upper bounds of {s} and {t} have no unique minimum",
            pair=(s, t),
            bounds=tuple(uppers),
        )
    return least[0]


def closure_equals_order(n: int, ceiling: int = DEFAULT_CEILING) -> PropertyReport:
    """Does the closure of the minimal balancing relation equal the order?

    The closure is computed by iterative relational squaring over the
    independently enumerated universe; the order side uses the rational
    definition-level check.  Discrepancy pairs, if any, become the witness.
    """
    elements = enumerate_by_partition(n, ceiling)
    position = {el.components: i for i, el in enumerate(elements)}
    relation = {(i, i) for i in range(len(elements))}
    for step in minimal_balancing_relation(n, ceiling):
        relation.add((position[step.target.components], position[step.source.components]))
    while True:
        composed = {(a, d) for a, b in relation for c, d in relation if b == c}
        squared = relation | composed
        if squared == relation:
            break
        relation = squared
    mismatches = []
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if ((i, j) in relation) != leq_by_definition(a, b):
                mismatches.append(f"{a} vs {b}")
    if mismatches:
        return PropertyReport(
            "closure-equals-order", n, "fail", "; ".join(mismatches[:5])
        )
    return PropertyReport("closure-equals-order", n, "pass")
