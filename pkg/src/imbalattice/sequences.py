"""Path-length sequences and the exact balance-dominance order.

A path-length sequence is a nondecreasing list of nonnegative integer leaf
depths whose dyadic weights 2**-depth add up to exactly 1.  By Kraft's
theorem these are exactly the left-to-right depth profiles of full binary
trees, or equivalently the length profiles of complete binary prefix codes.

Sequences of equal length are compared through the partial sums of their
weight vectors: ``l`` is *more balanced* than ``h`` when every partial sum
of ``l``'s weights is at most the matching partial sum of ``h``'s.  The
comparison is a partial order; the flattest tree sits at the bottom and the
caterpillar tree at the top.

All arithmetic is exact.  Weights are rescaled to a common power of two and
handled as arbitrary-precision integers; floating point is never used.
Every value here is immutable and every function pure, so the module is safe
for unrestricted concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from operator import index as _as_int
from typing import Iterable, Iterator

from .errors import (
    KraftSumNotOne,
    LengthMismatch,
    NegativeDepth,
    NotSorted,
    ScaleTooSmall,
    SequenceError,
)

__all__ = [
    "OrderVerdict",
    "PathLengthSequence",
    "ScaledPartialSums",
    "compare",
    "format_sequence",
    "leq",
    "parse_components",
    "scaled_partial_sums",
    "suffix_length",
    "validate",
]


@dataclass(frozen=True)
class PathLengthSequence:
    """Validated leaf-depth profile of a full binary tree.

    Construction rejects anything that is not a nondecreasing sequence of
    nonnegative integers with Kraft sum exactly 1, so every instance in
    existence satisfies the invariants.  Instances are immutable, hashable
    and compare equal exactly when their components do.
    """

    components: tuple[int, ...]

    def __post_init__(self) -> None:
        components = tuple(_as_int(c) for c in self.components)
        object.__setattr__(self, "components", components)
        if not components:
            raise SequenceError("a path-length sequence has at least one component")
        for depth in components:
            if depth < 0:
                raise NegativeDepth(f"negative leaf depth {depth} in {components}")
        for a, b in zip(components, components[1:]):
            if a > b:
                raise NotSorted(f"components must be nondecreasing, got {components}")
        scale = components[-1]
        total = sum(1 << (scale - c) for c in components)
        if total != 1 << scale:
            raise KraftSumNotOne(components, Fraction(total, 1 << scale))

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def first(self) -> int:
        return self.components[0]

    @property
    def last(self) -> int:
        return self.components[-1]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __str__(self) -> str:
        return format_sequence(self)


class OrderVerdict(Enum):
    """Outcome of comparing two equal-length sequences in the balance order."""

    EQUAL = "equal"
    MORE_BALANCED = "more-balanced"
    LESS_BALANCED = "less-balanced"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ScaledPartialSums:
    """Exact witness for an order comparison.

    ``sums[i]`` is the integer ``sum(2**(scale_exponent - l_j) for j <= i)``.
    The entries are strictly increasing and the final entry equals
    ``2**scale_exponent`` (that is the Kraft equality).
    """

    scale_exponent: int
    sums: tuple[int, ...]


def validate(components: Iterable[int]) -> PathLengthSequence:
    """Validate an integer sequence as a path-length sequence.

    Raises ``NegativeDepth``, ``NotSorted`` or ``KraftSumNotOne`` (which
    carries the exact dyadic sum) when the input is not one.
    """
    return PathLengthSequence(tuple(components))


def parse_components(text: str) -> tuple[int, ...]:
    """Parse the shared textual syntax: comma-separated decimal integers.

    Only parses; semantic validation is a separate step (``validate``).
    """
    if not text:
        raise ValueError("empty sequence text")
    parts = []
    for token in text.split(","):
        if not token or not (token.isdigit() or (token[0] == "-" and token[1:].isdigit())):
            raise ValueError(f"not a comma-separated integer list: {text!r}")
        parts.append(int(token))
    return tuple(parts)


def format_sequence(l: PathLengthSequence) -> str:
    """Render in the shared textual syntax, e.g. ``1,2,3,4,4``."""
    return ",".join(str(c) for c in l.components)


def suffix_length(l: PathLengthSequence) -> int:
    """Number of equal trailing components (even for every n >= 2)."""
    k = 1
    while k < len(l) and l[-1 - k] == l.last:
        k += 1
    return k


def scaled_partial_sums(l: PathLengthSequence, scale: int | None = None) -> ScaledPartialSums:
    """Partial sums of the weights 2**(scale - depth) as exact integers.

    ``scale`` defaults to ``last l`` and must not be smaller than it.
    """
    exponent = l.last if scale is None else _as_int(scale)
    if exponent < l.last:
        raise ScaleTooSmall(f"scale {exponent} is below last component {l.last}")
    sums = []
    acc = 0
    for depth in l:
        acc += 1 << (exponent - depth)
        sums.append(acc)
    return ScaledPartialSums(exponent, tuple(sums))


def compare(l: PathLengthSequence, h: PathLengthSequence, scale: int | None = None) -> OrderVerdict:
    """Compare two equal-length sequences in the balance-dominance order.

    The verdict is computed from partial sums at a common power-of-two
    scale; any scale at least ``max(last l, last h)`` gives the same answer
    (the default uses exactly that maximum).
    """
    if len(l) != len(h):
        raise LengthMismatch(f"cannot compare lengths {len(l)} and {len(h)}")
    common = max(l.last, h.last) if scale is None else scale
    a = scaled_partial_sums(l, common).sums
    b = scaled_partial_sums(h, common).sums
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return OrderVerdict.EQUAL
    if le:
        return OrderVerdict.MORE_BALANCED
    if ge:
        return OrderVerdict.LESS_BALANCED
    return OrderVerdict.INCOMPARABLE


def leq(l: PathLengthSequence, h: PathLengthSequence) -> bool:
    """True when ``l`` is at least as balanced as ``h`` (equality included).

    Equivalent to ``compare(l, h) in {EQUAL, MORE_BALANCED}`` but with an
    early exit, since this predicate sits inside every lattice loop.
    """
    if len(l) != len(h):
        raise LengthMismatch(f"cannot compare lengths {len(l)} and {len(h)}")
    exponent = max(l.last, h.last)
    a = b = 0
    for x, y in zip(l, h):
        a += 1 << (exponent - x)
        b += 1 << (exponent - y)
        if a > b:
            return False
    return True
