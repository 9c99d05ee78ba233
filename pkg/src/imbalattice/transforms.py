"""Leaf splitting and merging: expansions and the contraction.

Expanding position ``i`` replaces the depth ``l_i`` by two copies of
``l_i + 1`` (splitting that leaf into a cherry).  The result is kept in
canonical nondecreasing order, i.e. expansion acts on the underlying
multiset of depths.  The upper expansion splits the last leaf; the lower
expansion splits the shallowest leaf of the trailing run (position
``max(1, n - suf l)``), which is defined even for constant sequences, where
the two coincide.

Contraction is the inverse-style move: it merges the two deepest leaves and
re-deepens the run boundary, producing an (n-1)-component sequence that
sandwiches the original between its own lower and upper expansions.

Pure functions over immutable values throughout.
"""

from __future__ import annotations

from .errors import PositionOutOfRange, SingletonSequence
from .sequences import PathLengthSequence, suffix_length

__all__ = [
    "contraction",
    "expansion_at",
    "lower_expansion",
    "upper_expansion",
]


def expansion_at(l: PathLengthSequence, i: int) -> PathLengthSequence:
    """Split the leaf at 1-based position ``i``; result has n+1 components."""
    if not 1 <= i <= len(l):
        raise PositionOutOfRange(f"position {i} outside 1..{len(l)}")
    parts = list(l.components)
    depth = parts.pop(i - 1)
    parts.extend((depth + 1, depth + 1))
    parts.sort()
    return PathLengthSequence(tuple(parts))


def upper_expansion(l: PathLengthSequence) -> PathLengthSequence:
    """Expansion in the last position (split the deepest, rightmost leaf)."""
    return expansion_at(l, len(l))


def lower_expansion(l: PathLengthSequence) -> PathLengthSequence:
    """Expansion in position ``max(1, n - suf l)``.

    For a constant sequence this is position 1 and equals the upper
    expansion; a sequence is constant exactly when the two coincide.
    """
    return expansion_at(l, max(1, len(l) - suffix_length(l)))


def contraction(l: PathLengthSequence) -> PathLengthSequence:
    """Merge the deepest structure into an (n-1)-component sequence.

    With ``k = suf l`` the result is ``(l_1, .., l_{n-k}, l_{n-k+1} - 1,
    l_n, .., l_n)`` with the last value repeated ``k - 2`` times.  The
    original is recovered by re-expanding position ``n - k + 1``, and is
    sandwiched between the contraction's lower and upper expansions.
    """
    n = len(l)
    if n == 1:
        raise SingletonSequence("cannot contract a single-component sequence")
    k = suffix_length(l)
    parts = l.components[: n - k] + (l.components[n - k] - 1,) + (l.last,) * (k - 2)
    return PathLengthSequence(parts)
