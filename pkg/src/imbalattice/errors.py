"""Exception types shared across the package."""

from __future__ import annotations

from fractions import Fraction


class ImbalatticeError(Exception):
    """Base class for every error raised by this package."""


class SequenceError(ImbalatticeError, ValueError):
    """A component list is not a valid path-length sequence."""


class NegativeDepth(SequenceError):
    pass


class NotSorted(SequenceError):
    pass


class KraftSumNotOne(SequenceError):
    """The dyadic weights 2**-depth do not add up to exactly 1.

    Carries the exact offending sum (and its deviation from 1) as a
    ``fractions.Fraction`` so callers can report the precise defect.
    """

    def __init__(self, components, kraft_sum: Fraction):
        self.components = tuple(components)
        self.kraft_sum = kraft_sum
        self.deficit = 1 - kraft_sum
        super().__init__(
            f"weights of {self.components} sum to {kraft_sum}, not 1 "
            f"(off by {self.deficit})"
        )


class LengthMismatch(ImbalatticeError, ValueError):
    """Two sequences of different lengths were compared or combined."""


class ScaleTooSmall(ImbalatticeError, ValueError):
    """Requested scale exponent is below the largest depth."""


class PositionOutOfRange(ImbalatticeError, IndexError):
    """Expansion position outside 1..n."""


class SingletonSequence(ImbalatticeError, ValueError):
    """Contraction needs at least two components."""


class ResourceLimit(ImbalatticeError, RuntimeError):
    """The requested size exceeds the configured enumeration ceiling."""


class NotAnExcessIndex(ImbalatticeError, ValueError):
    pass


class ElementNotInUniverse(ImbalatticeError, ValueError):
    pass


class MalformedTree(ImbalatticeError, ValueError):
    """A tree node has a child count other than zero or two."""


class NotALattice(ImbalatticeError, RuntimeError):
    """A bound set lacked a unique extreme element.

    This would falsify the lattice structure and must never fire for valid
    inputs; the offending pair and its bound set are attached as evidence.
    """

    def __init__(self, message: str, pair=None, bounds=None):
        super().__init__(message)
        self.pair = pair
        self.bounds = bounds
