"""Exception types shared across the package."""

__all__ = [
    "Not321Avoiding",
    "ThirdRowRequired",
    "MalformedTableau",
    "MalformedPair",
    "NotBallot",
    "NotInDomain",
    "NotAMatchedPair",
    "LimitExceeded",
    "UnknownIdentity",
]


class Not321Avoiding(ValueError):
    """The permutation contains a decreasing subsequence of length three."""


class ThirdRowRequired(Not321Avoiding):
    """Row insertion would have to open a third tableau row."""


class MalformedTableau(ValueError):
    """Rows do not form a standard Young tableau with at most two rows."""


class MalformedPair(ValueError):
    """Insertion and recording tableaux do not have the same shape."""


class NotBallot(ValueError):
    """A prefix sum of the sequence is negative."""


class NotInDomain(ValueError):
    """The input lies outside the domain of the requested map."""


class NotAMatchedPair(ValueError):
    """The index pair is not produced by the matching procedure."""


class LimitExceeded(ValueError):
    """The requested size is beyond the enumeration cap."""


class UnknownIdentity(ValueError):
    """No verification routine is registered under the given label."""
