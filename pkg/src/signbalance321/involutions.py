"""
Permutation-level maps built on the tableau encodings.

``capital_phi`` applies the epsilon-swap to the insertion-side ballot when
possible, otherwise to the recording side, otherwise fixes the permutation.
It is an involution that preserves the longest-increasing-subsequence length
and reverses the sign off its fixed points.

``capital_psi`` refines this so the maximum descent is preserved as well:
the recording side is swapped only in class B, and the A*/B*+ cases go
through the descent-preserving exchange (forward on A*, inverse on B*+).

``ldes_lind_bijection`` is the delete/reinsert map sending the maximum
descent d to the position d + 1 of the largest letter.  The d = 0 case
inserts the largest letter at position 1; together with the inverse below,
this is the unique reading under which the map is a bijection (checked
exhaustively in the test suite).

Every map materializes its image through reverse row insertion; ballot
edits never touch the permutation word directly.
"""
from __future__ import annotations

from dataclasses import dataclass

from .ballots import (
    BallotClassTag,
    BallotSequence,
    classify,
    epsilon,
    ones_count,
    phi,
    psi,
    psi_inverse,
)
from .errors import Not321Avoiding
from .permutations import Permutation, _is_321_avoiding, _ldes, ldes, lind
from .tableaux import _rsk_ballots, _values_from_ballots

__all__ = [
    "MapOutcome",
    "capital_phi",
    "capital_psi",
    "ldes_lind_bijection",
    "ldes_lind_inverse",
    "fixed_points_of",
]

PHI_BRANCHES = ("P-side", "Q-side", "fixed")
PSI_BRANCHES = ("P-side", "Q-phi", "Q-psi-forward", "Q-psi-inverse", "fixed")


@dataclass(frozen=True)
class MapOutcome:
    """Image of a map application plus the definitional case that fired."""

    image: Permutation
    fixed: bool
    branch: str


def _ballot_pair(w: Permutation) -> tuple[BallotSequence, BallotSequence]:
    p, q = _rsk_ballots(w.values)
    return BallotSequence(p), BallotSequence(q)


def _materialize(p: BallotSequence, q: BallotSequence) -> Permutation:
    return Permutation(_values_from_ballots(p.entries, q.entries))


def capital_phi(w: Permutation) -> MapOutcome:
    """Sign-reversing involution preserving the longest increasing
    subsequence length."""
    p, q = _ballot_pair(w)
    if epsilon(p) > 0:
        image = _materialize(phi(p), q)
        return MapOutcome(image, False, "P-side")
    if epsilon(q) > 0:
        image = _materialize(p, phi(q))
        return MapOutcome(image, False, "Q-side")
    return MapOutcome(w, True, "fixed")


def capital_psi(w: Permutation) -> MapOutcome:
    """Sign-reversing involution preserving both the longest increasing
    subsequence length and the maximum descent."""
    p, q = _ballot_pair(w)
    n = w.n
    k = ones_count(p)
    d = ldes(w)
    if epsilon(p) > 0:
        return MapOutcome(_materialize(phi(p), q), False, "P-side")
    q_class = classify(q)
    if q_class.tag is BallotClassTag.B:
        return MapOutcome(_materialize(p, phi(q)), False, "Q-phi")
    if (n - k) % 2 == 0 and d % 2 == 1:
        if q_class.tag is BallotClassTag.A_STAR:
            return MapOutcome(_materialize(p, psi(q, d)), False, "Q-psi-forward")
        if q_class.tag is BallotClassTag.B_STAR and q_class.ends_plus:
            return MapOutcome(
                _materialize(p, psi_inverse(q, d)), False, "Q-psi-inverse"
            )
    return MapOutcome(w, True, "fixed")


def ldes_lind_bijection(w: Permutation) -> Permutation:
    """Delete the largest letter and reinsert it right after position
    ldes(w).  The image has the largest letter at position ldes(w) + 1 and
    the same inverse-descent trace below n - 1."""
    if w.n == 0:
        raise ValueError("map undefined for the empty permutation")
    if not _is_321_avoiding(w.values):
        raise Not321Avoiding(f"map is defined on 321-avoiding input: {w}")
    n = w.n
    d = ldes(w)
    rest = [x for x in w.values if x != n]
    rest.insert(d, n)
    return Permutation(tuple(rest))


def ldes_lind_inverse(w: Permutation) -> Permutation:
    """Inverse of ``ldes_lind_bijection``: read d from the position of the
    largest letter, delete it, and reinsert at position d when that raises
    the maximum descent to d, else at the end."""
    if w.n == 0:
        raise ValueError("map undefined for the empty permutation")
    if not _is_321_avoiding(w.values):
        raise Not321Avoiding(f"map is defined on 321-avoiding input: {w}")
    n = w.n
    d = lind(w) - 1
    rest = [x for x in w.values if x != n]
    if d == _ldes(rest):
        rest.append(n)
    else:
        rest.insert(d - 1, n)
    return Permutation(tuple(rest))


def fixed_points_of(which: str, n: int, allow_large: bool = False) -> list[Permutation]:
    """All fixed points of the named map ("Phi" or "Psi") across the
    321-avoiding permutations of size n, in enumeration order."""
    from .enumeration import generate_Tn_ballot

    maps = {"Phi": capital_phi, "Psi": capital_psi}
    if which not in maps:
        raise ValueError(f"unknown map {which!r}, expected 'Phi' or 'Psi'")
    apply_map = maps[which]
    return [w for w in generate_Tn_ballot(n, allow_large) if apply_map(w).fixed]
