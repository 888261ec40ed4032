"""
Exhaustive verification of the sign-balance identities.

Each label names one claim.  ``verify(label, n_max)`` runs the claim at
every applicable size up to ``n_max`` and returns a report with one row per
size: pass/fail, the compared exact values, and the first counterexample
when an elementwise check fails.

Aggregate claims (the signed-polynomial identities) compare left- and
right-hand polynomials; elementwise claims report a violation count against
an expected zero, alongside whatever aggregate values make the comparison
auditable.

Rows for disjoint sizes may be computed by worker processes; the merged
report is ordered by size and is identical for any worker count.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .ballots import (
    BallotClassTag,
    BallotSequence,
    ballot_sign,
    classify,
    delta,
    epsilon,
    generate_ballot_sequences,
    ones_count,
    phi,
)
from .enumeration import (
    SignedPolynomial,
    _check_ballot_cap,
    _iter_tn_values,
    _joint_rows,
    a_star_count,
    ballot_number,
    catalan,
    psi_fixed_point_count,
    signed_distribution,
    signed_polynomial,
)
from .errors import UnknownIdentity
from .involutions import capital_phi, capital_psi, ldes_lind_bijection, ldes_lind_inverse
from .matching import match_pairs, region_counts, sign_by_srs, srs
from .permutations import (
    Permutation,
    _is_321_avoiding,
    descent_set,
    inverse,
    inversion_count,
    ldes,
    lind,
    lis_oracle,
    sign_by_inversions,
)
from .tableaux import _rsk_ballots

__all__ = [
    "IDENTITY_LABELS",
    "IDENTITY_SUMMARIES",
    "IdentityCheck",
    "VerificationReport",
    "applicable_sizes",
    "check_identity_at",
    "verify",
    "report_rows",
    "report_json",
    "report_csv",
]

IDENTITY_LABELS = (
    "thm1.1",
    "prop2.1",
    "lemma2.2",
    "prop3.1",
    "phi-involution",
    "eo-identities",
    "thm4.1",
    "lemma4.2-parity",
    "prop4.3",
    "cor4.4",
    "thm5.1",
    "srs-matching-consistency",
)

IDENTITY_SUMMARIES = {
    "thm1.1": "signed lis-polynomial of size n telescopes to the unsigned"
    " polynomial of half size (odd n), times (q - 1) for even n",
    "prop2.1": "tableau sign formula agrees with the inversion-count sign",
    "lemma2.2": "per-pair region counts: parity and inversion decomposition",
    "prop3.1": "ballot swap at epsilon is a sign-reversing involution;"
    " fixed-class counts match the closed form",
    "phi-involution": "the lis-preserving involution on permutations:"
    " involutive, sign-reversing off fixed points, fixed counts squared",
    "eo-identities": "the four even-minus-odd count identities per lis value",
    "thm4.1": "signed ldes-polynomial telescopes to half size",
    "lemma4.2-parity": "parity of sign under the A*/B*/Bx case split, plus"
    " the matching class counts",
    "prop4.3": "the ldes-preserving involution: involutive, sign-reversing"
    " off fixed points, fixed counts per descent match the closed form",
    "cor4.4": "both joint (lis, ldes) identities with the parity filters",
    "thm5.1": "delete/reinsert map is a bijection transporting ldes + 1 to"
    " the position of the largest letter, preserving inverse descents",
    "srs-matching-consistency": "matched letters/positions equal the second"
    " rows; second-row sum equals the matched-pair sum",
}


@dataclass
class IdentityCheck:
    """Result of one identity at one size."""

    identity: str
    n: int
    passed: bool
    lhs: dict[str, int]
    rhs: dict[str, int]
    counterexample: str | None = None


@dataclass
class VerificationReport:
    identity: str
    n_max: int
    checks: list[IdentityCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> IdentityCheck | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None


def _iter_tn_perms(n):
    for values in _iter_tn_values(n):
        yield Permutation(values)


class _Violations:
    """Collects a violation count and the first offending witness."""

    def __init__(self):
        self.count = 0
        self.witness: str | None = None

    def hit(self, ok: bool, witness) -> bool:
        if not ok:
            self.count += 1
            if self.witness is None:
                self.witness = str(witness)
        return ok


def _strip_zeros(mapping: dict) -> dict[str, int]:
    return {str(k): v for k, v in sorted(mapping.items()) if v != 0}


def _unsigned_univariate(m: int, statistic: str, offset: int) -> SignedPolynomial:
    """Plain counting polynomial of T_m with exponents 2*value + offset."""
    dist = signed_distribution(m, statistic)
    return SignedPolynomial.from_terms(
        {(2 * v + offset,): e + o for v, (e, o) in dist.rows.items()}
    )


def _unsigned_bivariate(m: int) -> SignedPolynomial:
    """Counting polynomial of T_m with exponents (2*lis + 1, 2*ldes)."""
    terms: dict[tuple[int, ...], int] = {}
    for k, d, _l, _s, c in _joint_rows(m):
        e = (2 * k + 1, 2 * d)
        terms[e] = terms.get(e, 0) + c
    return SignedPolynomial.from_terms(terms)


def _check_thm1_1(n: int) -> IdentityCheck:
    lhs = signed_polynomial(n, "lis")
    if n % 2:
        rhs = _unsigned_univariate((n - 1) // 2, "lis", 1)
    else:
        q_minus_one = SignedPolynomial.from_terms({(1,): 1, (0,): -1})
        rhs = q_minus_one * _unsigned_univariate((n - 2) // 2, "lis", 1)
    return IdentityCheck("thm1.1", n, lhs == rhs, lhs.as_map(), rhs.as_map())


def _check_thm4_1(n: int) -> IdentityCheck:
    lhs = signed_polynomial(n, "ldes")
    if n % 2:
        rhs = _unsigned_univariate((n - 1) // 2, "ldes", 0)
    else:
        one_minus_q = SignedPolynomial.from_terms({(0,): 1, (1,): -1})
        rhs = one_minus_q * _unsigned_univariate(n // 2, "ldes", 0)
    return IdentityCheck("thm4.1", n, lhs == rhs, lhs.as_map(), rhs.as_map())


def _check_eo_identities(n: int) -> IdentityCheck:
    dist = signed_distribution(n, "lis")
    observed = dist.signed()
    expected: dict[int, int] = {}
    for j in range(1, n + 1):
        if n % 2:
            m = (n - 1) // 2
            value = ballot_number(m, (j - 1) // 2) ** 2 if j % 2 else 0
        else:
            m = (n - 2) // 2
            if j % 2:
                value = -(ballot_number(m, (j - 1) // 2) ** 2)
            else:
                value = ballot_number(m, (j - 2) // 2) ** 2
        if value:
            expected[j] = value
    return IdentityCheck(
        "eo-identities",
        n,
        observed == expected,
        _strip_zeros(observed),
        _strip_zeros(expected),
    )


def _check_prop2_1(n: int) -> IdentityCheck:
    bad = _Violations()
    even_srs = odd_srs = even_inv = odd_inv = 0
    for w in _iter_tn_perms(n):
        s_tab = sign_by_srs(w)
        s_inv = sign_by_inversions(w)
        if s_tab > 0:
            even_srs += 1
        else:
            odd_srs += 1
        if s_inv > 0:
            even_inv += 1
        else:
            odd_inv += 1
        bad.hit(s_tab == s_inv, w)
    lhs = {"even": even_srs, "odd": odd_srs, "violations": bad.count}
    rhs = {"even": even_inv, "odd": odd_inv, "violations": 0}
    return IdentityCheck("prop2.1", n, bad.count == 0, lhs, rhs, bad.witness)


def _check_lemma2_2(n: int) -> IdentityCheck:
    bad = _Violations()
    inv_total = 0
    decomposed_total = 0
    for w in _iter_tn_perms(n):
        pairs = match_pairs(w).pairs
        c_sum = 0
        for pair in pairs:
            i, j = pair
            rc = region_counts(w, pair)
            vi = w.values[i - 1]
            bad.hit(rc.c1 == 0, w)
            bad.hit((rc.c - (vi + j)) % 2 == 0, w)
            bad.hit(rc.c2 + rc.c3 + 2 * rc.c4 == (n - vi) + (n - j), w)
            c_sum += rc.c
        inv = inversion_count(w)
        decomposition = c_sum + (n - lis_oracle(w))
        bad.hit(inv == decomposition, w)
        inv_total += inv
        decomposed_total += decomposition
    lhs = {"inversion_total": inv_total, "violations": bad.count}
    rhs = {"inversion_total": decomposed_total, "violations": 0}
    return IdentityCheck("lemma2.2", n, bad.count == 0, lhs, rhs, bad.witness)


def _check_prop3_1(n: int) -> IdentityCheck:
    bad = _Violations()
    observed: dict[int, int] = {}
    for b in generate_ballot_sequences(n):
        k = ones_count(b)
        e = epsilon(b)
        pairwise = all(
            b.entries[i - 1] == b.entries[i] for i in range(2, n, 2)
        )
        bad.hit((e == 0) == pairwise, b)
        if e == 0:
            observed[k] = observed.get(k, 0) + 1
            # "+-" (length 2) is the unique epsilon-free sequence with
            # delta = 1; from length 3 on, prefix-sum nonnegativity rules
            # delta = 1 out.
            if n != 2:
                bad.hit(delta(b) != 1, b)
        else:
            c = phi(b)
            bad.hit(phi(c) == b, b)
            bad.hit(ballot_sign(c) == -ballot_sign(b), b)
            bad.hit(ones_count(c) == k, b)
            bad.hit(epsilon(c) == e, b)
    expected = {k: a_star_count(n, k) for k in range(n + 1)}
    lhs = dict(_strip_zeros(observed))
    rhs = dict(_strip_zeros(expected))
    lhs["violations"] = bad.count
    rhs["violations"] = 0
    passed = bad.count == 0 and _strip_zeros(observed) == _strip_zeros(expected)
    return IdentityCheck("prop3.1", n, passed, lhs, rhs, bad.witness)


def _check_phi_involution(n: int) -> IdentityCheck:
    bad = _Violations()
    fixed_by_k: dict[int, int] = {}
    for w in _iter_tn_perms(n):
        out = capital_phi(w)
        k = lis_oracle(w)
        bad.hit(lis_oracle(out.image) == k, w)
        bad.hit(capital_phi(out.image).image == w, w)
        bad.hit(out.fixed == (out.image == w), w)
        if out.fixed:
            fixed_by_k[k] = fixed_by_k.get(k, 0) + 1
            s = sign_by_inversions(w)
            if n % 2:
                bad.hit(s == 1, w)
            else:
                bad.hit(s == (1 if k % 2 == 0 else -1), w)
        else:
            bad.hit(
                sign_by_inversions(out.image) == -sign_by_inversions(w), w
            )
    expected = {k: a_star_count(n, k) ** 2 for k in range(n + 1)}
    lhs = dict(_strip_zeros(fixed_by_k))
    rhs = dict(_strip_zeros(expected))
    lhs["violations"] = bad.count
    rhs["violations"] = 0
    passed = bad.count == 0 and _strip_zeros(fixed_by_k) == _strip_zeros(expected)
    return IdentityCheck("phi-involution", n, passed, lhs, rhs, bad.witness)


def _check_lemma4_2(n: int) -> IdentityCheck:
    bad = _Violations()
    # Elementwise parity claims over the permutations whose insertion-side
    # sequence is in A* and whose recording side avoids class B.
    for w in _iter_tn_perms(n):
        p, q = _rsk_ballots(w.values)
        if any(p[i - 1] != p[i] for i in range(2, n, 2)):
            continue
        q_cls = classify(BallotSequence(q))
        if q_cls.tag is BallotClassTag.B:
            continue
        d = ldes(w)
        k = lis_oracle(w)
        s = sign_by_inversions(w)
        if d % 2 == 0:
            bad.hit(s == 1, w)
        elif n % 2:
            bad.hit((s == 1) == (q_cls.tag is BallotClassTag.A_STAR), w)
        else:
            bad.hit(
                (s == 1) == (q_cls.tag is BallotClassTag.A_STAR and k % 2 == 0),
                w,
            )
    # Class-count equalities over the ballot sequences themselves.
    a_counts: dict[tuple[int, int], int] = {}
    b_counts: dict[tuple[int, int], int] = {}
    for b in generate_ballot_sequences(n):
        k = ones_count(b)
        d = delta(b)
        if d % 2 == 0:
            continue
        cls = classify(b)
        if n % 2:
            if k % 2 == 0:
                continue
            if cls.tag is BallotClassTag.A_STAR:
                a_counts[(k, d)] = a_counts.get((k, d), 0) + 1
            elif cls.tag is BallotClassTag.B_STAR:
                b_counts[(k, d)] = b_counts.get((k, d), 0) + 1
        else:
            if k % 2:
                continue
            if cls.tag is BallotClassTag.A_STAR:
                a_counts[(k, d)] = a_counts.get((k, d), 0) + 1
            elif cls.tag is BallotClassTag.B_STAR and cls.ends_plus:
                b_counts[(k, d)] = b_counts.get((k, d), 0) + 1
    cells = sorted(set(a_counts) | set(b_counts))
    lhs = {f"{k},{d}": a_counts.get((k, d), 0) for k, d in cells}
    rhs = {f"{k},{d}": b_counts.get((k, d), 0) for k, d in cells}
    counts_ok = lhs == rhs
    lhs["violations"] = bad.count
    rhs["violations"] = 0
    passed = bad.count == 0 and counts_ok
    return IdentityCheck("lemma4.2-parity", n, passed, lhs, rhs, bad.witness)


def _check_prop4_3(n: int) -> IdentityCheck:
    bad = _Violations()
    observed: dict[int, int] = {}
    for w in _iter_tn_perms(n):
        out = capital_psi(w)
        k = lis_oracle(w)
        d = ldes(w)
        s = sign_by_inversions(w)
        bad.hit(capital_psi(out.image).image == w, w)
        bad.hit(lis_oracle(out.image) == k, w)
        bad.hit(ldes(out.image) == d, w)
        bad.hit(out.fixed == (out.image == w), w)
        if out.fixed:
            observed[d] = observed.get(d, 0) + 1
            bad.hit((s == -1) == (n % 2 == 0 and d % 2 == 1), w)
        else:
            bad.hit(sign_by_inversions(out.image) == -s, w)
    expected = {d: psi_fixed_point_count(n, d) for d in range(n)}
    if n % 2 == 0:
        for d in range(0, n, 2):
            bad.hit(
                observed.get(d, 0) == observed.get(d + 1, 0),
                f"fixed-point counts at descents {d} and {d + 1} differ",
            )
    lhs = dict(_strip_zeros(observed))
    rhs = dict(_strip_zeros(expected))
    lhs["violations"] = bad.count
    rhs["violations"] = 0
    passed = bad.count == 0 and _strip_zeros(observed) == _strip_zeros(expected)
    return IdentityCheck("prop4.3", n, passed, lhs, rhs, bad.witness)


def _check_cor4_4(n: int) -> IdentityCheck:
    if n % 2:
        m = (n - 1) // 2
        lhs = _unsigned_bivariate(m)
        rhs = signed_polynomial(n, ("lis", "ldes"), lis_parity=1, ldes_parity=0)
    else:
        m = n // 2
        lhs = _unsigned_bivariate(m)
        rhs = signed_polynomial(
            n, ("lis", "ldes"), lis_parity=1, ldes_parity=0
        ) + signed_polynomial(
            n, ("lis", "ldes"), lis_parity=0, ldes_parity=0
        ).shift(1, 0)
    return IdentityCheck("cor4.4", n, lhs == rhs, lhs.as_map(), rhs.as_map())


def _check_thm5_1(n: int) -> IdentityCheck:
    bad = _Violations()
    images = set()
    fiber_lind: dict[tuple, int] = {}
    fiber_ldes: dict[tuple, int] = {}
    for w in _iter_tn_perms(n):
        image = ldes_lind_bijection(w)
        images.add(image.values)
        bad.hit(_is_321_avoiding(image.values), w)
        bad.hit(lind(image) == ldes(w) + 1, w)
        fiber = tuple(i for i in descent_set(inverse(w)) if i <= n - 2)
        fiber_img = tuple(i for i in descent_set(inverse(image)) if i <= n - 2)
        bad.hit(fiber == fiber_img, w)
        bad.hit(ldes_lind_inverse(image) == w, w)
        key_lind = (fiber, lind(w))
        key_ldes = (fiber, ldes(w) + 1)
        fiber_lind[key_lind] = fiber_lind.get(key_lind, 0) + 1
        fiber_ldes[key_ldes] = fiber_ldes.get(key_ldes, 0) + 1
    bad.hit(len(images) == catalan(n), f"{len(images)} distinct images")
    # Equidistribution of lind and ldes + 1, jointly with the inverse-descent
    # trace below n - 1.
    bad.hit(fiber_lind == fiber_ldes, "joint fiber distributions differ")
    lhs_counts = signed_distribution(n, "lind").counts()
    rhs_counts = {
        d + 1: c for d, c in signed_distribution(n, "ldes").counts().items()
    }
    lhs = dict(_strip_zeros(lhs_counts))
    rhs = dict(_strip_zeros(rhs_counts))
    dist_ok = lhs == rhs
    lhs["violations"] = bad.count
    rhs["violations"] = 0
    passed = bad.count == 0 and dist_ok
    return IdentityCheck("thm5.1", n, passed, lhs, rhs, bad.witness)


def _check_srs_matching(n: int) -> IdentityCheck:
    bad = _Violations()
    for w in _iter_tn_perms(n):
        pairs = match_pairs(w).pairs
        p, q = _rsk_ballots(w.values)
        row2_letters = {i for i, e in enumerate(p, 1) if e < 0}
        row2_positions = {i for i, e in enumerate(q, 1) if e < 0}
        bad.hit({w.values[i - 1] for i, _ in pairs} == row2_letters, w)
        bad.hit({j for _, j in pairs} == row2_positions, w)
        bad.hit(len(pairs) == n - lis_oracle(w), w)
        try:
            srs(w, cross_check=True)
        except AssertionError:
            bad.hit(False, w)
    lhs = {"violations": bad.count}
    rhs = {"violations": 0}
    return IdentityCheck(
        "srs-matching-consistency", n, bad.count == 0, lhs, rhs, bad.witness
    )


_CHECKERS = {
    "thm1.1": (_check_thm1_1, 3),
    "prop2.1": (_check_prop2_1, 1),
    "lemma2.2": (_check_lemma2_2, 1),
    "prop3.1": (_check_prop3_1, 1),
    "phi-involution": (_check_phi_involution, 1),
    "eo-identities": (_check_eo_identities, 1),
    "thm4.1": (_check_thm4_1, 2),
    "lemma4.2-parity": (_check_lemma4_2, 1),
    "prop4.3": (_check_prop4_3, 2),
    "cor4.4": (_check_cor4_4, 2),
    "thm5.1": (_check_thm5_1, 1),
    "srs-matching-consistency": (_check_srs_matching, 1),
}


def applicable_sizes(identity: str, n_max: int) -> list[int]:
    """Sizes at which the labelled identity is claimed, up to n_max."""
    if identity not in _CHECKERS:
        raise UnknownIdentity(
            f"unknown identity {identity!r}; expected one of {', '.join(IDENTITY_LABELS)}"
        )
    _checker, start = _CHECKERS[identity]
    return list(range(start, n_max + 1))


def check_identity_at(identity: str, n: int, allow_large: bool = False) -> IdentityCheck:
    """Run one identity at one size."""
    if identity not in _CHECKERS:
        raise UnknownIdentity(
            f"unknown identity {identity!r}; expected one of {', '.join(IDENTITY_LABELS)}"
        )
    _check_ballot_cap(n, allow_large)
    checker, _start = _CHECKERS[identity]
    return checker(n)


def verify(
    identity: str,
    n_max: int,
    workers: int = 1,
    allow_large: bool = False,
) -> VerificationReport:
    """Verify the labelled identity at every applicable size up to n_max."""
    sizes = applicable_sizes(identity, n_max)
    if sizes:
        _check_ballot_cap(max(sizes), allow_large)
    if workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            checks = list(
                pool.map(partial(check_identity_at, identity, allow_large=allow_large), sizes)
            )
    else:
        checks = [check_identity_at(identity, n, allow_large) for n in sizes]
    return VerificationReport(identity, n_max, checks)


def report_rows(report: VerificationReport) -> list[dict]:
    """Rows in the stable JSON schema."""
    return [
        {
            "identity": c.identity,
            "n": c.n,
            "pass": c.passed,
            "lhs": c.lhs,
            "rhs": c.rhs,
            "counterexample": c.counterexample,
        }
        for c in report.checks
    ]


def report_json(report: VerificationReport) -> str:
    return json.dumps(report_rows(report), indent=2, sort_keys=True)


def report_csv(report: VerificationReport) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["identity", "n", "key", "lhs", "rhs", "pass"])
    for c in report.checks:
        keys = sorted(set(c.lhs) | set(c.rhs))
        for key in keys:
            left = c.lhs.get(key, 0)
            right = c.rhs.get(key, 0)
            writer.writerow([c.identity, c.n, key, left, right, left == right])
    return out.getvalue()
