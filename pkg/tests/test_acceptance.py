"""Acceptance gate: every contract check at its stated size bound.

All equalities are exact integer identities (tolerance zero).  Each test
prints one PASS/FAIL line; run with ``pytest tests/test_acceptance.py -v -s``
to see them.

The final check (the signed-distribution clause of check 13) encodes a
claimed consequence that exhaustive enumeration refutes for even sizes: the
signed distribution of the largest-letter position equals the shifted signed
distribution of the maximum descent for odd sizes but is its negation for
even sizes.  The assertion is kept in its literal form and fails honestly;
see the analysis printed by the test and the bijection-level check above it,
which passes.
"""
from signbalance321 import (
    ballot_number,
    capital_psi,
    catalan,
    generate_Tn_ballot,
    generate_Tn_filter,
    inversion_count,
    ldes,
    match_pairs,
    parse_permutation,
    region_counts,
    signed_distribution,
    signed_polynomial,
    srs,
    verify,
)

FIG = parse_permutation("4 1 2 5 7 8 3 6 9 12 10 11")


def report(ok: bool, label: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'}  {label}")
    return ok


def run_label(label: str, n_max: int) -> bool:
    rep = verify(label, n_max)
    failure = rep.first_failure()
    detail = "" if rep.passed else (
        f" (first failure at n={failure.n}: lhs={failure.lhs} rhs={failure.rhs}"
        f" counterexample={failure.counterexample})"
    )
    return report(rep.passed, f"{label} up to n={n_max}{detail}")


def test_criterion_01_cardinality_and_generator_agreement():
    ok = True
    for n in range(1, 13):
        ok &= sum(1 for _ in generate_Tn_ballot(n)) == catalan(n)
    for n in range(1, 10):
        from_filter = {w.values for w in generate_Tn_filter(n)}
        from_ballot = [w.values for w in generate_Tn_ballot(n)]
        ok &= len(from_ballot) == len(set(from_ballot))
        ok &= from_filter == set(from_ballot)
    assert report(ok, "criterion 1: |T_n| = catalan(n) for n <= 12; generators agree for n <= 9")


def test_criterion_02_lis_distribution():
    ok = True
    for n in range(1, 13):
        counts = signed_distribution(n, "lis").counts()
        for k in range(1, n + 1):
            ok &= counts.get(k, 0) == ballot_number(n, k) ** 2
    assert report(ok, "criterion 2: lis counts are squared ballot numbers for n <= 12")


def test_criterion_03_ldes_distribution():
    ok = True
    for n in range(1, 13):
        counts = signed_distribution(n, "ldes").counts()
        for d in range(n):
            ok &= counts.get(d, 0) == ballot_number(n + d - 1, n - 1)
    assert report(ok, "criterion 3: ldes counts match ballot numbers for n <= 12")


def test_criterion_04_sign_formula():
    assert run_label("prop2.1", 10)


def test_criterion_05_region_counts():
    ok = inversion_count(FIG) == 10
    pair_cs = [region_counts(FIG, pair).c for pair in match_pairs(FIG).pairs]
    ok &= sorted(pair_cs) == [1, 1, 2, 2]
    ok &= sum(pair_cs) + (12 - 8) == 10
    ok &= report(ok, "criterion 5 spot value: inv = 10 = (2+2+1+1) + 4")
    assert run_label("lemma2.2", 10) and ok


def test_criterion_06_matching_rsk_consistency():
    ok = srs(FIG, cross_check=True) == 56
    ok &= report(ok, "criterion 6 spot value: srs of the size-12 example is 56")
    assert run_label("srs-matching-consistency", 10) and ok


def test_criterion_07_ballot_swap_involution():
    assert run_label("prop3.1", 14)


def test_criterion_08_lis_preserving_involution():
    ok = run_label("phi-involution", 10)
    ok &= run_label("eo-identities", 13)
    spot = signed_distribution(5, "lis").signed().get(3, 0)
    ok &= report(
        spot == ballot_number(2, 1) ** 2 == 1,
        "criterion 8 spot value: e(5,3) - o(5,3) = 1",
    )
    assert ok


def test_criterion_09_signed_lis_identities():
    ok = run_label("thm1.1", 13)
    ok &= report(
        signed_polynomial(3, "lis").coefficients == {(3,): 1},
        "criterion 9 smallest case: signed lis-polynomial of T_3 is q^3",
    )
    assert ok


def test_criterion_10_ldes_preserving_involution():
    ok = run_label("prop4.3", 10)
    fixed = {
        (n, d): sum(
            1
            for w in generate_Tn_ballot(n)
            if capital_psi(w).fixed and ldes(w) == d
        )
        for n, d in [(5, 0), (5, 2), (5, 4), (4, 0), (4, 1), (4, 2), (4, 3)]
    }
    ok &= report(
        fixed == {(5, 0): 1, (5, 2): 1, (5, 4): 0, (4, 0): 1, (4, 1): 1, (4, 2): 1, (4, 3): 1},
        "criterion 10 spot values: f(5,0)=1 f(5,2)=1 f(5,4)=0; f(4,d)=1 for d=0..3",
    )
    assert ok


def test_criterion_11_signed_ldes_identities():
    ok = run_label("thm4.1", 13)
    ok &= report(
        signed_polynomial(2, "ldes").coefficients == {(0,): 1, (1,): -1},
        "criterion 11 smallest case: signed ldes-polynomial of T_2 is 1 - q",
    )
    assert ok


def test_criterion_12_joint_identities():
    assert run_label("cor4.4", 12)


def test_criterion_13_delete_reinsert_bijection():
    assert run_label("thm5.1", 9)


def test_criterion_13_signed_distribution_consequence():
    # Literal claim: the signed distribution of the largest-letter position
    # equals the shifted signed distribution of the maximum descent, n <= 9.
    # Enumeration shows equality for odd n and exact negation for even n
    # (the reinsertion moves the largest letter across lind - ldes - 1
    # positions, flipping the sign when that distance is odd; T_2 already
    # separates the two distributions).  The literal form is asserted
    # unchanged and fails at n = 2.
    mismatches = []
    for n in range(1, 10):
        lhs = signed_distribution(n, "lind").signed()
        rhs = {
            d + 1: v for d, v in signed_distribution(n, "ldes").signed().items()
        }
        if lhs != rhs:
            negated = lhs == {k: -v for k, v in rhs.items()}
            mismatches.append((n, "negated" if negated else "different"))
    report(
        not mismatches,
        "criterion 13 signed-distribution clause: signed lind equals signed"
        f" (ldes+1) for n <= 9 (mismatches: {mismatches})",
    )
    assert not mismatches, (
        "signed lind-distribution differs from signed (ldes+1)-distribution "
        f"at even sizes; each mismatch is an exact negation: {mismatches}"
    )
