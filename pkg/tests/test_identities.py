"""The verification driver: labels, reports, and output formats."""
import json

import pytest

from signbalance321 import (
    IDENTITY_LABELS,
    UnknownIdentity,
    check_identity_at,
    report_csv,
    report_json,
    report_rows,
    verify,
)
from signbalance321.identities import IdentityCheck, VerificationReport, applicable_sizes


def test_all_labels_pass_at_small_sizes():
    for label in IDENTITY_LABELS:
        report = verify(label, 7)
        assert report.passed, (label, report.first_failure())


def test_unknown_label():
    with pytest.raises(UnknownIdentity):
        verify("thm9.9", 5)
    with pytest.raises(UnknownIdentity):
        check_identity_at("nope", 3)


def test_applicable_sizes():
    assert applicable_sizes("thm1.1", 6) == [3, 4, 5, 6]
    assert applicable_sizes("thm4.1", 4) == [2, 3, 4]
    assert applicable_sizes("prop4.3", 4) == [2, 3, 4]
    assert applicable_sizes("prop2.1", 3) == [1, 2, 3]


def test_report_rows_schema():
    report = verify("thm1.1", 5)
    rows = report_rows(report)
    assert [r["n"] for r in rows] == [3, 4, 5]
    for row in rows:
        assert set(row) == {"identity", "n", "pass", "lhs", "rhs", "counterexample"}
        assert row["identity"] == "thm1.1"
        assert row["pass"] is True
        assert row["counterexample"] is None
        assert isinstance(row["lhs"], dict) and isinstance(row["rhs"], dict)


def test_json_round_trip_and_determinism():
    report = verify("prop2.1", 5)
    doc = report_json(report)
    assert doc == report_json(verify("prop2.1", 5))
    rows = json.loads(doc)
    assert all(row["pass"] for row in rows)


def test_workers_do_not_change_output():
    sequential = report_json(verify("lemma2.2", 7))
    parallel = report_json(verify("lemma2.2", 7, workers=3))
    assert sequential == parallel


def test_csv_format():
    report = verify("eo-identities", 4)
    lines = report_csv(report).strip().splitlines()
    assert lines[0] == "identity,n,key,lhs,rhs,pass"
    assert all(line.startswith("eo-identities,") for line in lines[1:])
    assert len(lines) > 1


def test_failure_rendering():
    # A hand-built failing report renders its counterexample.
    check = IdentityCheck(
        identity="demo",
        n=3,
        passed=False,
        lhs={"violations": 1},
        rhs={"violations": 0},
        counterexample="2 3 1",
    )
    report = VerificationReport("demo", 3, [check])
    assert not report.passed
    assert report.first_failure() is check
    rows = report_rows(report)
    assert rows[0]["counterexample"] == "2 3 1"
    csv_doc = report_csv(report)
    assert "demo,3,violations,1,0,False" in csv_doc


def test_thm1_1_polynomials_in_report():
    report = verify("thm1.1", 3)
    row = report_rows(report)[0]
    assert row["lhs"] == {"3": 1}
    assert row["rhs"] == {"3": 1}


def test_delete_reinsert_label_to_ten():
    # Includes the joint equidistribution with inverse-descent fibers.
    assert verify("thm5.1", 10).passed


def test_lind_and_shifted_ldes_equidistributed_to_ten():
    from signbalance321 import signed_distribution

    for n in range(1, 11):
        lhs = signed_distribution(n, "lind").counts()
        rhs = {
            d + 1: c
            for d, c in signed_distribution(n, "ldes").counts().items()
        }
        assert lhs == rhs
