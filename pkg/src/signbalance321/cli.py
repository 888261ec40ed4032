"""
Command-line front end.

Verbs: ``stats``, ``verify``, ``map``, ``rsk``, ``unrsk``, ``enumerate``.
Exit codes: 0 when every requested check passes, 1 when an identity is
violated (the counterexample is part of the report), 2 for usage or domain
errors.

Output is deterministic: identical invocations produce byte-identical
output, and verification reports are independent of the worker count.  When
the environment variable ``SIGNBALANCE321_OUTPUT_DIR`` is set, reports from
``stats`` and ``verify`` are additionally written into that directory under
a deterministic file name.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .ballots import BallotClassTag, classify, delta, epsilon, parse_ballot
from .ballots import phi as ballot_phi
from .ballots import psi as ballot_psi
from .ballots import psi_inverse as ballot_psi_inverse
from .enumeration import generate_Tn_ballot, signed_distribution
from .errors import NotInDomain
from .identities import (
    IDENTITY_LABELS,
    IDENTITY_SUMMARIES,
    report_csv,
    report_json,
    report_rows,
    verify,
)
from .involutions import capital_phi, capital_psi, ldes_lind_bijection
from .permutations import (
    ldes,
    lind,
    lis_oracle,
    parse_permutation,
    sign_by_inversions,
)
from .tableaux import (
    TableauPair,
    TwoRowTableau,
    ballot_to_tableau,
    inverse_rsk,
    rsk,
    tableau_to_ballot,
)

ENV_OUTPUT_DIR = "SIGNBALANCE321_OUTPUT_DIR"


def _maybe_write(document: str, filename: str) -> None:
    out_dir = os.environ.get(ENV_OUTPUT_DIR)
    if not out_dir:
        return
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, filename), "w", encoding="utf-8") as fh:
        fh.write(document)


def _tableau_inline(t: TwoRowTableau) -> str:
    first = " ".join(str(x) for x in t.row1)
    if not t.row2:
        return first
    return first + " / " + " ".join(str(x) for x in t.row2)


def _cmd_stats(args: argparse.Namespace) -> int:
    if args.by == "sign":
        base = signed_distribution(args.n, "lis", args.allow_large)
        even = sum(e for e, _o in base.rows.values())
        odd = sum(o for _e, o in base.rows.values())
        rows = [
            {"value": 1, "count": even, "even": even, "odd": 0, "signed": even},
            {"value": -1, "count": odd, "even": 0, "odd": odd, "signed": -odd},
        ]
    else:
        dist = signed_distribution(args.n, args.by, args.allow_large)
        rows = [
            {
                "value": v,
                "count": e + o,
                "even": e,
                "odd": o,
                "signed": e - o,
            }
            for v, (e, o) in sorted(dist.rows.items())
        ]
    if args.json:
        document = json.dumps(
            {"n": args.n, "statistic": args.by, "rows": rows},
            indent=2,
            sort_keys=True,
        )
        ext = "json"
    elif args.csv:
        lines = ["value,count,even,odd,signed"]
        lines += [
            f"{r['value']},{r['count']},{r['even']},{r['odd']},{r['signed']}"
            for r in rows
        ]
        document = "\n".join(lines) + "\n"
        ext = "csv"
    else:
        lines = [f"{'value':>6} {'count':>8} {'even':>8} {'odd':>8} {'signed':>8}"]
        lines += [
            f"{r['value']:>6} {r['count']:>8} {r['even']:>8} {r['odd']:>8} {r['signed']:>8}"
            for r in rows
        ]
        document = "\n".join(lines) + "\n"
        ext = "txt"
    print(document, end="")
    _maybe_write(document, f"stats-{args.by}-n{args.n}.{ext}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify(
        args.identity, args.n_max, workers=args.workers, allow_large=args.allow_large
    )
    if args.json:
        document = report_json(report) + "\n"
        ext = "json"
    elif args.csv:
        document = report_csv(report)
        ext = "csv"
    else:
        lines = []
        for row in report_rows(report):
            status = "PASS" if row["pass"] else "FAIL"
            line = f"{row['identity']} n={row['n']}: {status}"
            if not row["pass"]:
                line += f"  lhs={json.dumps(row['lhs'], sort_keys=True)}"
                line += f"  rhs={json.dumps(row['rhs'], sort_keys=True)}"
                if row["counterexample"]:
                    line += f"  counterexample: {row['counterexample']}"
            lines.append(line)
        summary = "all checks passed" if report.passed else "FAILED"
        lines.append(f"{report.identity} up to n={report.n_max}: {summary}")
        document = "\n".join(lines) + "\n"
        ext = "txt"
    print(document, end="")
    _maybe_write(document, f"verify-{args.identity}-n{args.n_max}.{ext}")
    if not report.passed:
        failure = report.first_failure()
        if failure is not None and failure.counterexample:
            print(
                f"counterexample at n={failure.n}: {failure.counterexample}",
                file=sys.stderr,
            )
        return 1
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    if args.which != "psi" and args.d is not None:
        print("error: --d applies only to --which psi", file=sys.stderr)
        return 2
    if args.which in ("phi", "psi"):
        b = parse_ballot(args.input)
        if args.which == "phi":
            image = ballot_phi(b)
            if args.audit:
                print(f"epsilon: {epsilon(b)}")
        else:
            if args.d is None:
                print("error: --which psi requires --d", file=sys.stderr)
                return 2
            cls = classify(b)
            if cls.tag is BallotClassTag.A_STAR:
                image = ballot_psi(b, args.d)
                direction = "forward"
            elif cls.tag is BallotClassTag.B_STAR:
                image = ballot_psi_inverse(b, args.d)
                direction = "inverse"
            else:
                raise NotInDomain(
                    f"psi needs class A* or B*, got {cls.label} for {b}"
                )
            if args.audit:
                print(f"class: {cls.label}  delta: {delta(b)}  direction: {direction}")
        print(str(image))
        return 0
    w = parse_permutation(args.input)
    if args.which == "delshift":
        image = ldes_lind_bijection(w)
        print(str(image))
        if args.audit:
            print(f"ldes: {ldes(w)} -> lind: {lind(image)}")
        return 0
    outcome = capital_phi(w) if args.which == "Phi" else capital_psi(w)
    print(str(outcome.image))
    print(f"branch: {outcome.branch}")
    if args.audit:
        before = rsk(w)
        after = rsk(outcome.image)
        print(
            f"p: {tableau_to_ballot(before.insertion)} -> "
            f"{tableau_to_ballot(after.insertion)}"
        )
        print(
            f"q: {tableau_to_ballot(before.recording)} -> "
            f"{tableau_to_ballot(after.recording)}"
        )
        print(
            f"sign: {sign_by_inversions(w)} -> {sign_by_inversions(outcome.image)}"
        )
    return 0


def _cmd_rsk(args: argparse.Namespace) -> int:
    w = parse_permutation(args.perm)
    pair = rsk(w)
    print(f"P: {_tableau_inline(pair.insertion)}")
    print(f"Q: {_tableau_inline(pair.recording)}")
    return 0


def _cmd_unrsk(args: argparse.Namespace) -> int:
    p = parse_ballot(args.p)
    q = parse_ballot(args.q)
    pair = TableauPair(ballot_to_tableau(p), ballot_to_tableau(q))
    print(str(inverse_rsk(pair)))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    for w in generate_Tn_ballot(args.n, args.allow_large):
        if args.lis is not None and lis_oracle(w) != args.lis:
            continue
        if args.ldes is not None and ldes(w) != args.ldes:
            continue
        if args.emit == "perms":
            print(str(w))
        elif args.emit == "ballots":
            pair = rsk(w)
            print(
                f"{tableau_to_ballot(pair.insertion)} "
                f"{tableau_to_ballot(pair.recording)}"
            )
        else:
            pair = rsk(w)
            print(
                f"{_tableau_inline(pair.insertion)}\t"
                f"{_tableau_inline(pair.recording)}"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signbalance321",
        description="Statistics, tableau encodings, involutions, and exact "
        "sign-balance verification for 321-avoiding permutations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    stats = sub.add_parser("stats", help="distribution of a statistic over T_n")
    stats.add_argument("--n", type=int, required=True)
    stats.add_argument("--by", required=True, choices=("lis", "ldes", "lind", "sign"))
    fmt = stats.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    stats.add_argument("--allow-large", action="store_true", dest="allow_large")
    stats.set_defaults(handler=_cmd_stats)

    ver = sub.add_parser(
        "verify",
        help="verify a named identity exhaustively",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="labels:\n"
        + "\n".join(
            f"  {label}: {IDENTITY_SUMMARIES[label]}" for label in IDENTITY_LABELS
        ),
    )
    ver.add_argument("--identity", required=True, choices=IDENTITY_LABELS)
    ver.add_argument("--n-max", type=int, required=True, dest="n_max")
    fmt = ver.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    ver.add_argument("--workers", type=int, default=1)
    ver.add_argument("--allow-large", action="store_true", dest="allow_large")
    ver.set_defaults(handler=_cmd_verify)

    mp = sub.add_parser("map", help="apply a map to a permutation or ballot string")
    mp.add_argument("--which", required=True, choices=("phi", "psi", "Phi", "Psi", "delshift"))
    mp.add_argument("--input", required=True)
    mp.add_argument("--d", type=int, default=None)
    mp.add_argument("--audit", action="store_true")
    mp.set_defaults(handler=_cmd_map)

    rk = sub.add_parser("rsk", help="insertion and recording tableaux of a permutation")
    rk.add_argument("perm")
    rk.set_defaults(handler=_cmd_rsk)

    un = sub.add_parser("unrsk", help="permutation of a ballot-encoded tableau pair")
    un.add_argument("--p", required=True)
    un.add_argument("--q", required=True)
    un.set_defaults(handler=_cmd_unrsk)

    en = sub.add_parser("enumerate", help="stream T_n, optionally filtered")
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--lis", type=int, default=None)
    en.add_argument("--ldes", type=int, default=None)
    en.add_argument("--emit", choices=("perms", "ballots", "tableaux"), default="perms")
    en.add_argument("--allow-large", action="store_true", dest="allow_large")
    en.set_defaults(handler=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
