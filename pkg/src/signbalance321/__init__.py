"""
Statistics, tableau encodings, involutions, and exact sign-balance
verification for 321-avoiding permutations.

The package is organized around one chain of encodings: a 321-avoiding
permutation corresponds, via row insertion, to a pair of standard Young
tableaux with at most two rows, and each such tableau is a ballot sequence.
Signs, descents, and increasing-subsequence lengths can all be read off the
ballot side, which is where the sign-reversing involutions act.

Everything is exact integer arithmetic; every identity is checked by
exhaustive enumeration at desk scale.
"""
from .ballots import (
    BallotClass,
    BallotClassTag,
    BallotSequence,
    ballot_sign,
    classify,
    delta,
    epsilon,
    generate_ballot_sequences,
    ones_count,
    parse_ballot,
    phi,
    psi,
    psi_inverse,
)
from .enumeration import (
    SignedDistribution,
    SignedPolynomial,
    a_star_count,
    ballot_number,
    catalan,
    generate_Tn_ballot,
    generate_Tn_filter,
    psi_fixed_point_count,
    signed_distribution,
    signed_polynomial,
)
from .errors import (
    LimitExceeded,
    MalformedPair,
    MalformedTableau,
    Not321Avoiding,
    NotAMatchedPair,
    NotBallot,
    NotInDomain,
    ThirdRowRequired,
    UnknownIdentity,
)
from .identities import (
    IDENTITY_LABELS,
    IdentityCheck,
    VerificationReport,
    check_identity_at,
    report_csv,
    report_json,
    report_rows,
    verify,
)
from .involutions import (
    MapOutcome,
    capital_phi,
    capital_psi,
    fixed_points_of,
    ldes_lind_bijection,
    ldes_lind_inverse,
)
from .matching import Matching, RegionCounts, match_pairs, region_counts, sign_by_srs, srs
from .permutations import (
    DescentSet,
    Permutation,
    anti_excedances,
    descent_set,
    excedances,
    fixed_points,
    identity,
    inverse,
    inversion_count,
    is_321_avoiding,
    is_bi_increasing,
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
    ldes_from_recording,
    parse_tableau,
    rsk,
    tableau_to_ballot,
)

__version__ = "0.1.0"

__all__ = [
    "BallotClass",
    "BallotClassTag",
    "BallotSequence",
    "DescentSet",
    "IDENTITY_LABELS",
    "IdentityCheck",
    "LimitExceeded",
    "MalformedPair",
    "MalformedTableau",
    "MapOutcome",
    "Matching",
    "Not321Avoiding",
    "NotAMatchedPair",
    "NotBallot",
    "NotInDomain",
    "Permutation",
    "RegionCounts",
    "SignedDistribution",
    "SignedPolynomial",
    "TableauPair",
    "ThirdRowRequired",
    "TwoRowTableau",
    "UnknownIdentity",
    "VerificationReport",
    "a_star_count",
    "anti_excedances",
    "ballot_number",
    "ballot_sign",
    "ballot_to_tableau",
    "capital_phi",
    "capital_psi",
    "catalan",
    "check_identity_at",
    "classify",
    "delta",
    "descent_set",
    "epsilon",
    "excedances",
    "fixed_points",
    "fixed_points_of",
    "generate_Tn_ballot",
    "generate_Tn_filter",
    "generate_ballot_sequences",
    "identity",
    "inverse",
    "inverse_rsk",
    "inversion_count",
    "is_321_avoiding",
    "is_bi_increasing",
    "ldes",
    "ldes_from_recording",
    "ldes_lind_bijection",
    "ldes_lind_inverse",
    "lind",
    "lis_oracle",
    "match_pairs",
    "ones_count",
    "parse_ballot",
    "parse_permutation",
    "parse_tableau",
    "phi",
    "psi",
    "psi_fixed_point_count",
    "psi_inverse",
    "region_counts",
    "report_csv",
    "report_json",
    "report_rows",
    "rsk",
    "sign_by_inversions",
    "sign_by_srs",
    "signed_distribution",
    "signed_polynomial",
    "srs",
    "tableau_to_ballot",
    "verify",
]
