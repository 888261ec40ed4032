"""The permutation-level maps: branches, fixed points, delete/reinsert."""
import pytest

from signbalance321 import (
    Not321Avoiding,
    Permutation,
    capital_phi,
    capital_psi,
    descent_set,
    fixed_points_of,
    generate_Tn_ballot,
    identity,
    inverse,
    ldes,
    ldes_lind_bijection,
    ldes_lind_inverse,
    lind,
    lis_oracle,
    parse_permutation,
    sign_by_inversions,
)
from signbalance321.involutions import PHI_BRANCHES, PSI_BRANCHES


class TestCapitalPhi:
    def test_p_side_example(self):
        out = capital_phi(Permutation((2, 3, 1)))
        assert out.image == Permutation((1, 3, 2))
        assert out.branch == "P-side"
        assert not out.fixed

    def test_fixed_examples(self):
        out = capital_phi(identity(4))
        assert out.fixed and out.branch == "fixed" and out.image == identity(4)
        out = capital_phi(Permutation((1, 4, 5, 2, 3)))
        assert out.fixed

    def test_q_side_reached(self):
        branches = {capital_phi(w).branch for w in generate_Tn_ballot(6)}
        assert branches == set(PHI_BRANCHES)

    def test_rejects_non_avoiding(self):
        with pytest.raises(Not321Avoiding):
            capital_phi(Permutation((3, 2, 1)))

    def test_involution_sweep(self):
        for n in range(8):
            for w in generate_Tn_ballot(n):
                out = capital_phi(w)
                assert capital_phi(out.image).image == w
                assert lis_oracle(out.image) == lis_oracle(w)
                assert out.fixed == (out.image == w)
                if not out.fixed:
                    assert sign_by_inversions(out.image) == -sign_by_inversions(w)


class TestCapitalPsi:
    def test_fixed_examples(self):
        assert capital_psi(identity(5)).fixed
        out = capital_psi(Permutation((4, 5, 1, 2, 3)))
        assert out.fixed and out.branch == "fixed"

    def test_forward_example(self):
        out = capital_psi(Permutation((1, 4, 5, 2, 3)))
        assert out.branch == "Q-psi-forward"
        assert out.image == Permutation((4, 1, 5, 2, 3))
        assert ldes(out.image) == ldes(Permutation((1, 4, 5, 2, 3))) == 3
        assert sign_by_inversions(out.image) == -sign_by_inversions(
            Permutation((1, 4, 5, 2, 3))
        )

    def test_inverse_branch_round_trip(self):
        w = Permutation((4, 1, 5, 2, 3))
        out = capital_psi(w)
        assert out.branch == "Q-psi-inverse"
        assert out.image == Permutation((1, 4, 5, 2, 3))

    def test_all_branches_reached(self):
        branches = set()
        for n in range(9):
            for w in generate_Tn_ballot(n):
                branches.add(capital_psi(w).branch)
        assert branches == set(PSI_BRANCHES)

    def test_involution_sweep(self):
        for n in range(8):
            for w in generate_Tn_ballot(n):
                out = capital_psi(w)
                assert capital_psi(out.image).image == w
                assert lis_oracle(out.image) == lis_oracle(w)
                assert ldes(out.image) == ldes(w)
                if not out.fixed:
                    assert sign_by_inversions(out.image) == -sign_by_inversions(w)


class TestFixedPoints:
    def test_examples(self):
        assert {str(w) for w in fixed_points_of("Phi", 5)} == {
            "1 2 3 4 5",
            "1 4 5 2 3",
        }
        assert {str(w) for w in fixed_points_of("Psi", 5)} == {
            "1 2 3 4 5",
            "4 5 1 2 3",
        }
        assert {str(w) for w in fixed_points_of("Phi", 2)} == {"1 2", "2 1"}

    def test_unknown_map(self):
        with pytest.raises(ValueError):
            fixed_points_of("phi", 3)


class TestDeleteReinsert:
    def test_examples(self):
        assert ldes_lind_bijection(Permutation((2, 3, 1))) == Permutation((2, 1, 3))
        assert ldes_lind_bijection(identity(3)) == Permutation((3, 1, 2))
        assert ldes_lind_bijection(Permutation((3, 1, 2))) == Permutation((1, 3, 2))

    def test_inverse_examples(self):
        assert ldes_lind_inverse(Permutation((2, 1, 3))) == Permutation((2, 3, 1))
        assert ldes_lind_inverse(Permutation((3, 1, 2))) == identity(3)

    def test_guards(self):
        with pytest.raises(ValueError):
            ldes_lind_bijection(Permutation(()))
        with pytest.raises(Not321Avoiding):
            ldes_lind_bijection(Permutation((3, 2, 1)))
        with pytest.raises(Not321Avoiding):
            ldes_lind_inverse(Permutation((3, 2, 1)))

    def test_bijection_sweep(self):
        for n in range(1, 9):
            seen = set()
            for w in generate_Tn_ballot(n):
                image = ldes_lind_bijection(w)
                seen.add(image.values)
                assert lind(image) == ldes(w) + 1
                assert ldes_lind_inverse(image) == w
                src = {i for i in descent_set(inverse(w)) if i <= n - 2}
                dst = {i for i in descent_set(inverse(image)) if i <= n - 2}
                assert src == dst
            assert len(seen) == sum(1 for _ in generate_Tn_ballot(n))

    def test_statistic_transport_example(self):
        w = parse_permutation("4 1 2 5 7 8 3 6 9 12 10 11")
        image = ldes_lind_bijection(w)
        assert lind(image) == ldes(w) + 1 == 11
