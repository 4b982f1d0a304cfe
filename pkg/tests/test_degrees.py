"""PI degrees: generic route, closed forms, extended algebras."""

import pytest

from pideg import (
    BadEll,
    BadRange,
    EvenEll,
    HypothesisViolated,
    Partition,
    PiDegree,
    PluckerIndex,
    all_white,
    analyze_diagram,
    determinantal_diagram,
    determinantal_invariant_exponent,
    determinantal_toric_cycles,
    diagram_from_text,
    extend,
    matrix_from_diagram,
    mu2,
    pi_degree_determinantal,
    pi_degree_extended_diagram,
    pi_degree_from_factors,
    pi_degree_grassmannian,
    pi_degree_partition,
    pi_degree_qas,
    pi_degree_schubert,
    rectangle_kernel_dim,
    skew_normal_form,
    smallest_prime_factor,
    toric_permutation,
    young_diagram,
)
from pideg.cli import exhaustive_diagrams
from tests.conftest import (
    EG_EXT_PI_AT_5,
    EG_EXT_PI_AT_9,
    FIG_PI_AT_5,
    FIG_YOUNG_PI_AT_5,
)
from tests.oracles import brute_pi_degree, smith_pi_degree


class TestSmallHelpers:
    def test_mu2(self):
        assert [mu2(x) for x in (1, 2, 3, 4, 6, 8, 12)] == [0, 1, 0, 2, 1, 3, 2]

    def test_mu2_rejects_nonpositive(self):
        with pytest.raises(BadRange):
            mu2(0)

    def test_smallest_prime_factor(self):
        assert smallest_prime_factor(2) == 2
        assert smallest_prime_factor(9) == 3
        assert smallest_prime_factor(35) == 5
        assert smallest_prime_factor(97) == 97


class TestPiDegreeValue:
    def test_value_and_str(self):
        pi = PiDegree(ell=6, exponent=4, divisor=2)
        assert pi.value == 648
        assert str(pi) == "6^4/2"
        assert str(PiDegree(ell=5, exponent=4)) == "5^4"

    def test_divisor_must_divide(self):
        with pytest.raises(BadRange):
            PiDegree(ell=5, exponent=2, divisor=3)

    def test_factor_product_is_checked(self):
        from pideg import InternalVerificationFailed

        with pytest.raises(InternalVerificationFailed):
            PiDegree(ell=5, exponent=2, factors=(5, 4))


class TestGenericRoute:
    def test_reference_board(self, fig_diagram):
        M = matrix_from_diagram(fig_diagram)
        assert pi_degree_qas(M, 5).value == FIG_PI_AT_5
        assert pi_degree_qas(M, 2).value == 8
        assert pi_degree_qas(M, 3).value == 81
        assert pi_degree_qas(M, 4).value == 128

    def test_from_factors(self):
        pi = pi_degree_from_factors((1, 1, 1, 2), 6)
        assert pi.value == 648
        assert pi.factors == (6, 6, 6, 3)

    def test_ell_too_small(self):
        with pytest.raises(BadEll):
            pi_degree_from_factors((1,), 1)

    def test_empty_matrix_gives_trivial_degree(self):
        from pideg import SkewIntMatrix

        assert pi_degree_qas(SkewIntMatrix(()), 7).value == 1

    def test_matches_group_order_counting(self):
        # Direct counting over Z/ell on every 2x2 board.
        for d in exhaustive_diagrams(2, 2):
            M = matrix_from_diagram(d)
            for ell in (2, 3, 4, 5, 6):
                assert pi_degree_qas(M, ell).value == brute_pi_degree(
                    M.to_lists(), ell
                )

    def test_matches_classical_smith_route(self):
        for d in exhaustive_diagrams(2, 3):
            M = matrix_from_diagram(d)
            for ell in (2, 3, 4, 5, 6, 9):
                assert pi_degree_qas(M, ell).value == smith_pi_degree(
                    M.to_lists(), ell
                )


class TestPartitionClosedForm:
    def test_reference_shape(self):
        pi = pi_degree_partition(Partition((5, 3, 2)), 5, cross_check=True)
        assert pi.value == FIG_YOUNG_PI_AT_5

    def test_even_ell_rejected(self):
        with pytest.raises(EvenEll):
            pi_degree_partition(Partition((2, 1)), 4)

    def test_tiny_ell_rejected(self):
        with pytest.raises(BadEll):
            pi_degree_partition(Partition((2, 1)), 2)

    def test_empty_shape(self):
        assert pi_degree_partition(Partition(()), 7).value == 1

    def test_cross_checked_small_shapes(self):
        shapes = [(1,), (2,), (2, 1), (3, 1), (2, 2), (3, 2, 1), (4, 4, 2)]
        for parts in shapes:
            for ell in (3, 5, 9):
                pi_degree_partition(Partition(parts), ell, cross_check=True)


class TestDeterminantalClosedForm:
    def test_invariant_exponent(self):
        assert determinantal_invariant_exponent(3, 1) == 2
        assert determinantal_invariant_exponent(4, 2) == 5
        with pytest.raises(BadRange):
            determinantal_invariant_exponent(3, 3)

    def test_frozen_values(self):
        assert pi_degree_determinantal(3, 1, 4).value == 16
        assert pi_degree_determinantal(4, 2, 3).value == 243
        assert pi_degree_determinantal(3, 1, 3).value == 9

    def test_even_ell_divisor(self):
        pi = pi_degree_determinantal(4, 2, 4)
        assert pi.divisor == 4 and pi.value == 256

    def test_ell_two_rejected(self):
        with pytest.raises(BadEll):
            pi_degree_determinantal(3, 1, 2)

    def test_against_classical_smith_route(self):
        for n in range(2, 6):
            for t in range(1, n):
                rows = matrix_from_diagram(determinantal_diagram(n, t)).to_lists()
                for ell in (3, 4, 5, 6):
                    assert pi_degree_determinantal(n, t, ell).value == (
                        smith_pi_degree(rows, ell)
                    )

    def test_closed_form_cycles_match_traced(self):
        for n in range(2, 7):
            for t in range(1, n):
                closed = determinantal_toric_cycles(n, t)
                traced = toric_permutation(determinantal_diagram(n, t)).cycles
                assert closed == traced
                assert closed.odd_cycle_count == t

    def test_cycle_lengths_are_even(self):
        for n in range(2, 8):
            for t in range(1, n):
                for cycle in determinantal_toric_cycles(n, t).cycles:
                    assert len(cycle) % 2 == 0


class TestExtendedClosedForm:
    def test_border_adds_one_factor_here(self, fig_diagram):
        # This board's kernel vector has nonzero sum and 5 has no small
        # prime factor, so the border contributes a clean extra ell.
        assert pi_degree_extended_diagram(fig_diagram, 5, cross_check=True).value == 3125

    def test_small_prime_case(self, eg_diagram):
        assert pi_degree_extended_diagram(eg_diagram, 5, cross_check=True).value == (
            EG_EXT_PI_AT_5
        )
        assert pi_degree_extended_diagram(eg_diagram, 9, cross_check=True).value == (
            EG_EXT_PI_AT_9
        )

    def test_even_ell_rejected(self, fig_diagram):
        with pytest.raises(EvenEll):
            pi_degree_extended_diagram(fig_diagram, 4)

    def test_all_cases_against_generic(self):
        # Exhaust 3x3 boards at several odd levels; cross_check compares
        # the case analysis with the generic route on the bordered matrix.
        for d in exhaustive_diagrams(3, 3):
            for ell in (3, 5, 9, 15):
                pi_degree_extended_diagram(d, ell, cross_check=True)


class TestSchubertClosedForm:
    def test_frozen_value(self):
        pi = pi_degree_schubert(PluckerIndex((1, 3, 4, 7), 8), 5, cross_check=True)
        assert pi.value == 15625

    def test_even_ell_hypothesis(self):
        with pytest.raises(HypothesisViolated):
            pi_degree_schubert(PluckerIndex((1, 3), 4), 6)

    def test_ell_two_rejected(self):
        with pytest.raises(BadEll):
            pi_degree_schubert(PluckerIndex((1, 3), 4), 2)

    def test_single_row_box(self):
        # A one-row box has hypothesis bound 1, so ell = 3 qualifies.
        pi_degree_schubert(PluckerIndex((2,), 4), 3, cross_check=True)

    def test_cross_checked_all_cells_in_small_ambients(self):
        from itertools import combinations

        for n in range(2, 7):
            for m in range(1, n):
                for gamma in combinations(range(1, n + 1), m):
                    for ell in (3, 5):
                        pi_degree_schubert(
                            PluckerIndex(gamma, n), ell, cross_check=True
                        )


class TestGrassmannianClosedForm:
    def test_frozen_values(self):
        assert pi_degree_grassmannian(2, 4, 5).value == 25
        assert pi_degree_grassmannian(2, 6, 5).value == 625
        assert pi_degree_grassmannian(4, 8, 5).exponent == 7

    def test_kernel_dimension_rule(self):
        # gcd(a, b) kernel directions exactly when the sides share their
        # 2-adic valuation, none otherwise.
        assert rectangle_kernel_dim(2, 2) == 2
        assert rectangle_kernel_dim(2, 4) == 0
        assert rectangle_kernel_dim(3, 2) == 0
        assert rectangle_kernel_dim(3, 5) == 1
        assert rectangle_kernel_dim(3, 3) == 3
        assert rectangle_kernel_dim(4, 4) == 4
        assert rectangle_kernel_dim(6, 2) == 2

    def test_kernel_dimension_against_normal_form(self):
        for a in range(1, 6):
            for b in range(1, 6):
                snf = skew_normal_form(matrix_from_diagram(all_white(a, b)))
                assert rectangle_kernel_dim(a, b) == snf.kernel_dim

    def test_bad_shape(self):
        with pytest.raises(BadRange):
            pi_degree_grassmannian(3, 3, 5)

    def test_even_ell_hypothesis(self):
        with pytest.raises(HypothesisViolated):
            pi_degree_grassmannian(2, 4, 6)

    def test_cross_checked_small(self):
        for m in range(1, 5):
            for n in range(m + 1, 7):
                for ell in (3, 5, 7):
                    pi_degree_grassmannian(m, n, ell, cross_check=True)


class TestDiagramAnalysis:
    def test_reference_board(self, fig_diagram):
        analysis = analyze_diagram(fig_diagram, (5, 3), extended=True)
        assert analysis.invariant_factors == (1, 1, 1, 2)
        assert analysis.kernel_dim == 1
        assert not analysis.one_perp
        assert [pi.value for pi in analysis.degrees] == [625, 81]
        assert analysis.extended.invariant_factors == (1, 1, 1, 2, 2)
        assert analysis.extended.kernel_dim == 0
        assert [pi.value for pi in analysis.extended.degrees] == [3125, 243]

    def test_without_extension(self, eg_diagram):
        analysis = analyze_diagram(eg_diagram)
        assert analysis.extended is None and analysis.degrees == ()
