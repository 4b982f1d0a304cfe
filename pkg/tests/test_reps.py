"""Monomial matrices and representations of quantum affine spaces."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pideg import (
    BadEll,
    GcdViolation,
    MonomialMatrix,
    NoRootOfUnity,
    NotPrime,
    SkewIntMatrix,
    TooLarge,
    ZeroDim,
    clock_shift,
    determinantal_diagram,
    determinantal_rep_dimension_check,
    find_relation_violation,
    irreducibility_check,
    kron,
    matrix_from_diagram,
    pi_degree_qas,
    qas_representation,
    verify_relations,
)
from pideg.reps import QASRepresentation


def monomials(dim: int, ell: int):
    return st.tuples(
        st.permutations(list(range(dim))),
        st.lists(st.integers(0, ell - 1), min_size=dim, max_size=dim),
    ).map(lambda t: MonomialMatrix(ell, tuple(t[0]), tuple(t[1])))


class TestMonomialMatrix:
    def test_identity(self):
        ident = MonomialMatrix.identity(3, 5)
        assert ident.is_identity
        assert ident.dense_mod_p(7, 2) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_zero_dimension_rejected(self):
        with pytest.raises(ZeroDim):
            MonomialMatrix(5, (), ())

    def test_matmul_matches_dense(self):
        # q evaluated at 2, which has order 4 modulo 5.
        p, zeta, ell = 5, 2, 4
        a = MonomialMatrix(ell, (1, 2, 0), (3, 0, 1))
        b = MonomialMatrix(ell, (2, 0, 1), (1, 1, 2))
        left = (a @ b).dense_mod_p(p, zeta)
        da, db = a.dense_mod_p(p, zeta), b.dense_mod_p(p, zeta)
        dense = [
            [sum(da[i][k] * db[k][j] for k in range(3)) % p for j in range(3)]
            for i in range(3)
        ]
        assert left == dense

    @settings(deadline=None, max_examples=50)
    @given(monomials(4, 6), monomials(4, 6), monomials(4, 6))
    def test_matmul_is_associative(self, a, b, c):
        assert (a @ b) @ c == a @ (b @ c)

    @settings(deadline=None, max_examples=50)
    @given(monomials(5, 4))
    def test_inverse(self, a):
        ident = MonomialMatrix.identity(5, 4)
        assert a @ a.inverse() == ident
        assert a.inverse() @ a == ident

    def test_pow(self):
        x, y = clock_shift(3, 1)
        g = x @ y
        assert g**0 == MonomialMatrix.identity(3, 3)
        assert g**2 == g @ g
        assert g**-1 == g.inverse()
        assert g**-2 == (g @ g).inverse()

    def test_scalar_power_vs(self):
        x, y = clock_shift(5, 2)
        # x y = q^2 y x, so comparing xy against yx reports exponent 2.
        assert (x @ y).scalar_power_vs(y @ x) == 2
        # x^2 is not a scalar multiple of y.
        assert (x @ x).scalar_power_vs(y) is None


class TestClockShift:
    def test_commutation_scalar(self):
        for ell in (2, 3, 4, 5, 9):
            for h in range(1, ell):
                from math import gcd

                if gcd(h, ell) != 1:
                    continue
                x, y = clock_shift(ell, h)
                assert (x @ y).scalar_power_vs(y @ x) == h % ell

    def test_order(self):
        for ell in (2, 3, 5):
            x, y = clock_shift(ell, 1)
            assert (x**ell).is_identity and (y**ell).is_identity

    def test_even_ell_product_order_defect(self):
        # At ell = 4 the product xy has (xy)^4 = q^6 = q^2 times the
        # identity, not the identity: even levels genuinely differ.
        x, y = clock_shift(4, 1)
        g = (x @ y) ** 4
        assert not g.is_identity
        assert g.scalar_power_vs(MonomialMatrix.identity(4, 4)) == 2

    def test_shared_factor_rejected(self):
        with pytest.raises(GcdViolation):
            clock_shift(6, 3)

    def test_tiny_ell_rejected(self):
        with pytest.raises(BadEll):
            clock_shift(1, 1)


class TestKron:
    def test_mixed_product_rule(self):
        x3, y3 = clock_shift(3, 1)
        a, b, c, d = x3, y3, y3, x3
        assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)

    def test_identity_legs(self):
        ident = MonomialMatrix.identity(3, 3)
        x, _ = clock_shift(3, 1)
        assert kron(ident, x).dim == 9
        assert kron(x, ident).dim == 9
        assert kron(ident, x) != kron(x, ident)


class TestQASRepresentation:
    def test_dimension_is_the_pi_degree(self, fig_diagram):
        M = matrix_from_diagram(fig_diagram)
        rep = qas_representation(M, 5)
        assert rep.dim == pi_degree_qas(M, 5).value == 625

    def test_relations_hold(self, fig_diagram):
        M = matrix_from_diagram(fig_diagram)
        rep = qas_representation(M, 3)
        assert verify_relations(rep, M)
        assert find_relation_violation(rep, M) is None

    def test_generators_have_order_ell_at_odd_ell(self):
        M = matrix_from_diagram(determinantal_diagram(3, 1))
        for ell in (3, 5):
            rep = qas_representation(M, ell)
            for g in rep.generator_images:
                assert (g**ell).is_identity

    def test_violation_is_reported(self, fig_diagram):
        M = matrix_from_diagram(fig_diagram)
        rep = qas_representation(M, 3)
        # Tamper with one generator image: swap in the wrong power.
        images = list(rep.generator_images)
        images[0] = images[0] @ images[0]
        broken = QASRepresentation(
            ell=rep.ell,
            dim=rep.dim,
            invariant_factors=rep.invariant_factors,
            kernel_dim=rep.kernel_dim,
            e_inverse=rep.e_inverse,
            block_images=rep.block_images,
            generator_images=tuple(images),
        )
        assert find_relation_violation(broken, M) is not None

    def test_shared_factor_with_ell_rejected(self):
        M = SkewIntMatrix(((0, 2), (-2, 0)))
        with pytest.raises(GcdViolation):
            qas_representation(M, 4)

    def test_empty_matrix_gives_trivial_representation(self):
        rep = qas_representation(SkewIntMatrix(()), 5)
        assert rep.dim == 1 and rep.generator_images == ()

    def test_kernel_generators_are_trivial(self):
        # A zero matrix has only kernel directions; all images are scalars
        # of the one-dimensional identity... in fact the identity itself.
        M = SkewIntMatrix(((0, 0), (0, 0)))
        rep = qas_representation(M, 3)
        assert rep.dim == 1
        assert all(g.is_identity for g in rep.generator_images)


class TestIrreducibility:
    def test_clock_and_shift_are_irreducible(self):
        M = SkewIntMatrix(((0, 1), (-1, 0)))
        rep = qas_representation(M, 3)
        assert irreducibility_check(rep, 7)

    def test_scalar_representation_is_not(self):
        ident = MonomialMatrix.identity(3, 3)
        fake = QASRepresentation(
            ell=3,
            dim=3,
            invariant_factors=(1,),
            kernel_dim=0,
            e_inverse=((1, 0),) * 2,
            block_images=(ident, ident),
            generator_images=(ident, ident),
        )
        assert not irreducibility_check(fake, 7)

    def test_requires_prime_modulus(self):
        M = SkewIntMatrix(((0, 1), (-1, 0)))
        rep = qas_representation(M, 3)
        with pytest.raises(NotPrime):
            irreducibility_check(rep, 6)

    def test_requires_a_root_of_unity(self):
        M = SkewIntMatrix(((0, 1), (-1, 0)))
        rep = qas_representation(M, 5)
        with pytest.raises(NoRootOfUnity):
            irreducibility_check(rep, 7)

    def test_size_bound(self):
        M = SkewIntMatrix(((0, 1), (-1, 0)))
        rep = qas_representation(M, 5)
        with pytest.raises(TooLarge):
            irreducibility_check(rep, 11, bound=7)


class TestDeterminantalRepresentations:
    def test_dimension_check(self):
        assert determinantal_rep_dimension_check(3, 1, 3)
        assert determinantal_rep_dimension_check(4, 2, 5)
