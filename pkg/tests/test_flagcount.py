"""Exact q-polynomial counts versus brute force over F_2 and F_3."""

from fractions import Fraction

import pytest

from flagstrata import flagcount as fc
from flagstrata import gf
from flagstrata.coweights import (
    automorphism_dim,
    complete_flag_dim,
    is_interleaved,
    partitions,
)
from flagstrata.strata import pairing_count

Q = fc.QPoly((0, 1))
ONE = fc.ONE


# -- polynomial plumbing -------------------------------------------------------

def test_qpoly_arithmetic():
    p = fc.QPoly((1, 2, 3))
    assert (p + fc.QPoly((0, -2))).coeffs == (1, 0, 3)
    assert (p - p).is_zero()
    assert (Q * Q).coeffs == (0, 0, 1)
    assert fc.QPoly((1, 1))(4) == 5
    assert fc.QPoly((0, 0)).is_zero()
    assert fc.QPoly.geometric(3).coeffs == (1, 1, 1)


def test_qpoly_eval_is_ring_hom():
    a, b = fc.QPoly((2, 0, 1)), fc.QPoly((-1, 3))
    for q in (2, 3, 5):
        assert (a * b)(q) == a(q) * b(q)
        assert (a + b)(q) == a(q) + b(q)


def test_qrat_reduction_and_degree():
    r = fc.QRat(fc.QPoly((2, 2)), fc.QPoly((4,)))
    assert r.num.coeffs == (1, 1) and r.den.coeffs == (2,)
    assert r.degree == 1
    assert fc.QRat(Q + ONE, (Q - ONE) * (Q - ONE)).degree == -1
    with pytest.raises(ZeroDivisionError):
        fc.QRat(ONE, fc.QPoly())


def test_qrat_laurent_expansion():
    r = fc.QRat(Q + ONE, (Q - ONE) * (Q - ONE))
    # (q+1)/(q-1)^2 = q^-1 + 3 q^-2 + 5 q^-3 + ...
    assert r.laurent_top(3) == [Fraction(1), Fraction(3), Fraction(5)]
    assert r.leading == Fraction(1)


def test_qrat_sum():
    # 1/(q(q-1)) + 1/(q(q-1)^2) collapses to 1/(q-1)^2
    a = fc.QRat(ONE, Q * (Q - ONE))
    b = fc.QRat(ONE, Q * (Q - ONE) * (Q - ONE))
    total = a + b
    assert total.degree == -2
    assert total.leading == Fraction(1)
    for q in (2, 3, 5):
        assert Fraction(total.num(q), total.den(q)) == Fraction(1, (q - 1) ** 2)


# -- the module model -----------------------------------------------------------

def test_jordan_matrix_type():
    mu = (3, 1)
    t = fc.jordan_matrix(mu)
    assert len(t) == 4
    power = t
    for _ in range(mu[0] - 2):
        power = gf.mat_mul(power, t, 5)
    assert any(any(row) for row in power)  # t^(mu_1 - 1) != 0
    power = gf.mat_mul(power, t, 5)
    assert not any(any(row) for row in power)  # t^(mu_1) = 0


def test_jordan_rank_sequence_recovers_type():
    # rank(t^k) = sum over parts of max(part - k, 0) pins down the Jordan type
    for mu in [(2,), (1, 1), (2, 1), (3, 2), (2, 2, 1)]:
        t = fc.jordan_matrix(mu)
        n = sum(mu)
        power = gf.identity(n)
        for k in range(1, (mu[0] if mu else 0) + 1):
            power = gf.mat_mul(power, t, 2)
            rank = len(gf.rref(power, 2))
            assert rank == sum(max(part - k, 0) for part in mu)


def test_finite_module_validation():
    with pytest.raises(ValueError):
        fc.FiniteModule(5, (1,))
    assert fc.FiniteModule(2, (2, 1)).dim == 3


# -- flag counts -----------------------------------------------------------------

def test_count_flags_brute_examples():
    assert fc.count_flags_brute((2,), 2) == 1
    assert fc.count_flags_brute((1, 1), 2) == 3
    assert fc.count_flags_brute((2, 1), 2) == 5
    with pytest.raises(ValueError):
        fc.count_flags_brute((3, 2, 1), 2)


def test_count_flags_poly_examples():
    assert fc.count_flags_poly((2, 1)) == fc.QPoly((1, 2))
    assert fc.count_flags_poly((2,)) == ONE
    assert fc.count_flags_poly((1, 1, 1)) == (Q + ONE) * (Q * Q + Q + ONE)


def test_count_flags_poly_vs_brute():
    for size in range(6):
        for mu in partitions(size):
            expected = fc.count_flags_brute(mu, 2)
            assert fc.count_flags_poly(mu)(2) == expected
    for size in range(5):
        for mu in partitions(size):
            assert fc.count_flags_poly(mu)(3) == fc.count_flags_brute(mu, 3)


def test_count_flags_poly_degree():
    for size in range(8):
        for mu in partitions(size):
            poly = fc.count_flags_poly(mu)
            if mu:
                assert poly.degree == complete_flag_dim(mu)


def test_corner_weights_sum():
    for size in range(1, 8):
        for mu in partitions(size):
            total = fc.QPoly()
            for w in fc.corner_weights(mu):
                total = total + w
            assert total == fc.QPoly.geometric(len(mu))


def test_aut_order_poly_examples():
    assert fc.aut_order_poly((1, 1)) == (Q * Q - ONE) * (Q * Q - Q)
    assert fc.aut_order_poly((2,)) == Q * (Q - ONE)
    assert fc.aut_order_poly((1,)) == Q - ONE


def test_aut_order_poly_degree():
    for size in range(8):
        for mu in partitions(size):
            if mu:
                assert fc.aut_order_poly(mu).degree == automorphism_dim(mu)


def test_aut_order_poly_vs_brute():
    for size in range(5):
        for mu in partitions(size):
            for q in (2, 3):
                assert fc.aut_order_poly(mu)(q) == fc.count_commutant_units_brute(mu, q)


def test_merge_type():
    assert fc.merge_type((1, 1), (2,)) == (2, 1, 1)
    assert fc.merge_type((2,), (2,)) == (2, 2)
    assert fc.merge_type((1,), ()) == (1,)


# -- masses ----------------------------------------------------------------------

def test_fiber_mass_examples():
    m = fc.fiber_mass((1,), (2,))
    assert m.degree == -2 and is_interleaved((1,), (2,))
    m = fc.fiber_mass((1, 1), (2,))
    assert m.degree == -3 and not is_interleaved((1, 1), (2,))
    m = fc.fiber_mass((1,), (1,))
    assert m.degree == -1 and m.num == Q + ONE


def test_fiber_mass_degree_bound():
    for d in range(6):
        for dp in range(6):
            for mu in partitions(d):
                for mup in partitions(dp):
                    mass = fc.fiber_mass(mu, mup)
                    assert mass.degree <= -dp
                    assert (mass.degree == -dp) == is_interleaved(mu, mup)


def test_collided_fiber_mass_examples():
    _, deg, lead = fc.collided_fiber_mass(1, 1)
    assert (deg, lead) == (-1, 1)
    _, deg, lead = fc.collided_fiber_mass(1, 2)
    assert (deg, lead) == (-2, 3)
    _, deg, lead = fc.collided_fiber_mass(0, 2)
    assert (deg, lead) == (-2, 1)


def test_collided_fiber_mass_leading_counts_interleaved_pairs():
    for d in range(4):
        for dp in range(d, 4):
            _, deg, lead = fc.collided_fiber_mass(d, dp)
            assert deg == -dp
            assert lead == pairing_count(d, dp)


def test_groupoid_dim_check():
    for mu in [(1, 1), (4,), (2, 1), (3, 2, 1), ()]:
        assert fc.groupoid_dim_check(mu)


def test_fiber_mass_table_shape():
    rows = fc.fiber_mass_table(2)
    assert ((1,), (2,), -2, 0, True) in rows
    assert ((1, 1), (2,), -3, -1, False) in rows
