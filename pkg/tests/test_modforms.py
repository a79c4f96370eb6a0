"""Tests for the weight-k space structure, the matching constructor, and P(j)."""

import random
from fractions import Fraction

import pytest

from theta_forms.modforms import (
    BasisCoordinates,
    RatPoly,
    basis,
    basis_coordinates,
    check_initial_vanishing_propagates,
    combination,
    congruent_mod_p,
    constructor,
    default_order,
    pf_polynomial,
    weight_indices,
)
from theta_forms.qseries import QSeries, delta, eisenstein, theta_H, theta_Z

# ---------------------------------------------------------------------------
# RatPoly


def test_ratpoly_basic():
    p = RatPoly([1, 2, 3])
    q = RatPoly([0, 1])
    assert p.degree == 2
    assert (p + q).coeffs == [1, 3, 3]
    assert (p * q).coeffs == [0, 1, 2, 3]
    assert (q**3).coeffs == [0, 0, 0, 1]
    assert p.evaluate(2) == 1 + 4 + 12
    assert p.evaluate(Fraction(1, 2)) == Fraction(11, 4)
    assert RatPoly([1, 0, 0]).degree == 0
    assert RatPoly([]).is_zero()
    assert (p - p).is_zero()
    assert RatPoly([0]).degree == -1


def test_ratpoly_mul_matches_naive():
    rng = random.Random(1)
    for _ in range(20):
        a = [rng.randrange(-5, 6) for _ in range(6)]
        b = [rng.randrange(-5, 6) for _ in range(5)]
        naive = [0] * 10
        for i in range(6):
            for j in range(5):
                naive[i + j] += a[i] * b[j]
        while naive and not naive[-1]:
            naive.pop()
        assert (RatPoly(a) * RatPoly(b)).coeffs == naive


# ---------------------------------------------------------------------------
# weight indices


def test_weight_indices_known():
    w = weight_indices(52)
    assert (w.n, w.a, w.b) == (4, 1, 0)
    w = weight_indices(108)
    assert (w.n, w.a, w.b) == (9, 0, 0)
    w = weight_indices(6)
    assert (w.n, w.a, w.b) == (0, 0, 1)


def test_weight_indices_all_even_weights():
    for k in range(4, 400, 2):
        w = weight_indices(k)
        assert k == 12 * w.n + 4 * w.a + 6 * w.b
        assert w.n >= 0 and w.a in (0, 1, 2) and w.b in (0, 1)


def test_weight_indices_uniqueness_oracle():
    # brute force: the triple is the only admissible one
    for k in range(4, 200, 2):
        w = weight_indices(k)
        sols = [
            (n, a, b)
            for n in range(k // 12 + 1)
            for a in range(3)
            for b in range(2)
            if 12 * n + 4 * a + 6 * b == k
        ]
        assert sols == [(w.n, w.a, w.b)]


def test_weight_indices_rejects():
    with pytest.raises(ValueError):
        weight_indices(7)
    with pytest.raises(ValueError):
        weight_indices(2)


# ---------------------------------------------------------------------------
# basis


def test_basis_weight_12():
    b = basis(12, 6)
    assert len(b) == 2
    assert b[0] == delta(6)
    assert b[1] == eisenstein(4, 6) ** 3


def test_basis_leading_structure():
    for k in [12, 16, 18, 52, 108]:
        w = weight_indices(k)
        b = basis(k, w.n + 3)
        assert len(b) == w.n + 1
        for l, elem in enumerate(b):
            assert elem.valuation() == w.n - l
            assert elem.coefficient(w.n - l) == 1


def test_basis_weight_52_size():
    assert len(basis(52, 10)) == 5


# ---------------------------------------------------------------------------
# coordinates and constructor


def test_basis_coordinates_unit_vectors():
    for k in [12, 40, 52]:
        w = weight_indices(k)
        b = basis(k, w.n + 2)
        for l in range(w.n + 1):
            coords = basis_coordinates(b[l], k)
            want = tuple(1 if i == l else 0 for i in range(w.n + 1))
            assert coords.coords == want


def test_basis_coordinates_roundtrip_random():
    rng = random.Random(9)
    for k in [12, 24, 52]:
        w = weight_indices(k)
        for _ in range(5):
            coords = tuple(rng.randrange(-1000, 1000) for _ in range(w.n + 1))
            f = combination(BasisCoordinates(k, coords), w.n + 4)
            assert basis_coordinates(f, k).coords == coords


def test_constructor_weight_52_theta():
    f = constructor(theta_Z(6), 52)
    coords = basis_coordinates(theta_Z(6), 52)
    assert coords.coords == (27800506386, -776608440, 2887488, -3118, 1)
    assert f.coefficient(5) == 95037348924
    assert f.coefficient(6) == 1017845969208768
    for e in range(5):
        assert f.coefficient(e) == theta_Z(6).coefficient(e)


def test_constructor_weight_108_theta_hex():
    f = constructor(theta_H(12), 108)
    for e, want in [(0, 1), (1, 6), (2, 0), (3, 6), (4, 6), (7, 12), (9, 6)]:
        assert f.coefficient(e) == want
    assert f.coefficient(10) == 1496265431568669020160


def test_constructor_of_one():
    # the unique weight-12 form starting 1 + 0q is E4^3 - 720*Delta:
    # E4^3 = 1 + 720q + ..., so the Delta coordinate must cancel the 720
    f = constructor(QSeries.one(4), 12, 8)
    want = eisenstein(4, 8) ** 3 - delta(8) * 720
    assert f == want
    assert basis_coordinates(QSeries.one(4), 12).coords == (-720, 1)


def test_constructor_is_projection():
    f = constructor(theta_Z(8), 52)
    again = constructor(f, 52)
    assert f == again


def test_constructor_agreement_window():
    for k in [12, 28, 52]:
        w = weight_indices(k)
        f = theta_H(default_order(k))
        g = constructor(f, k)
        diff = g - f
        assert diff.valuation() >= w.n + 1


def test_pf_polynomial_weight_52():
    p = pf_polynomial(theta_Z(6), 52)
    assert p.coeffs == [27800506386, -776608440, 2887488, -3118, 1]
    assert p.degree == 4


def test_pf_polynomial_weight_108_constant():
    p = pf_polynomial(theta_H(11), 108)
    assert p.degree == 9
    assert p.coefficient(0) == -2139590870258478384000
    assert p.leading() == 1


def test_pf_polynomial_weight_4():
    assert pf_polynomial(eisenstein(4, 3), 4) == RatPoly([1])


def test_pf_polynomial_of_basis_elements():
    for k in [24, 52]:
        w = weight_indices(k)
        for l, elem in enumerate(basis(k, w.n + 2)):
            p = pf_polynomial(elem, k)
            assert p.coeffs == [0] * l + [1]


def test_pf_degree_equals_n_for_theta():
    for k in [12, 24, 36, 52]:
        w = weight_indices(k)
        assert pf_polynomial(theta_Z(w.n + 2), k).degree == w.n


def test_theta_constructor_integrality():
    # observed property: the matched forms for theta inputs stay integral
    for k in [12, 28, 52, 54]:
        f = constructor(theta_Z(weight_indices(k).n + 2), k)
        for c in f.coeffs:
            assert Fraction(c).denominator == 1


# ---------------------------------------------------------------------------
# congruences


def test_congruent_mod_p_e10():
    e10 = eisenstein(10, 30)
    one = QSeries.one(30)
    assert congruent_mod_p(e10, one, 11, 30)
    assert not congruent_mod_p(e10, one, 7, 30)


def test_congruent_mod_p_reflexive():
    f = theta_H(20)
    assert congruent_mod_p(f, f, 13, 20)


def test_congruent_mod_p_reports_bad_coefficient():
    f = QSeries([1, Fraction(1, 7), 0])
    g = QSeries.one(3)
    with pytest.raises(ValueError, match="q\\^1"):
        congruent_mod_p(f, g, 7, 3)


def test_congruent_mod_p_order_guard():
    with pytest.raises(ValueError):
        congruent_mod_p(QSeries.one(3), QSeries.one(3), 5, 10)


def test_initial_vanishing_propagates():
    assert check_initial_vanishing_propagates(52, 7, 10)
    assert check_initial_vanishing_propagates(102, 103, 20)


def test_initial_vanishing_scaled_basis_head():
    # the simplest instance: p times the lead basis element
    p = 11
    k = 24
    w = weight_indices(k)
    head = basis(k, w.n + 1)[0] * p
    form = constructor(head, k)
    for c in form.coeffs:
        assert Fraction(c).numerator % p == 0 or c == 0
