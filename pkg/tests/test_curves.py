"""Tests for brute-force curve arithmetic and the j-value sets."""

import random
from fractions import Fraction

import pytest
import sympy as sp

from theta_forms.curves import (
    HessianCurve,
    LegendreCurve,
    ShortWeierstrass,
    TorsionStructure,
    check_hessian_matches_hex,
    curve_from_j,
    hessian_j,
    hessian_norm_condition_j_set,
    hex_zero_set,
    j_of_legendre,
    legendre_4torsion_predicted,
    legendre_image_j_set,
    n_torsion_structure,
    point_count,
    psi4_roots,
    supersingular_j_set,
    two_torsion_only_j_set,
    _cubic_points,
    _scalar_mul,
)
from theta_forms.exact_arith import Fp, Fp2, primes_in_range
from theta_forms.fppoly import reduce_poly, roots_brute, roots_fp2_brute
from theta_forms.modforms import default_order, pf_polynomial
from theta_forms.qseries import theta_H, theta_Z


def _j_from_cubic(c2, c1, c0):
    """j-invariant of y^2 = x^3 + c2 x^2 + c1 x + c0 via the b/c invariants.

    Independent of the closed forms under test: only the textbook formulas
    b2 = 4a2, b4 = 2a4, b6 = 4a6, c4 = b2^2 - 24 b4,
    c6 = -b2^3 + 36 b2 b4 - 216 b6, 1728 Delta = c4^3 - c6^2.
    """
    b2 = 4 * c2
    b4 = 2 * c1
    b6 = 4 * c0
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6
    num = c4 * c4 * c4
    return num / ((num - c6 * c6) / 1728)


def _count_points_naive(curve):
    field = curve.field
    c2, c1, c0 = curve.cubic()
    n = 1
    for x in field.elements():
        fx = ((x + c2) * x + c1) * x + c0
        for y in field.elements():
            if y * y == fx:
                n += 1
    return n


# ---------------------------------------------------------------------------
# models and validation


def test_torsion_structure_pairs():
    t = TorsionStructure(2, 4)
    assert t.order() == 8
    assert TorsionStructure(1, 1).order() == 1
    with pytest.raises(ValueError):
        TorsionStructure(4, 2)
    with pytest.raises(ValueError):
        TorsionStructure(0, 2)


def test_short_weierstrass_rejects_singular():
    F = Fp(11)
    with pytest.raises(ValueError):
        ShortWeierstrass(F.zero, F.zero)
    # 4*(-3)^3 + 27*2^2 = 0 in any field
    with pytest.raises(ValueError):
        ShortWeierstrass(F.elem(-3), F.elem(2))


def test_legendre_rejects_bad_lambda():
    F = Fp(7)
    with pytest.raises(ValueError):
        LegendreCurve(F.zero)
    with pytest.raises(ValueError):
        LegendreCurve(F.one)


def test_hessian_rejects_singular():
    K = Fp2(7)
    with pytest.raises(ValueError):
        HessianCurve(K.one)
    # F_25 contains the nontrivial cube roots of unity; they are singular too
    K5 = Fp2(5)
    roots = [z for z in K5.elements() if z**3 == 1 and z != 1]
    assert len(roots) == 2
    for z in roots:
        with pytest.raises(ValueError):
            HessianCurve(z)


# ---------------------------------------------------------------------------
# point counting


def test_point_count_known_values():
    F = Fp(7)
    assert point_count(ShortWeierstrass(F.one, F.zero)) == 8


def test_point_count_supersingular_1728():
    # y^2 = x^3 + x is supersingular for p = 3 mod 4, so it has p + 1 points
    for p in (7, 11, 19, 23, 103):
        F = Fp(p)
        assert point_count(ShortWeierstrass(F.one, F.zero)) == p + 1


def test_point_count_matches_naive_oracle():
    rng = random.Random(7)
    for p in (5, 13, 17):
        F = Fp(p)
        done = 0
        while done < 5:
            a, b = F.elem(rng.randrange(p)), F.elem(rng.randrange(p))
            if not (4 * a * a * a + 27 * b * b):
                continue
            E = ShortWeierstrass(a, b)
            assert point_count(E) == _count_points_naive(E)
            done += 1


def test_point_count_hasse_bound():
    rng = random.Random(11)
    primes = primes_in_range(5, 199)
    for _ in range(500):
        p = rng.choice(primes)
        F = Fp(p)
        a, b = F.elem(rng.randrange(p)), F.elem(rng.randrange(p))
        if not (4 * a * a * a + 27 * b * b):
            continue
        t = p + 1 - point_count(ShortWeierstrass(a, b))
        assert t * t <= 4 * p


def test_point_count_rejects():
    F = Fp(10007)
    with pytest.raises(ValueError):
        point_count(ShortWeierstrass(F.one, F.one))
    K = Fp2(7)
    with pytest.raises(ValueError):
        point_count(HessianCurve(K.elem(2)))


def test_legendre_group_order_divisible_by_4():
    # full 2-torsion plus a rational point of order 4 or a (2,2) subgroup
    for p in (7, 11, 13, 17):
        F = Fp(p)
        for v in range(2, p):
            assert point_count(LegendreCurve(F.elem(v))) % 4 == 0


# ---------------------------------------------------------------------------
# torsion structure


def test_n_torsion_known_values():
    F = Fp(7)
    assert n_torsion_structure(LegendreCurve(F.elem(3)), 4) == TorsionStructure(2, 2)
    assert n_torsion_structure(LegendreCurve(F.elem(2)), 4) == TorsionStructure(2, 4)


def test_legendre_two_torsion_always_full():
    for p in (7, 11, 13):
        F = Fp(p)
        for v in range(2, p):
            E = LegendreCurve(F.elem(v))
            assert n_torsion_structure(E, 2) == TorsionStructure(2, 2)


def test_n_torsion_order_divides_group_order():
    rng = random.Random(3)
    for _ in range(20):
        p = rng.choice((7, 11, 13, 17, 19))
        F = Fp(p)
        a, b = F.elem(rng.randrange(p)), F.elem(rng.randrange(p))
        if not (4 * a * a * a + 27 * b * b):
            continue
        E = ShortWeierstrass(a, b)
        N = point_count(E)
        for n in (2, 3, 4):
            assert N % n_torsion_structure(E, n).order() == 0


def test_n_torsion_points_form_subgroup():
    F = Fp(11)
    E = LegendreCurve(F.elem(4))
    c2, c1, _ = E.cubic()
    pts = [P for P in _cubic_points(E) if _scalar_mul(4, P, c2, c1) is None]
    assert len(pts) == n_torsion_structure(E, 4).order()
    for P in pts:
        for Q in pts:
            from theta_forms.curves import _add

            assert _add(P, Q, c2, c1) in pts or _add(P, Q, c2, c1) is None


def test_n_torsion_rejects():
    F = Fp(7)
    E = LegendreCurve(F.elem(3))
    with pytest.raises(ValueError):
        n_torsion_structure(E, 5)
    F2 = Fp(1009)
    with pytest.raises(ValueError):
        n_torsion_structure(LegendreCurve(F2.elem(3)), 2)


def test_4torsion_prediction_matches_brute_force():
    for p in (7, 11, 19, 23, 31):
        F = Fp(p)
        for v in range(2, p):
            lam = F.elem(v)
            assert legendre_4torsion_predicted(lam, p) == n_torsion_structure(
                LegendreCurve(lam), 4
            )


def test_4torsion_prediction_rejects():
    with pytest.raises(ValueError):
        legendre_4torsion_predicted(Fp(13).elem(2), 13)
    with pytest.raises(ValueError):
        legendre_4torsion_predicted(Fp(7).zero, 7)


def test_psi4_roots_are_order4_x_coordinates():
    # rational points of exact order 4 sit exactly over the psi4 roots whose
    # cubic value is a nonzero square
    for p in (7, 11, 19, 23):
        F = Fp(p)
        for v in range(2, p):
            lam = F.elem(v)
            E = LegendreCurve(lam)
            c2, c1, c0 = E.cubic()
            seen = set()
            for P in _cubic_points(E):
                if P is None:
                    continue
                if (
                    _scalar_mul(4, P, c2, c1) is None
                    and _scalar_mul(2, P, c2, c1) is not None
                ):
                    seen.add(P[0])
            expected = set()
            for x in psi4_roots(lam, p):
                fx = ((x + c2) * x + c1) * x + c0
                if fx and fx.is_square():
                    expected.add(x)
            assert seen == expected


# ---------------------------------------------------------------------------
# j-invariants


def test_j_of_legendre_special_values():
    assert j_of_legendre(Fraction(-1)) == 1728
    assert j_of_legendre(Fraction(2)) == 1728
    assert j_of_legendre(Fraction(1, 2)) == 1728
    F = Fp(7)
    assert j_of_legendre(F.elem(-1)) == 1728 % 7
    with pytest.raises(ValueError):
        j_of_legendre(F.zero)
    with pytest.raises(ValueError):
        j_of_legendre(Fraction(1))


def test_j_of_legendre_matches_invariant_oracle():
    rng = random.Random(5)
    done = 0
    while done < 50:
        p = rng.choice((7, 11, 13, 17, 19, 23))
        F = Fp(p)
        v = rng.randrange(2, p)
        lam = F.elem(v)
        E = LegendreCurve(lam)
        assert j_of_legendre(lam) == _j_from_cubic(*E.cubic())
        done += 1


def test_j_of_legendre_six_fold_symmetry():
    rng = random.Random(9)
    for _ in range(20):
        p = rng.choice((11, 13, 17, 19))
        F = Fp(p)
        lam = F.elem(rng.randrange(2, p))
        j = j_of_legendre(lam)
        assert j_of_legendre(1 / lam) == j
        assert j_of_legendre(1 - lam) == j


def test_curve_from_j_roundtrip():
    rng = random.Random(13)
    for p in (7, 11, 23):
        F = Fp(p)
        for v in range(p):
            j = F.elem(v)
            assert curve_from_j(j).j() == j
        K = Fp2(p)
        for _ in range(10):
            j = K.elem(rng.randrange(p), rng.randrange(p))
            assert curve_from_j(j).j() == j


# ---------------------------------------------------------------------------
# the two-torsion-only curve set


def test_two_torsion_only_set_at_103():
    assert {int(j) for j in two_torsion_only_j_set(103)} == {58, 89, 93, 97}


def test_two_torsion_only_set_matches_polynomial_roots():
    # the F_p roots of the reduced characteristic polynomial of the integer
    # theta form of weight (p+1)/2 are exactly the curve-set j-invariants
    for p in (7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83, 103):
        k = (p + 1) // 2
        P = pf_polynomial(theta_Z(default_order(k)), k)
        f = reduce_poly(P, p)
        assert roots_brute(f) == two_torsion_only_j_set(p)


def test_two_torsion_only_set_equals_legendre_image():
    for p in (7, 11, 19, 23, 31, 43, 47):
        assert legendre_image_j_set(p) == two_torsion_only_j_set(p)


def test_two_torsion_only_set_rejects():
    with pytest.raises(ValueError):
        two_torsion_only_j_set(13)
    with pytest.raises(ValueError):
        two_torsion_only_j_set(1019)


def test_small_prime_sets_are_empty():
    # at p = 7 both admissible lambdas land on j = 0, which is excluded
    assert two_torsion_only_j_set(7) == set()
    assert legendre_image_j_set(7) == set()


# ---------------------------------------------------------------------------
# supersingular j-invariants


def test_supersingular_known_small():
    assert {(z.c0, z.c1) for z in supersingular_j_set(7)} == {(6, 0)}
    assert {(z.c0, z.c1) for z in supersingular_j_set(11)} == {(0, 0), (1, 0)}


def test_supersingular_mass_formula():
    # sum of 1/|Aut| over supersingular j equals (p - 1)/24
    for p in (7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53):
        total = Fraction(0)
        for z in supersingular_j_set(p):
            if z == 0:
                total += Fraction(1, 6)
            elif z == 1728:
                total += Fraction(1, 4)
            else:
                total += Fraction(1, 2)
        assert total == Fraction(p - 1, 24)


def test_supersingular_count_formula():
    eps = {1: 0, 5: 1, 7: 1, 11: 2}
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53):
        assert len(supersingular_j_set(p)) == p // 12 + eps[p % 12]


def test_supersingular_set_frobenius_stable():
    for p in (23, 31, 37):
        s = supersingular_j_set(p)
        assert {z.frobenius() for z in s} == s


def test_supersingular_contains_special_j():
    for p in (7, 11, 19, 23, 31):
        assert any(z == 1728 for z in supersingular_j_set(p))
    for p in (5, 11, 17, 23, 29):
        assert any(z == 0 for z in supersingular_j_set(p))


def test_supersingular_rejects_large_p():
    with pytest.raises(ValueError):
        supersingular_j_set(1009)


# ---------------------------------------------------------------------------
# the hexagonal zero set


def test_hex_zero_set_matches_polynomial_roots():
    # the F_{p^2} roots of the reduced characteristic polynomial of the
    # hexagonal theta form of weight p + 1 are exactly the swept values
    for p in (5, 11, 17, 23, 29, 41, 53, 107):
        k = p + 1
        P = pf_polynomial(theta_H(default_order(k)), k)
        f = reduce_poly(P, p)
        s = hex_zero_set(p)
        assert s == roots_fp2_brute(f)
        assert len(s) == f.degree


def test_hex_zero_set_norm_relation():
    # each member beta satisfies beta^p * beta = 1728^2
    for p in (11, 17, 23, 29, 41, 53):
        for z in hex_zero_set(p):
            assert z.norm() == 1728 * 1728


def test_hex_zero_set_rejects():
    with pytest.raises(ValueError):
        hex_zero_set(7)
    with pytest.raises(ValueError):
        hex_zero_set(13)


# ---------------------------------------------------------------------------
# Hessian cubics


def test_hessian_model_substitution_oracle():
    # sending the flex (1 : -1 : 0) to infinity with its tangent line
    # X + Y + b Z = 0 as the line at infinity turns the Hessian cubic into
    # the claimed Weierstrass model; verify the substitution symbolically
    x, y, b = sp.symbols("x y b")
    hessian = x**3 + y**3 + 1 - 3 * b * x * y
    s = 1 / (x + y + b)
    d3 = 12 * (b**3 - 1)
    X = d3 * s
    Y = d3 * (6 * x * s - 3 * (1 - b * s))
    c2, c1, c0 = -27 * b**2, 216 * b * (b**3 - 1), -432 * (b**3 - 1) ** 2
    residue = Y**2 - (X**3 + c2 * X**2 + c1 * X + c0)
    num = sp.numer(sp.together(sp.expand(residue)))
    _, rem = sp.div(sp.expand(num), hessian, x)
    assert sp.simplify(rem) == 0


def test_hessian_j_symbolic_closed_form():
    b = sp.symbols("b")
    c2, c1, c0 = -27 * b**2, 216 * b * (b**3 - 1), -432 * (b**3 - 1) ** 2
    j = _j_from_cubic(c2, c1, c0)
    closed = 27 * b**3 * (b**3 + 8) ** 3 / (b**3 - 1) ** 3
    assert sp.simplify(j - closed) == 0


def test_hessian_j_fraction_values():
    assert hessian_j(Fraction(2)) == Fraction(884736, 343)
    assert hessian_j(Fraction(0)) == 0
    assert hessian_j(Fraction(-2)) == 0
    with pytest.raises(ValueError):
        hessian_j(Fraction(1))


def test_hessian_j_matches_model():
    rng = random.Random(17)
    done = 0
    while done < 30:
        p = rng.choice((5, 7, 11, 13, 17))
        K = Fp2(p)
        v = K.elem(rng.randrange(p), rng.randrange(p))
        if v**3 == 1:
            continue
        assert hessian_j(v) == _j_from_cubic(*HessianCurve(v).cubic())
        assert HessianCurve(v).j() == hessian_j(v)
        done += 1


def test_hessian_norm_condition_curves_have_full_3_torsion():
    K = Fp2(11)
    checked = 0
    for v in K.elements():
        if checked >= 4:
            break
        if v.norm() != -2 or v**3 == 1:
            continue
        E = HessianCurve(v)
        assert n_torsion_structure(E, 3) == TorsionStructure(3, 3)
        checked += 1
    assert checked == 4


def test_check_hessian_matches_hex():
    for p in (5, 11, 17, 23, 29, 41):
        assert check_hessian_matches_hex(p)


def test_check_hessian_rejects():
    with pytest.raises(ValueError):
        check_hessian_matches_hex(7)
    with pytest.raises(ValueError):
        check_hessian_matches_hex(13)
    with pytest.raises(ValueError):
        check_hessian_matches_hex(227)


def test_hessian_norm_condition_set_at_5_hits_excluded_values_only():
    # the raw parametrization image at p = 5 is {1728}; after excluding the
    # two special invariants both sides are empty and still agree
    assert hessian_norm_condition_j_set(5) == set()
    assert hex_zero_set(5) == set()
