"""Gauss hypergeometric coefficient streams and the polynomial families.

Six parameter triples are hard-bound to family tags (U0, U1, W0, W1, V0, V1)
so they cannot drift.  Each family's scaled stream c_m * 1728^m turns the
series in 1/j into the degree-n truncated polynomials in j that the
congruence sweeps compare against; the same streams, reduced mod p, feed the
vanishing-window checks and the lambda-side polynomial G_p.

Everything is exact: the coefficient recurrence runs in Fractions and is
reduced mod p only at the end, so p-divisibility can be inspected honestly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import Rat, padic_valuation, rat_mod
from .fppoly import FpPoly
from .modforms import RatPoly
from .qseries import (
    QSeries,
    compose,
    eisenstein,
    invert_unit,
    j_invariant,
    pow_rational,
    theta_H,
    theta_Z,
)


@dataclass(frozen=True)
class HGParams:
    """Upper parameters alpha, beta and lower parameter gamma of 2F1."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        g = Fraction(self.gamma)
        if g.denominator == 1 and g <= 0:
            raise ValueError(f"gamma = {g} is a non-positive integer")


def _params(a, b, c) -> HGParams:
    return HGParams(Fraction(*a), Fraction(*b), Fraction(*c))


FAMILY_PARAMS: dict[str, HGParams] = {
    "U0": _params((1, 12), (5, 12), (1, 1)),
    "U1": _params((7, 12), (11, 12), (1, 1)),
    "W0": _params((-1, 24), (7, 24), (3, 4)),
    "W1": _params((11, 24), (19, 24), (3, 4)),
    "V0": _params((-1, 12), (1, 4), (2, 3)),
    "V1": _params((5, 12), (3, 4), (2, 3)),
}


@dataclass(frozen=True)
class TruncFamily:
    tag: str
    params: HGParams

    def __post_init__(self):
        assert FAMILY_PARAMS[self.tag] == self.params


def family(tag: str) -> TruncFamily:
    if tag not in FAMILY_PARAMS:
        raise ValueError(f"unknown family tag {tag!r}")
    return TruncFamily(tag, FAMILY_PARAMS[tag])


def _resolve_params(spec) -> HGParams:
    if isinstance(spec, HGParams):
        return spec
    if isinstance(spec, TruncFamily):
        return spec.params
    if isinstance(spec, str):
        return family(spec).params
    raise TypeError(f"expected family tag, TruncFamily, or HGParams; got {spec!r}")


# ---------------------------------------------------------------------------
# coefficient streams


def pochhammer(x: Rat | int, n: int) -> Rat:
    """(x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1."""
    if n < 0:
        raise ValueError("negative Pochhammer index")
    acc = Fraction(1)
    x = Fraction(x)
    for i in range(n):
        acc *= x + i
    return acc


def f21_coefficients(params, m_max: int) -> list[Rat]:
    """c_m = (a)_m (b)_m / ((g)_m m!) for m = 0..m_max, by the ratio recurrence."""
    p = _resolve_params(params)
    a, b, g = p.alpha, p.beta, p.gamma
    out = [Fraction(1)]
    for m in range(m_max):
        out.append(out[-1] * (a + m) * (b + m) / ((g + m) * (m + 1)))
    return out


def scaled_coefficient_mod(params, m: int, p: int) -> int:
    """The residue of c_m * 1728^m mod p (the j-polynomial coefficient scale)."""
    c = f21_coefficients(params, m)[m]
    return rat_mod(c * Fraction(1728) ** m, p)


def truncated_poly(fam, n: int) -> RatPoly:
    """The degree-n polynomial sum_{m=0}^{n} c_m 1728^m j^(n-m).

    This is the polynomial part of j^n * F(...; 1728/j): the family's series
    tail past m = n is dropped.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    cs = f21_coefficients(fam, n)
    coeffs = [cs[n - i] * Fraction(1728) ** (n - i) for i in range(n + 1)]
    return RatPoly(coeffs)


# ---------------------------------------------------------------------------
# the lambda-side polynomial


def gp_poly(p: int) -> FpPoly:
    """The mod-p polynomial sum_{m<=(p+1)/4} (-1/4)_m (1/4)_m / ((1/2)_m m!) x^m.

    Defined for p = 3 mod 4 (so the truncation bound (p+1)/4 is integral).
    Every denominator in the stream is invertible mod p; reduction would
    raise otherwise.
    """
    if p < 7 or p % 4 != 3:
        raise ValueError(f"p = {p} is not a prime = 3 mod 4, >= 7")
    m_max = (p + 1) // 4
    cs = f21_coefficients(HGParams(Fraction(-1, 4), Fraction(1, 4), Fraction(1, 2)), m_max)
    return FpPoly([rat_mod(c, p) for c in cs], p)


# ---------------------------------------------------------------------------
# vanishing windows


_WINDOW_RULES: dict[str, tuple[tuple[int, ...], int]] = {
    # tag -> (admissible residues, modulus); (lo, hi) computed per family
    "W0": ((7, 23), 24),
    "W1": ((11, 19), 24),
    "V0": ((11,), 12),
    "V1": ((5,), 12),
}


def _window_bounds(tag: str, p: int) -> tuple[int, int]:
    residues, modulus = _WINDOW_RULES[tag]
    if p % modulus not in residues:
        raise ValueError(
            f"p = {p} is not admissible for {tag} (needs p mod {modulus} in {residues})"
        )
    if tag == "W0":
        n = (p + 1) // 24 if p % 24 == 23 else (p - 7) // 24
        return n, 6 * n
    if tag == "W1":
        n = (p - 11) // 24 if p % 24 == 11 else (p - 19) // 24
        return n, 6 * n
    if tag == "V0":
        n = (p + 1) // 12
        return n, 4 * n
    n = (p - 5) // 12
    return n, 4 * n + 2


def vanishing_window(fam, p: int) -> tuple[int, int, bool]:
    """The open coefficient window (lo, hi) forced to vanish mod p, and whether
    the family's exact stream actually vanishes there.
    """
    if isinstance(fam, TruncFamily):
        tag = fam.tag
    elif isinstance(fam, str):
        tag = fam
    else:
        raise TypeError("vanishing_window expects a family tag or TruncFamily")
    if tag not in _WINDOW_RULES:
        raise ValueError(f"family {tag} has no vanishing-window statement")
    lo, hi = _window_bounds(tag, p)
    cs = f21_coefficients(tag, max(hi - 1, 0))
    ok = all(
        cs[m] == 0 or padic_valuation(cs[m], p) >= 1 for m in range(lo + 1, hi)
    )
    return lo, hi, ok


def admissible_vanishing_primes(tag: str, count: int) -> list[int]:
    """The smallest `count` primes in the family's admissible residue classes."""
    from .exact_arith import is_prime

    if tag not in _WINDOW_RULES:
        raise ValueError(f"family {tag} has no vanishing-window statement")
    residues, modulus = _WINDOW_RULES[tag]
    out = []
    p = 5
    while len(out) < count:
        if p % modulus in residues and is_prime(p):
            out.append(p)
        p += 2
    return out


# ---------------------------------------------------------------------------
# series identities (first mismatching exponent, or None when they hold)


def euler_transform_mismatch(order: int) -> int | None:
    """(1-z)^(-1/2) * F(W0; z) against F(W1; z) as z-series."""
    w0 = QSeries(f21_coefficients("W0", order - 1))
    w1 = QSeries(f21_coefficients("W1", order - 1))
    front = pow_rational(QSeries([1, -1] + [0] * (order - 2)), Fraction(-1, 2))
    return (front * w0).first_mismatch(w1, upto=order)


def cubic_transform_mismatch(order: int) -> int | None:
    """F(W0; 27 L^2(L-1)^2 / (4 (1-L+L^2)^3)) against
    (1-L+L^2)^(-1/8) * F(-1/4, 1/4; 1/2; L) as series in L."""
    n = order
    lam = QSeries([0, 1] + [0] * (n - 2))
    one = QSeries.one(n)
    poly = one - lam + lam * lam
    num = (lam * lam) * ((lam - 1) ** 2) * 27
    den = (poly ** 3) * 4
    inner = num * invert_unit(den)
    lhs = compose(f21_coefficients("W0", n), inner)
    front = pow_rational(poly, Fraction(-1, 8))
    g = f21_coefficients(HGParams(Fraction(-1, 4), Fraction(1, 4), Fraction(1, 2)), n - 1)
    rhs = front * QSeries(g)
    return lhs.first_mismatch(rhs, upto=n)


def degenerate_eval_mismatch(order: int) -> int | None:
    """F(V0; y(y+4)^3 / (4 (2y-1)^3)) against (1-2y)^(-1/4) as series in y."""
    n = order
    y = QSeries([0, 1] + [0] * (n - 2))
    num = y * ((y + 4) ** 3)
    den = ((y * 2 - 1) ** 3) * 4
    inner = num * invert_unit(den)
    lhs = compose(f21_coefficients("V0", n), inner)
    rhs = pow_rational(y * -2 + 1, Fraction(-1, 4))
    return lhs.first_mismatch(rhs, upto=n)


def _f21_of_1728_over_j(tag: str, order: int) -> QSeries:
    """F(tag; 1728/j) as a q-series known to the requested order."""
    j = j_invariant(order)
    inner = j._invert() * 1728
    return compose(f21_coefficients(tag, inner.order), inner)


def theta_z_hypergeometric_mismatch(order: int) -> int | None:
    """theta_Z against E4^(1/8) * F(W0; 1728/j) as q-series."""
    n = order + 1
    rhs = pow_rational(eisenstein(4, n + 1), Fraction(1, 8)) * _f21_of_1728_over_j("W0", n)
    return theta_Z(n + 1).first_mismatch(rhs, upto=order)


def theta_h_hypergeometric_mismatch(order: int) -> int | None:
    """theta_H against E4^(1/4) * F(V0; 1728/j) as q-series."""
    n = order + 1
    rhs = pow_rational(eisenstein(4, n + 1), Fraction(1, 4)) * _f21_of_1728_over_j("V0", n)
    return theta_H(n + 1).first_mismatch(rhs, upto=order)


def e4_quarter_hypergeometric_mismatch(order: int) -> int | None:
    """E4^(1/4) against F(U0; 1728/j) as q-series."""
    n = order + 1
    lhs = pow_rational(eisenstein(4, n + 1), Fraction(1, 4))
    return lhs.first_mismatch(_f21_of_1728_over_j("U0", n), upto=order)
