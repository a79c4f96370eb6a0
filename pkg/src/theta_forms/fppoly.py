"""Dense univariate polynomial algebra over F_p, plus a minimal F_{p^2} layer.

Coefficients are stored as plain ints in [0, p), lowest degree first, with no
trailing zeros (the zero polynomial is the empty list).  This mirrors how the
polynomials are consumed: splitting tests, root enumeration, factor-degree
patterns, and power sums for the mod-p reductions of the j-polynomials.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import Fp, Fp2, Fp2Elem, FpElem, rat_mod

_KARATSUBA_CUTOFF = 64


def _normalize(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _mul_lists(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) > _KARATSUBA_CUTOFF:
        return _karatsuba(a, b, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _normalize([c % p for c in out])


def _karatsuba(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    h = n // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul_lists(a0, b0, p)
    z2 = _mul_lists(a1, b1, p)
    s1 = [x + y for x, y in zip(a0, a1)] + (a1[len(a0):] or a0[len(a1):])
    s2 = [x + y for x, y in zip(b0, b1)] + (b1[len(b0):] or b0[len(b1):])
    z1 = _mul_lists([c % p for c in s1], [c % p for c in s2], p)
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] += c
        out[i + h] -= c
    for i, c in enumerate(z1):
        out[i + h] += c
    for i, c in enumerate(z2):
        if i + h < len(out):
            out[i + h] -= c
        out[i + 2 * h] += c
    return _normalize([c % p for c in out])


class FpPoly:
    """Polynomial over F_p: int coefficients low-to-high, no trailing zeros."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        self.p = p
        self.coeffs = _normalize([int(c) % p for c in coeffs])

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls([], p)

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls([0, 1], p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: "FpPoly") -> None:
        if other.p != self.p:
            raise ValueError("modulus mismatch")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(
            [(self.coefficient(i) + other.coefficient(i)) % self.p for i in range(n)],
            self.p,
        )

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(
            [(self.coefficient(i) - other.coefficient(i)) % self.p for i in range(n)],
            self.p,
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly([c * other % self.p for c in self.coeffs], self.p)
        self._check(other)
        return FpPoly._raw(_mul_lists(self.coeffs, other.coeffs, self.p), self.p)

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, normalized: list[int], p: int) -> "FpPoly":
        out = cls.__new__(cls)
        out.coeffs = normalized
        out.p = p
        return out

    def __divmod__(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        d = other.degree
        lc_inv = pow(other.leading(), -1, p)
        quot = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                q = c * lc_inv % p
                quot[i - d] = q
                for j, oc in enumerate(other.coeffs):
                    rem[i - d + j] = (rem[i - d + j] - q * oc) % p
        return FpPoly._raw(_normalize(quot), p), FpPoly._raw(_normalize(rem), p)

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def monic(self) -> "FpPoly":
        if self.is_zero():
            return self
        lc = self.leading()
        if lc == 1:
            return self
        inv = pow(lc, -1, self.p)
        return FpPoly._raw([c * inv % self.p for c in self.coeffs], self.p)

    def derivative(self) -> "FpPoly":
        return FpPoly(
            [i * c % self.p for i, c in enumerate(self.coeffs)][1:], self.p
        )

    def evaluate(self, x: int | FpElem) -> FpElem:
        x = int(x) % self.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return Fp(self.p).elem(acc)

    def evaluate_fp2(self, z: Fp2Elem) -> Fp2Elem:
        K = Fp2(self.p)
        acc = K.zero
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def reverse(self) -> "FpPoly":
        """x^deg * f(1/x): the coefficient list read backwards."""
        return FpPoly(list(reversed(self.coeffs)), self.p)

    def __eq__(self, other):
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, tuple(self.coeffs)))

    def __repr__(self):
        if self.is_zero():
            return f"FpPoly(0 mod {self.p})"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}x" if c != 1 else "x")
            else:
                terms.append(f"{c}x^{i}" if c != 1 else f"x^{i}")
        return f"FpPoly({' + '.join(terms)} mod {self.p})"


# ---------------------------------------------------------------------------
# construction from rational polynomials


def reduce_poly(poly, p: int) -> FpPoly:
    """Coefficientwise reduction of a rational-coefficient polynomial mod p.

    Accepts anything exposing a low-to-high `coeffs` list (or a plain list).
    Raises when p sits in a denominator.
    """
    coeffs = poly.coeffs if hasattr(poly, "coeffs") else list(poly)
    out = []
    for i, c in enumerate(coeffs):
        try:
            out.append(rat_mod(Fraction(c) if not isinstance(c, int) else c, p))
        except ValueError as exc:
            raise ValueError(f"coefficient of degree {i}: p in a denominator ({exc})") from exc
    return FpPoly(out, p)


# ---------------------------------------------------------------------------
# gcd and modular exponentiation


def gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic greatest common divisor."""
    f._check(g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def powmod_x(e: int, f: FpPoly) -> FpPoly:
    """x^e mod f by square-and-multiply."""
    if f.is_zero():
        raise ValueError("modulus polynomial is zero")
    if f.degree == 0:
        return FpPoly.zero(f.p)
    return _pow_poly_mod(FpPoly.x(f.p), e, f)


def _pow_poly_mod(base: FpPoly, e: int, f: FpPoly) -> FpPoly:
    result = FpPoly([1], f.p)
    base = base % f
    while e:
        if e & 1:
            result = (result * base) % f
        base = (base * base) % f
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# splitting tests


def is_squarefree(f: FpPoly) -> bool:
    if f.is_zero():
        return False
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero():
        return False
    return gcd(f, d).degree == 0


def _require_squarefree(f: FpPoly, what: str) -> None:
    if not is_squarefree(f):
        raise ValueError(f"{what} requires a squarefree polynomial; gcd(f, f') is nontrivial")


def count_fp_roots(f: FpPoly) -> int:
    """Number of distinct roots in F_p: deg gcd(f, x^p - x)."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return 0
    xp = powmod_x(f.p, f)
    return gcd(f, xp - FpPoly.x(f.p)).degree


def splits_into_linears(f: FpPoly) -> bool:
    """Whether squarefree f factors into distinct linear factors over F_p."""
    _require_squarefree(f, "splits_into_linears")
    if f.degree <= 0:
        return True
    return count_fp_roots(f) == f.degree


def splits_over_fp2(f: FpPoly) -> bool:
    """Whether squarefree f divides x^(p^2) - x, i.e. splits over F_{p^2}."""
    _require_squarefree(f, "splits_over_fp2")
    if f.degree <= 0:
        return True
    xpp = powmod_x(f.p * f.p, f)
    return xpp == FpPoly.x(f.p) % f


# ---------------------------------------------------------------------------
# factor degree patterns


@dataclass(frozen=True)
class FactorPattern:
    """Multiset of (degree, multiplicity) over the monic irreducible factors."""

    pairs: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_counter(cls, c: Counter) -> "FactorPattern":
        return cls(tuple(sorted(c.items())))

    def counter(self) -> Counter:
        return Counter(dict(self.pairs))

    def degree_counts(self) -> Counter:
        """Distinct irreducible factors per degree (multiplicity collapsed)."""
        out: Counter = Counter()
        for (d, _m), cnt in self.pairs:
            out[d] += cnt
        return out

    def degrees(self) -> set[int]:
        return {d for (d, _m), _ in self.pairs}

    def total_degree(self) -> int:
        return sum(d * m * cnt for (d, m), cnt in self.pairs)

    def is_squarefree(self) -> bool:
        return all(m == 1 for (_d, m), _ in self.pairs)


def _distinct_degree_counts(s: FpPoly) -> Counter:
    """Degrees of the irreducible factors of squarefree s, via x^(p^d) gcds."""
    out: Counter = Counter()
    g = s.monic()
    p = s.p
    frob = None
    d = 0
    while g.degree > 0:
        d += 1
        if 2 * d > g.degree:
            out[g.degree] += 1
            break
        if frob is None:
            frob = powmod_x(p, g)
        else:
            frob = _pow_poly_mod(frob % g, p, g)
        cand = gcd(g, frob - FpPoly.x(p))
        if cand.degree > 0:
            out[d] += cand.degree // d
            g = g // cand
    return out


def _squarefree_decomposition(f: FpPoly) -> list[tuple[int, FpPoly]]:
    """(multiplicity, squarefree factor product) pairs with f = prod s^m.

    The char-p variant: multiplicities divisible by p surface as a zero
    derivative and are unwrapped through the Frobenius.
    """
    out: list[tuple[int, FpPoly]] = []
    g = f.monic()
    scale = 1
    while g.degree > 0:
        dg = g.derivative()
        if dg.is_zero():
            # all exponents divisible by p: g(x) = h(x)^p coefficientwise
            g = FpPoly(g.coeffs[:: g.p], g.p).monic()
            scale *= f.p
            continue
        c = gcd(g, dg)
        w = g // c
        i = 1
        while w.degree > 0:
            y = gcd(w, c)
            z = w // y
            if z.degree > 0:
                out.append((i * scale, z))
            w = y
            c = c // y
            i += 1
        g = c
    return out


def factor_pattern(f: FpPoly) -> FactorPattern:
    """Degrees and multiplicities of the monic irreducible factors of f.

    Squarefree decomposition first, then distinct-degree splitting of each
    squarefree piece.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.p > 10**4:
        raise ValueError(f"p = {f.p} beyond the desk-scale bound 10^4")
    pairs: Counter = Counter()
    for mult, part in _squarefree_decomposition(f):
        for deg, cnt in _distinct_degree_counts(part).items():
            pairs[(deg, mult)] += cnt
    return FactorPattern.from_counter(pairs)


# ---------------------------------------------------------------------------
# roots


def roots_brute(f: FpPoly) -> set[FpElem]:
    """All F_p roots by exhaustive evaluation (multiplicity ignored)."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.p > 10**5:
        raise ValueError(f"p = {f.p} beyond the exhaustive-evaluation bound 10^5")
    p = f.p
    F = Fp(p)
    out = set()
    for x in range(p):
        acc = 0
        for c in reversed(f.coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            out.add(F.elem(x))
    return out


def roots_fp2_brute(f: FpPoly, bound: int = 500) -> set[Fp2Elem]:
    """All F_{p^2} roots by exhaustive evaluation over the p^2 elements."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.p > bound:
        raise ValueError(f"p = {f.p} beyond the F_p^2 scan bound {bound}")
    K = Fp2(f.p)
    return {z for z in K.elements() if not f.evaluate_fp2(z)}


# ---------------------------------------------------------------------------
# power sums


def power_sums(f: FpPoly, v_max: int) -> list[FpElem]:
    """S_v = sum of v-th powers of the roots (with multiplicity), v = 0..v_max.

    Computed from the monic coefficients by Newton's identities:
    S_v = -v*a_v - sum_{j=1}^{v-1} a_j S_{v-j} for v <= deg, and
    S_v = -sum_{j=1}^{deg} a_j S_{v-j} beyond the degree, with a_j the
    coefficient of x^(deg-j).
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    p = f.p
    g = f.monic()
    d = g.degree
    a = [g.coefficient(d - j) for j in range(d + 1)]  # a[0] = 1
    s = [d % p]
    for v in range(1, v_max + 1):
        acc = 0
        for j in range(1, min(v - 1, d) + 1):
            if a[j]:
                acc += a[j] * s[v - j]
        if v <= d:
            acc += v * a[v]
        s.append(-acc % p)
    F = Fp(p)
    return [F.elem(x) for x in s]


def newton_consistency(f: FpPoly, v_max: int | None = None) -> bool:
    """Cross-check power_sums against brute-force root sums over F_{p^2}.

    Requires f squarefree and split over F_{p^2}, so every root is picked up
    exactly once by the exhaustive scan.
    """
    _require_squarefree(f, "newton_consistency")
    if not splits_over_fp2(f):
        raise ValueError("polynomial does not split over F_{p^2}; brute sums would miss roots")
    if v_max is None:
        v_max = 2 * f.degree + 3
    roots = roots_fp2_brute(f)
    K = Fp2(f.p)
    sums = power_sums(f, v_max)
    for v in range(v_max + 1):
        acc = K.zero
        for r in roots:
            acc = acc + r**v
        if acc != sums[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# reciprocal polynomials


def is_reciprocal(f: FpPoly) -> bool:
    """Whether x^deg * f(1/x) = f after monic normalization.

    Equivalently the monic-normalized coefficient list is a palindrome.
    """
    if f.is_zero() or f.coefficient(0) == 0:
        raise ValueError("constant term is zero; reciprocal comparison undefined")
    g = f.monic()
    return g == g.reverse().monic()


# ---------------------------------------------------------------------------
# F_{p^2} polynomials (minimal: products of linears, comparison, lifting)


class Fp2Poly:
    """Polynomial over F_{p^2}; coefficients as (c0, c1) int pairs."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs: list[tuple[int, int]], p: int):
        cs = [(c0 % p, c1 % p) for c0, c1 in coeffs]
        while cs and cs[-1] == (0, 0):
            cs.pop()
        self.coeffs = cs
        self.p = p

    @classmethod
    def from_fp_poly(cls, f: FpPoly) -> "Fp2Poly":
        return cls([(c, 0) for c in f.coeffs], f.p)

    @classmethod
    def from_roots(cls, roots, p: int) -> "Fp2Poly":
        """The monic polynomial prod (x - beta) over the given roots."""
        acc = cls([(1, 0)], p)
        for b in roots:
            if isinstance(b, Fp2Elem):
                c0, c1 = b.c0, b.c1
            elif isinstance(b, FpElem):
                c0, c1 = b.value, 0
            else:
                c0, c1 = int(b) % p, 0
            acc = acc * cls([(-c0 % p, -c1 % p), (1, 0)], p)
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "Fp2Poly") -> "Fp2Poly":
        if other.p != self.p:
            raise ValueError("modulus mismatch")
        p = self.p
        K = Fp2(p)
        d = K.d
        if not self.coeffs or not other.coeffs:
            return Fp2Poly([], p)
        out = [(0, 0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, (a0, a1) in enumerate(self.coeffs):
            if a0 == 0 and a1 == 0:
                continue
            for j, (b0, b1) in enumerate(other.coeffs):
                c0, c1 = out[i + j]
                out[i + j] = (
                    (c0 + a0 * b0 + d * a1 * b1) % p,
                    (c1 + a0 * b1 + a1 * b0) % p,
                )
        return Fp2Poly(out, p)

    def __sub__(self, other: "Fp2Poly") -> "Fp2Poly":
        if other.p != self.p:
            raise ValueError("modulus mismatch")
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda cs, i: cs[i] if i < len(cs) else (0, 0)
        return Fp2Poly(
            [
                (
                    (get(self.coeffs, i)[0] - get(other.coeffs, i)[0]) % self.p,
                    (get(self.coeffs, i)[1] - get(other.coeffs, i)[1]) % self.p,
                )
                for i in range(n)
            ],
            self.p,
        )

    def evaluate(self, z: Fp2Elem) -> Fp2Elem:
        K = Fp2(self.p)
        acc = K.zero
        for c0, c1 in reversed(self.coeffs):
            acc = acc * z + K.elem(c0, c1)
        return acc

    def __eq__(self, other):
        if not isinstance(other, Fp2Poly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Fp2Poly(deg {self.degree} mod {self.p})"
