"""Exact Jones polynomials of closed 3-braids via the Temperley-Lieb algebra.

TL3 is five-dimensional with diagram basis {1, e1, e2, e1e2, e2e1} and

    e_i^2 = d e_i,   e1 e2 e1 = e1,   e2 e1 e2 = e2,   d = -A^2 - A^-2.

The Kauffman-bracket skein sends s_i to A + A^-1 e_i (inverse crossings to
A^-1 + A e_i); closing a basis diagram with the braid-closure arcs leaves
3, 2, 2, 1, 1 loops respectively, so the bracket of a closed braid is the
d^(loops-1)-weighted sum of the image's coefficients.  The Jones polynomial
is V = (-A)^(-3 writhe) <closure> rewritten in t = A^-4; knot closures give
integer powers of t, links can give half powers.

``torus_jones`` evaluates the closed-form Jones polynomial of the (r, s)
torus link and acts as an engine-independent cross-check: the closure of
s1^s s2 is the (2, s) torus link and the closure of delta^s the (3, s) one.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

from .laurent import LaurentPoly, divide_exact
from .words import Word, exponent_sum

# Basis order: 1, e1, e2, e1e2, e2e1.
_BASIS_SIZE = 5
_ID, _E1, _E2, _E12, _E21 = range(_BASIS_SIZE)

# Loops left after closing each basis diagram with the braid-closure arcs.
CLOSURE_LOOPS = (3, 2, 2, 1, 1)

# _PRODUCTS[i][j] = (k, n) meaning basis_i * basis_j = d^n * basis_k.
_PRODUCTS = (
    ((_ID, 0), (_E1, 0), (_E2, 0), (_E12, 0), (_E21, 0)),
    ((_E1, 0), (_E1, 1), (_E12, 0), (_E12, 1), (_E1, 0)),
    ((_E2, 0), (_E21, 0), (_E2, 1), (_E2, 0), (_E21, 1)),
    ((_E12, 0), (_E1, 0), (_E12, 1), (_E12, 0), (_E1, 1)),
    ((_E21, 0), (_E21, 1), (_E2, 0), (_E2, 1), (_E21, 0)),
)


def _a(exp: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial("A", 2 * exp, coeff)


LOOP_VALUE = _a(2, -1) + _a(-2, -1)  # d = -A^2 - A^-2

_A_ZERO = LaurentPoly.zero("A")
_LOOP_POWERS = (LaurentPoly.one("A"), LOOP_VALUE, LOOP_VALUE * LOOP_VALUE)


@dataclasses.dataclass(frozen=True)
class TLElement:
    """An element of TL3: five bracket-variable coefficients over the basis."""

    coeffs: tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]

    @classmethod
    def identity(cls) -> TLElement:
        return cls((LaurentPoly.one("A"), _A_ZERO, _A_ZERO, _A_ZERO, _A_ZERO))

    @classmethod
    def basis_element(cls, index: int) -> TLElement:
        coeffs = [_A_ZERO] * _BASIS_SIZE
        coeffs[index] = LaurentPoly.one("A")
        return cls(tuple(coeffs))

    def __add__(self, other: TLElement) -> TLElement:
        return TLElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, factor: LaurentPoly) -> TLElement:
        return TLElement(tuple(c * factor for c in self.coeffs))

    def __mul__(self, other: TLElement) -> TLElement:
        acc = [_A_ZERO] * _BASIS_SIZE
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j, cj in enumerate(other.coeffs):
                if cj.is_zero():
                    continue
                k, bubbles = _PRODUCTS[i][j]
                acc[k] = acc[k] + ci * cj * _LOOP_POWERS[bubbles]
        return TLElement(tuple(acc))

    def __pow__(self, exponent: int) -> TLElement:
        if exponent < 0:
            raise ValueError("use the inverse generator images instead")
        acc = TLElement.identity()
        base = self
        while exponent:
            if exponent % 2:
                acc = acc * base
            base = base * base
            exponent //= 2
        return acc


def _skein(index: int, sign: int) -> TLElement:
    """Image of s_index^sign: A + A^-1 e (positive) or A^-1 + A e (negative)."""
    e = TLElement.basis_element(_E1 if index == 1 else _E2)
    unit = TLElement.identity()
    if sign > 0:
        return unit.scaled(_a(1)) + e.scaled(_a(-1))
    return unit.scaled(_a(-1)) + e.scaled(_a(1))


_TL_GENERATORS = {
    (1, 1): _skein(1, 1),
    (1, -1): _skein(1, -1),
    (2, 1): _skein(2, 1),
    (2, -1): _skein(2, -1),
    (3, 1): _skein(1, -1) * _skein(2, 1) * _skein(1, 1),
    (3, -1): _skein(1, -1) * _skein(2, -1) * _skein(1, 1),
}


def tl_image(word: Word) -> TLElement:
    """Multiplicative image of the word in TL3 (a3 through its classical form)."""
    result = TLElement.identity()
    for subscript, exponent in word.syllables:
        sign = 1 if exponent > 0 else -1
        result = result * (_TL_GENERATORS[(subscript, sign)] ** abs(exponent))
    return result


def bracket_closure(word: Word) -> LaurentPoly:
    """Kauffman bracket of the braid closure, normalized by one loop."""
    image = tl_image(word)
    total = _A_ZERO
    for coeff, loops in zip(image.coeffs, CLOSURE_LOOPS):
        total = total + coeff * _LOOP_POWERS[loops - 1]
    return total


def jones_closure(word: Word) -> LaurentPoly:
    """Exact Jones polynomial of the closed braid, in t = A^-4."""
    writhe = exponent_sum(word)
    normalizer = _a(-3 * writhe, -1 if writhe % 2 else 1)  # (-A)^(-3 writhe)
    value = normalizer * bracket_closure(word)
    terms: dict[int, int] = {}
    for half_a, coeff in value.terms:
        if half_a % 4 != 0:
            raise ArithmeticError("bracket exponent not divisible by 4")
        terms[-half_a // 4] = coeff  # A^(2k) = t^(-k/2): half-units of t
    return LaurentPoly.from_half_units("t", terms)


def torus_jones(r: int, s: int) -> LaurentPoly:
    """Jones polynomial of the (r, s) torus link from its closed form.

    Evaluated with exact rational exponents: the alternating sum over
    l = 0..gcd(r, s) of binomial terms, divided by (1 - t^2) and scaled by
    t^((r-1)(s-1)/2).  The division must be exact and all final exponents
    half-integers; any violation raises (a transcription bug, not data).
    As printed, the closed form carries a (-1)^(gcd-1) relative to the
    Kauffman-normalized convention used by :func:`jones_closure`; the factor
    is applied here, once, so the two engines compute the same invariant.
    """
    if r < 2 or s < 2:
        raise ValueError("torus parameters must satisfy r, s >= 2")
    n = math.gcd(r, s)
    numerator: dict[Fraction, int] = {}

    def add(exp: Fraction, coeff: int) -> None:
        value = numerator.get(exp, 0) + coeff
        if value:
            numerator[exp] = value
        else:
            numerator.pop(exp, None)

    for l in range(n + 1):
        c = math.comb(n, l)
        base = Fraction(r, n) * (n - l) * (1 + Fraction(s, n) * l)
        add(base + Fraction((n - l) * s, n), c)
        add(base + 1 + Fraction(l * s, n), -c)

    # Work in quarter-integer half-units so exponents stay integral: the
    # exponents above are rationals with denominator dividing n, but after
    # the exact division and the prefactor shift every survivor must be a
    # half-integer.  Scale by 4n to be safe, divide, then descale.
    scale = 4 * n
    scaled = {int(exp * scale): c for exp, c in numerator.items()}
    if len(scaled) != len(numerator):
        raise ArithmeticError("exponent collision while scaling")
    divisor = {0: 1, 2 * scale: -1}  # 1 - t^2 at the same scale
    quotient = divide_exact(scaled, divisor)

    prefactor = Fraction((r - 1) * (s - 1), 2)
    sign = -1 if (n - 1) % 2 else 1
    terms: dict[int, int] = {}
    for key, coeff in quotient.items():
        exp = Fraction(key, scale) + prefactor
        half_units = exp * 2
        if half_units.denominator != 1:
            raise ArithmeticError(f"non-half-integer exponent {exp} in torus value")
        terms[int(half_units)] = sign * coeff
    return LaurentPoly.from_half_units("t", terms)
