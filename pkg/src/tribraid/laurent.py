"""Exact single-variable Laurent polynomials with half-integer exponents.

Exponents are stored in half-units (twice the true exponent), so every
exponent is an int and all arithmetic stays in integer arithmetic.  Knot
closures only ever produce integer powers of t; two- and three-component
links genuinely need half powers like t^(5/2), which is why the half-unit
convention is baked in rather than bolted on.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Mapping


@dataclasses.dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial c_k x^(k/2) with integer coefficients.

    ``terms`` maps half-exponent -> coefficient, stored as a sorted tuple of
    pairs so values are hashable and equality is structural.  ``var`` is a
    display tag ("t" or "A"); mixing variables in arithmetic is an error.
    """

    var: str
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for half_exp, coeff in self.terms:
            if coeff == 0:
                raise ValueError("zero coefficient stored in LaurentPoly")
        keys = [k for k, _ in self.terms]
        if keys != sorted(keys) or len(keys) != len(set(keys)):
            raise ValueError("LaurentPoly terms must be sorted and distinct")

    @classmethod
    def from_half_units(cls, var: str, mapping: Mapping[int, int]) -> LaurentPoly:
        return cls(var, tuple(sorted((k, c) for k, c in mapping.items() if c != 0)))

    @classmethod
    def zero(cls, var: str) -> LaurentPoly:
        return cls(var, ())

    @classmethod
    def one(cls, var: str) -> LaurentPoly:
        return cls(var, ((0, 1),))

    @classmethod
    def monomial(cls, var: str, half_exponent: int, coeff: int = 1) -> LaurentPoly:
        if coeff == 0:
            return cls.zero(var)
        return cls(var, ((half_exponent, coeff),))

    def is_zero(self) -> bool:
        return not self.terms

    def _require_same_var(self, other: LaurentPoly) -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._require_same_var(other)
        acc = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, 0) + c
        return LaurentPoly.from_half_units(self.var, acc)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.var, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.var)
            return LaurentPoly(self.var, tuple((k, c * other) for k, c in self.terms))
        self._require_same_var(other)
        acc: dict[int, int] = {}
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                k = k1 + k2
                acc[k] = acc.get(k, 0) + c1 * c2
        return LaurentPoly.from_half_units(self.var, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        acc = LaurentPoly.one(self.var)
        base = self
        while exponent:
            if exponent % 2:
                acc = acc * base
            base = base * base
            exponent //= 2
        return acc

    def substitute_inverse(self) -> LaurentPoly:
        """The image under x -> x^-1 (negate every exponent)."""
        return LaurentPoly.from_half_units(self.var, {-k: c for k, c in self.terms})

    def json_pairs(self) -> list[list[int]]:
        """[[half-exponent, coefficient], ...] in descending exponent order."""
        return [[k, c] for k, c in sorted(self.terms, reverse=True)]

    def _term_str(self, half_exp: int, coeff: int) -> str:
        if half_exp == 0:
            return str(abs(coeff))
        if half_exp % 2 == 0:
            exp = half_exp // 2
            power = self.var if exp == 1 else f"{self.var}^{exp}"
        else:
            power = f"{self.var}^({half_exp}/2)"
        mag = abs(coeff)
        return power if mag == 1 else f"{mag}{power}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for half_exp, coeff in sorted(self.terms, reverse=True):
            body = self._term_str(half_exp, coeff)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)


def divide_exact(
    dividend: Mapping[int, int], divisor: Mapping[int, int], var: str = "t"
) -> dict[int, int]:
    """Exact division of half-unit-keyed Laurent polynomials.

    Long division from the lowest exponent up; raises ArithmeticError when
    the division leaves a remainder (which in this package always signals a
    transcription bug rather than a data-dependent condition).
    """
    div = {k: c for k, c in divisor.items() if c != 0}
    if not div:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = {k: c for k, c in dividend.items() if c != 0}
    if not rem:
        return {}
    lead_k = min(div)
    lead_c = div[lead_k]
    max_div = max(div)
    max_rem = max(rem)
    quotient: dict[int, int] = {}
    while rem:
        k = min(rem)
        # An exact quotient can never need terms beyond max_rem - max_div.
        if k - lead_k + max_div > max_rem:
            raise ArithmeticError(f"inexact division of {var}-polynomials")
        c = rem[k]
        qc, qr = divmod(c, lead_c)
        if qr:
            raise ArithmeticError(f"inexact division of {var}-polynomials")
        quotient[k - lead_k] = qc
        for dk, dc in div.items():
            key = k - lead_k + dk
            val = rem.get(key, 0) - qc * dc
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return quotient
