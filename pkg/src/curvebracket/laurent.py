"""Exact integer Laurent polynomials in one variable A.

Polynomials are stored sparsely as a map from exponent to nonzero
coefficient.  The representation is canonical: zero coefficients are never
kept, and the zero polynomial is the empty map.  Coefficients are plain
Python integers but are checked against the signed 64-bit range whenever a
polynomial is built, so an overflow raises instead of silently growing.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class CoefficientOverflowError(OverflowError):
    """A coefficient left the signed 64-bit range."""


class LaurentPoly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, c in items:
            if c:
                acc[exp] = acc.get(exp, 0) + c
        cleaned: dict[int, int] = {}
        for exp, c in acc.items():
            if c == 0:
                continue
            if not INT64_MIN <= c <= INT64_MAX:
                raise CoefficientOverflowError(
                    f"coefficient {c} of A^{exp} exceeds 64-bit range"
                )
            cleaned[exp] = c
        self._coeffs = cleaned

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> LaurentPoly:
        """Single-term polynomial coeff*A^exp; a zero coeff gives 0."""
        return cls({exp: coeff} if coeff else {})

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, descending by exponent."""
        return sorted(self._coeffs.items(), key=lambda t: -t[0])

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({exp: -c for exp, c in self._coeffs.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def mirror(self) -> LaurentPoly:
        """The substitution A -> A^-1 (every exponent negated)."""
        return LaurentPoly({-exp: c for exp, c in self._coeffs.items()})

    def max_degree(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def min_degree(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    def span(self) -> int | None:
        """Max degree minus min degree; None for the zero polynomial."""
        if not self._coeffs:
            return None
        return max(self._coeffs) - min(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for exp, c in self.terms():
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                var = "A" if exp == 1 else f"A^{exp}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> str:
        """JSON array of [exponent, coefficient] pairs, descending."""
        return json.dumps([[exp, c] for exp, c in self.terms()])

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        pairs = json.loads(text)
        return cls((int(exp), int(c)) for exp, c in pairs)


#: The loop value delta = -A^2 - A^-2.
DELTA = LaurentPoly({2: -1, -2: -1})


def delta_pow(k: int) -> LaurentPoly:
    """(-A^2 - A^-2)^k for k >= 0."""
    if k < 0:
        raise ValueError(f"delta power must be nonnegative, got {k}")
    return DELTA ** k
