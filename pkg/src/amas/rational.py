"""Normalized rational functions over the Laurent-polynomial ring.

A value is stored as a coprime pair of ordinary polynomials (numerator,
denominator): any common polynomial gcd, integer content gcd and monomial
factor is removed, and the denominator's leading canonical coefficient is
positive.  Structural equality of normalized values therefore coincides with
field equality.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, poly_gcd


class RationalFunc:
    __slots__ = ("num", "den", "_hash")

    num: LaurentPoly
    den: LaurentPoly

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        if num.nvars != den.nvars:
            raise ValueError("variable-count mismatch between numerator and denominator")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalFunc is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> RationalFunc:
        return cls(p, LaurentPoly.one(p.nvars))

    @classmethod
    def variable(cls, index: int, nvars: int) -> RationalFunc:
        return cls.from_laurent(LaurentPoly.variable(index, nvars))

    @classmethod
    def const(cls, c: int, nvars: int) -> RationalFunc:
        return cls.from_laurent(LaurentPoly.const(c, nvars))

    @classmethod
    def one(cls, nvars: int) -> RationalFunc:
        return cls.const(1, nvars)

    # -- queries ---------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def as_laurent(self) -> LaurentPoly | None:
        """The value as a Laurent polynomial when the denominator is a unit."""
        if self.den.is_one:
            return self.num
        if self.den.is_monomial:
            exps, c = self.den.terms[0]
            if abs(c) == 1:
                return (self.num * c).shift(tuple(-e for e in exps))
        return None

    def sort_key(self) -> tuple:
        return (self.num.sort_key(), self.den.sort_key())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: RationalFunc | LaurentPoly | int) -> RationalFunc:
        if isinstance(other, int):
            return RationalFunc.const(other, self.nvars)
        if isinstance(other, LaurentPoly):
            return RationalFunc.from_laurent(other)
        return other

    def __add__(self, other: RationalFunc | LaurentPoly | int) -> RationalFunc:
        o = self._coerce(other)
        return RationalFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunc:
        return RationalFunc(-self.num, self.den)

    def __sub__(self, other: RationalFunc | LaurentPoly | int) -> RationalFunc:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> RationalFunc:
        return self._coerce(other) + (-self)

    def __mul__(self, other: RationalFunc | LaurentPoly | int) -> RationalFunc:
        o = self._coerce(other)
        return RationalFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalFunc | LaurentPoly | int) -> RationalFunc:
        o = self._coerce(other)
        return RationalFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: int) -> RationalFunc:
        return self._coerce(other) / self

    def inverse(self) -> RationalFunc:
        return RationalFunc(self.den, self.num)

    def __pow__(self, k: int) -> RationalFunc:
        if k < 0:
            return self.inverse() ** (-k)
        result = RationalFunc.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def eval(self, point: tuple[Fraction | int, ...]) -> Fraction:
        den = self.den.eval(point)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.eval(point) / den


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    nvars = num.nvars
    if num.is_zero:
        return num, LaurentPoly.one(nvars)
    # Clear negative exponents so both sides are ordinary polynomials.
    shift = tuple(
        -min(a, b, 0) for a, b in zip(num.min_exponents(), den.min_exponents())
    )
    num = num.shift(shift)
    den = den.shift(shift)
    g = poly_gcd(num, den)
    if not g.is_one:
        num = num.divide_exact(g)
        den = den.divide_exact(g)
    # poly_gcd removes any common monomial factor, so exactly one side may
    # still be divisible by a variable; move nothing further.
    if den.terms[-1][1] < 0:
        num, den = -num, -den
    return num, den


def rf_normalize(num: LaurentPoly, den: LaurentPoly) -> RationalFunc:
    """Coprime, sign-normalized representative of num/den."""
    return RationalFunc(num, den)
