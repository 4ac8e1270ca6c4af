"""Exact multivariate Laurent polynomials over arbitrary-precision integers.

Terms are kept in a canonical sorted order: exponent tuples compared
lexicographically with the *last* variable least significant, ascending.
That order is used for serialization, rendering and all lex-least choices,
so equal values always print and hash identically.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd as _int_gcd
from operator import add as _add
from typing import Iterable, Iterator, Mapping

try:  # GMP-backed big integers make the packed fast paths fast
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = int

Exponents = tuple[int, ...]
Term = tuple[Exponents, int]


class InexactDivision(ArithmeticError):
    """Raised when a Laurent division has no Laurent-polynomial result."""


def _term_key(exps: Exponents) -> Exponents:
    return tuple(reversed(exps))


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    ``terms`` maps length-``nvars`` integer exponent tuples (negatives
    allowed) to nonzero ints; zero coefficients are never stored.
    """

    __slots__ = ("nvars", "terms", "_key", "_hash")

    nvars: int
    terms: tuple[Term, ...]

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | Iterable[Term]):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, int] = {}
        for exps, coeff in items:
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not have {nvars} entries")
            if coeff:
                c = acc.get(exps, 0) + coeff
                if c:
                    acc[exps] = c
                elif exps in acc:
                    del acc[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(
            self, "terms", tuple(sorted(acc.items(), key=lambda t: _term_key(t[0])))
        )
        object.__setattr__(self, "_key", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> LaurentPoly:
        return cls(nvars, ())

    @classmethod
    def const(cls, c: int, nvars: int) -> LaurentPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> LaurentPoly:
        return cls.const(1, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> LaurentPoly:
        """The generator with 0-based ``index``."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: 1})

    @classmethod
    def monomial(cls, exps: Exponents, coeff: int = 1) -> LaurentPoly:
        return cls(len(exps), {tuple(exps): coeff})

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == (((0,) * self.nvars, 1),)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coeff(self, exps: Exponents) -> int:
        for e, c in self.terms:
            if e == exps:
                return c
        return 0

    def constant_value(self) -> int | None:
        """The integer value if this is a constant, else None."""
        if self.is_zero:
            return 0
        if self.is_monomial and self.terms[0][0] == (0,) * self.nvars:
            return self.terms[0][1]
        return None

    def min_exponents(self) -> Exponents:
        """Componentwise minimum exponent over all terms (zero poly: all 0)."""
        if self.is_zero:
            return (0,) * self.nvars
        mins = list(self.terms[0][0])
        for exps, _ in self.terms[1:]:
            for i, e in enumerate(exps):
                if e < mins[i]:
                    mins[i] = e
        return tuple(mins)

    def content(self) -> int:
        """Nonnegative gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for _, c in self.terms:
            g = _int_gcd(g, c)
            if g == 1:
                return 1
        return g

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    # -- equality / hashing -------------------------------------------

    def sort_key(self) -> tuple:
        key = object.__getattribute__(self, "_key")
        if key is None:
            key = (self.nvars, tuple((_term_key(e), c) for e, c in self.terms))
            object.__setattr__(self, "_key", key)
        return key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.nvars, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    # -- arithmetic ----------------------------------------------------

    def _check_compatible(self, other: LaurentPoly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nvars)
        self._check_compatible(other)
        acc = dict(self.terms)
        for exps, c in other.terms:
            s = acc.get(exps, 0) + c
            if s:
                acc[exps] = s
            elif exps in acc:
                del acc[exps]
        return LaurentPoly(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly.const(other, self.nvars) + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms})
        self._check_compatible(other)
        if len(self.terms) * len(other.terms) >= 4096:
            packed = _packed_mul(self, other)
            if packed is not None:
                return packed
        acc: dict[Exponents, int] = {}
        get = acc.get
        if other is self or self.terms == other.terms:
            terms = self.terms
            for i, (ea, ca) in enumerate(terms):
                exps = tuple(x + x for x in ea)
                s = get(exps, 0) + ca * ca
                if s:
                    acc[exps] = s
                elif exps in acc:
                    del acc[exps]
                ca2 = 2 * ca
                for eb, cb in terms[i + 1 :]:
                    exps = tuple(map(_add, ea, eb))
                    s = get(exps, 0) + ca2 * cb
                    if s:
                        acc[exps] = s
                    elif exps in acc:
                        del acc[exps]
            return LaurentPoly(self.nvars, acc)
        small, big = (self.terms, other.terms)
        if len(small) > len(big):
            small, big = big, small
        for ea, ca in small:
            for eb, cb in big:
                exps = tuple(map(_add, ea, eb))
                s = get(exps, 0) + ca * cb
                if s:
                    acc[exps] = s
                elif exps in acc:
                    del acc[exps]
        return LaurentPoly(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial:
                raise InexactDivision("negative power of a non-monomial")
            exps, c = self.terms[0]
            if abs(c) != 1:
                raise InexactDivision("negative power of a non-unit coefficient")
            coeff = -1 if (c == -1 and k % 2) else 1
            return LaurentPoly(self.nvars, {tuple(k * e for e in exps): coeff})
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift(self, exps: Exponents) -> LaurentPoly:
        """Multiply by the monomial with the given exponent tuple."""
        if len(exps) != self.nvars:
            raise ValueError("shift exponent length mismatch")
        return LaurentPoly(
            self.nvars,
            {tuple(e + s for e, s in zip(t, exps)): c for t, c in self.terms},
        )

    def __truediv__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nvars)
        return self.divide_exact(other)

    def divide_exact(self, q: LaurentPoly) -> LaurentPoly:
        """Exact Laurent division; raises InexactDivision if no result exists.

        The divisor and dividend are shifted into ordinary polynomials, the
        quotient is found by long division, and the result is back-checked by
        multiplication so that any slip surfaces as a loud error.
        """
        self._check_compatible(q)
        if q.is_zero:
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero:
            return LaurentPoly.zero(self.nvars)
        p_shift = self.min_exponents()
        q_shift = q.min_exponents()
        p_poly = self.shift(tuple(-e for e in p_shift))
        q_poly = q.shift(tuple(-e for e in q_shift))
        unshift = tuple(a - b for a, b in zip(p_shift, q_shift))
        candidate = _packed_divide(p_poly, q_poly)
        if candidate is not None:
            result = candidate.shift(unshift)
            if result * q == self:
                return result
            # The packed route is only conclusive for nonnegative quotients;
            # fall through to the exact long division.
        quotient = _poly_divide_exact(p_poly, q_poly)
        result = quotient.shift(unshift)
        if result * q != self:
            raise InexactDivision("back-multiplication check failed")
        return result

    # -- evaluation ----------------------------------------------------

    def eval(self, point: tuple[Fraction | int, ...]) -> Fraction:
        """Exact value at a point of rationals.

        A zero coordinate combined with a negative exponent is an error.
        """
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        values = [Fraction(x) for x in point]
        total = Fraction(0)
        for exps, c in self.terms:
            term = Fraction(c)
            for v, e in zip(values, exps):
                if e == 0:
                    continue
                if v == 0 and e < 0:
                    raise ZeroDivisionError("zero substituted into a negative exponent")
                term *= v ** e
            total += term
        return total


def _leading(p: LaurentPoly) -> Term:
    # Greatest term in the canonical order; well defined for p != 0.
    return p.terms[-1]


# -- packed (big-integer) convolution fast path -----------------------------
#
# Polynomials with all-positive coefficients embed into one big integer by
# writing the coefficients as base-2**B digits indexed by the position of the
# exponent inside a bounding box.  One CPython bigint multiply then performs
# the whole convolution; the caller's back-multiplication check keeps the
# path honest.  B is chosen so no convolution digit can overflow.

_PACK_POSITION_LIMIT = 1 << 22
_PACK_BIT_LIMIT = 1 << 26


def _pack(
    terms: tuple[Term, ...],
    mins: Exponents,
    strides: Exponents,
    nbytes: int,
    positions: int,
) -> int:
    buf = bytearray(positions * nbytes)
    for exps, coeff in terms:
        position = 0
        for e, m, s in zip(exps, mins, strides):
            position += (e - m) * s
        offset = position * nbytes
        buf[offset : offset + nbytes] = coeff.to_bytes(nbytes, "little")
    return int.from_bytes(buf, "little")


def _unpack(
    packed: int,
    nvars: int,
    mins: Exponents,
    strides: Exponents,
    nbytes: int,
    positions: int,
) -> dict[Exponents, int]:
    buf = packed.to_bytes(positions * nbytes, "little")
    terms: dict[Exponents, int] = {}
    for position in range(positions):
        offset = position * nbytes
        chunk = buf[offset : offset + nbytes]
        if any(chunk):
            remainder = position
            exps = [0] * nvars
            for i in range(nvars - 1, -1, -1):
                exps[i], remainder = divmod(remainder, strides[i])
                exps[i] += mins[i]
            terms[tuple(exps)] = int.from_bytes(chunk, "little")
    return terms


def _packed_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    """Multiplication via one bigint product; None when inapplicable."""
    if p.nvars == 0 or p.is_zero or q.is_zero:
        return None
    if any(c < 0 for _, c in p.terms) or any(c < 0 for _, c in q.terms):
        return None
    max_p = max(c for _, c in p.terms)
    max_q = max(c for _, c in q.terms)
    bound = min(len(p.terms), len(q.terms)) * max_p * max_q
    bits = bound.bit_length() + 1
    return _packed_mul_boxed(p, q, bits)


def _box_of(terms: tuple[Term, ...], nvars: int) -> tuple[list[int], list[int]]:
    mins = list(terms[0][0])
    maxs = list(terms[0][0])
    for exps, _ in terms[1:]:
        for i, e in enumerate(exps):
            if e < mins[i]:
                mins[i] = e
            elif e > maxs[i]:
                maxs[i] = e
    return mins, maxs


def _packed_mul_boxed(p: LaurentPoly, q: LaurentPoly, bits: int) -> LaurentPoly | None:
    nvars = p.nvars
    nbytes = (bits + 7) // 8
    p_mins, p_maxs = _box_of(p.terms, nvars)
    q_mins, q_maxs = _box_of(q.terms, nvars)
    strides = [1] * nvars
    positions = 1
    for i in range(nvars):
        strides[i] = positions
        positions *= (p_maxs[i] - p_mins[i]) + (q_maxs[i] - q_mins[i]) + 1
        if positions > _PACK_POSITION_LIMIT:
            return None
    if positions * nbytes * 8 > _PACK_BIT_LIMIT:
        return None
    mins = tuple(p_mins[i] + q_mins[i] for i in range(nvars))
    packed = _mpz(
        _pack(p.terms, tuple(p_mins), tuple(strides), nbytes, positions)
    ) * _mpz(_pack(q.terms, tuple(q_mins), tuple(strides), nbytes, positions))
    return LaurentPoly(
        nvars, _unpack(int(packed), nvars, mins, tuple(strides), nbytes, positions)
    )


def _packed_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    """Exact-division fast path for all-positive ordinary polynomials.

    If p = r q with nonnegative coefficients everywhere, the base-2**B digit
    string of p is the product of those of r and q (no digit exceeds p's
    largest coefficient), so integer division recovers r; a nonzero integer
    remainder proves inexactness, and false positives die in the caller's
    back-check.
    """
    if p.nvars == 0 or len(p.terms) * len(q.terms) < 4096:
        return None
    if any(c < 0 for _, c in p.terms) or any(c < 0 for _, c in q.terms):
        return None
    nvars = p.nvars
    p_mins, p_maxs = _box_of(p.terms, nvars)
    q_mins, q_maxs = _box_of(q.terms, nvars)
    if any(q_mins[i] < p_mins[i] or q_maxs[i] > p_maxs[i] for i in range(nvars)):
        return None  # a nonnegative quotient cannot exist; let long division decide
    strides = [1] * nvars
    positions = 1
    for i in range(nvars):
        strides[i] = positions
        positions *= p_maxs[i] - p_mins[i] + 1
        if positions > _PACK_POSITION_LIMIT:
            return None
    bits = max(c for _, c in p.terms).bit_length() + 1
    nbytes = (bits + 7) // 8
    if positions * nbytes * 8 > _PACK_BIT_LIMIT:
        return None
    mins = tuple(p_mins)
    packed_p = _mpz(_pack(p.terms, mins, tuple(strides), nbytes, positions))
    packed_q = _mpz(_pack(q.terms, mins, tuple(strides), nbytes, positions))
    quotient, remainder = divmod(packed_p, packed_q)
    if remainder:
        return None  # inconclusive: exact quotients with mixed signs do this
    zero_mins = (0,) * nvars
    terms = _unpack(int(quotient), nvars, zero_mins, tuple(strides), nbytes, positions)
    return LaurentPoly(nvars, terms)


def _heap_key(exps: Exponents) -> tuple[int, ...]:
    # Min-heap entry that pops the canonically greatest exponent first.
    return tuple(-x for x in reversed(exps))


def _poly_divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Long division of ordinary polynomials; single divisor, exact or error.

    Leading terms are drawn from a max-heap of candidate exponents; every
    exponent produced by a subtraction lies strictly below the one being
    processed, so each candidate enters the heap once.
    """
    nvars = p.nvars
    q_lead_exps, q_lead_coeff = _leading(q)
    q_rest = q.terms[:-1]
    acc: dict[Exponents, int] = dict(p.terms)
    quot: dict[Exponents, int] = {}
    heap = [_heap_key(e) for e in acc]
    heapq.heapify(heap)
    seen = set(acc)
    get = acc.get
    while heap:
        key = heapq.heappop(heap)
        exps = tuple(-x for x in reversed(key))
        coeff = get(exps)
        if not coeff:
            continue
        del acc[exps]
        diff = tuple(a - b for a, b in zip(exps, q_lead_exps))
        if any(d < 0 for d in diff):
            raise InexactDivision("leading monomial not divisible")
        c, r = divmod(coeff, q_lead_coeff)
        if r:
            raise InexactDivision("leading coefficient not divisible")
        quot[diff] = c
        for q_exps, q_coeff in q_rest:
            target = tuple(map(_add, diff, q_exps))
            s = get(target, 0) - c * q_coeff
            if s:
                acc[target] = s
                if target not in seen:
                    seen.add(target)
                    heapq.heappush(heap, _heap_key(target))
            elif target in acc:
                del acc[target]
    return LaurentPoly(nvars, quot)


# -- polynomial gcd ----------------------------------------------------


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd of two ordinary polynomials (no negative exponents allowed).

    Computed by recursive content/primitive-part reduction with a primitive
    pseudo-remainder sequence in the last variable.  The result is
    sign-normalized: its leading canonical coefficient is positive.
    """
    if any(e < 0 for e in a.min_exponents()) or any(e < 0 for e in b.min_exponents()):
        raise ValueError("poly_gcd requires ordinary polynomials")
    return _gcd(a, b)


def _normalize_sign(p: LaurentPoly) -> LaurentPoly:
    if not p.is_zero and _leading(p)[1] < 0:
        return -p
    return p


def _gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.is_zero:
        return _normalize_sign(b)
    if b.is_zero:
        return _normalize_sign(a)
    if a == b:
        return _normalize_sign(a)
    nvars = a.nvars
    if nvars == 0:
        return LaurentPoly.const(_int_gcd(a.terms[0][1], b.terms[0][1]), 0)
    if a.is_monomial or b.is_monomial:
        return _monomial_gcd(a, b)
    ca, pa = _content_and_primitive(a)
    cb, pb = _content_and_primitive(b)
    c = _lift_last(_gcd(ca, cb))
    if _degree_last(pa) < _degree_last(pb):
        pa, pb = pb, pa
    f, g = pa, pb
    while not g.is_zero:
        r = _pseudo_rem(f, g)
        f, g = g, _primitive_part(r)
    return _normalize_sign(c * _primitive_part(f))


def _monomial_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    coeff = _int_gcd(a.content(), b.content())
    mins_a = a.min_exponents()
    mins_b = b.min_exponents()
    exps = tuple(min(x, y) for x, y in zip(mins_a, mins_b))
    return LaurentPoly.monomial(exps, coeff)


def _degree_last(p: LaurentPoly) -> int:
    return max(e[-1] for e, _ in p.terms) if not p.is_zero else -1


def _split_last(p: LaurentPoly) -> dict[int, LaurentPoly]:
    """View a polynomial as univariate in its last variable."""
    nvars = p.nvars
    buckets: dict[int, dict[Exponents, int]] = {}
    for exps, c in p.terms:
        buckets.setdefault(exps[-1], {})[exps[:-1]] = c
    return {d: LaurentPoly(nvars - 1, t) for d, t in buckets.items()}


def _join_last(coeffs: dict[int, LaurentPoly], nvars: int) -> LaurentPoly:
    terms: dict[Exponents, int] = {}
    for d, poly in coeffs.items():
        for exps, c in poly.terms:
            terms[exps + (d,)] = c
    return LaurentPoly(nvars, terms)


def _lift_last(p: LaurentPoly) -> LaurentPoly:
    """Embed a polynomial in one more (last) variable with exponent 0."""
    return LaurentPoly(p.nvars + 1, {e + (0,): c for e, c in p.terms})


def _content_and_primitive(p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    coeffs = _split_last(p)
    content = LaurentPoly.zero(p.nvars - 1)
    for poly in coeffs.values():
        content = _gcd(content, poly)
        if content.is_one:
            break
    primitive = p.divide_exact(_lift_last(content))
    return content, primitive


def _primitive_part(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero:
        return p
    _, primitive = _content_and_primitive(p)
    return _normalize_sign(primitive)


def _pseudo_rem(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Pseudo-remainder of f by g in the last variable (deg f >= deg g)."""
    nvars = f.nvars
    gd = _split_last(g)
    dg = max(gd)
    g_lead = _lift_last(gd[dg])
    r = f
    while not r.is_zero:
        rd = _split_last(r)
        dr = max(rd)
        if dr < dg:
            break
        r_lead = _lift_last(rd[dr])
        step = tuple(0 for _ in range(nvars - 1)) + (dr - dg,)
        r = r * g_lead - g * r_lead.shift(step)
    return r
