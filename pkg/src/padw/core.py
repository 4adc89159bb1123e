"""Capped relative-precision p-adic numbers over Q_p and integer utilities.

A nonzero value is stored as ``p**val * unit`` with ``unit`` known modulo
``p**relprec``.  Zeros come in two flavours: the exact zero, and a zero known
only modulo ``p**val`` (written ``0 + O(p^val)``).  Arithmetic never rounds;
it only drops digits that are not determined by the operands.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import (
    AmbiguousZero,
    DivisionByZero,
    ParseError,
    PrecisionExhausted,
    PrimeError,
)

DEFAULT_PRECISION = 32
PRIME_LIMIT = 2**31

INFINITY = math.inf

# An extended valuation is an exact Fraction, or INFINITY for the exact zero.
Valuation = Union[Fraction, float]

_MR_BASES = (2, 3, 5, 7)  # deterministic for n < 3_215_031_751


@lru_cache(maxsize=256)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for ``n < 2**31``."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool):
        raise PrimeError(f"prime must be an integer, got {p!r}")
    if not 2 <= p < PRIME_LIMIT:
        raise PrimeError(f"prime must lie in [2, 2^31), got {p}")
    if not is_prime(p):
        raise PrimeError(f"{p} is not prime")
    return p


def ord_int(n: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``n``."""
    if n == 0:
        raise ValueError("ord of 0 is infinite")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def ord_rational(q, p: int) -> Valuation:
    """Valuation of an int or Fraction; INFINITY for 0."""
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return Fraction(ord_int(q.numerator, p) - ord_int(q.denominator, p))


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-``p`` digits of ``n >= 1``."""
    if n < 1:
        raise ValueError(f"digit_sum needs n >= 1, got {n}")
    s = 0
    while n:
        n, r = divmod(n, p)
        s += r
    return s


def ord_factorial(n: int, p: int) -> int:
    """Legendre: ``ord_p(n!) = (n - S_n) / (p - 1)``."""
    if n < 0:
        raise ValueError(f"ord_factorial needs n >= 0, got {n}")
    if n == 0:
        return 0
    q, r = divmod(n - digit_sum(n, p), p - 1)
    assert r == 0
    return q


@dataclass(frozen=True)
class PadicNumber:
    """An element of Q_p at capped relative precision.

    Nonzero: ``unit`` in ``[1, p**relprec)``, prime to ``p``.  Inexact zero:
    ``unit == 0``, ``relprec == 0`` and ``val`` is the absolute precision.
    Exact zero: ``is_zero`` is set and the other fields are ignored.
    """

    prime: int
    val: int
    unit: int
    relprec: int
    is_zero: bool = False

    # construction

    @classmethod
    def zero(cls, p: int, absprec: int | None = None) -> PadicNumber:
        """Exact zero, or ``O(p^absprec)`` when ``absprec`` is given."""
        if absprec is None:
            return cls(p, 0, 0, 0, True)
        return cls(p, absprec, 0, 0)

    @classmethod
    def _make(cls, p: int, val: int, residue: int, absprec: int) -> PadicNumber:
        # residue is p**val * (something) reduced modulo p**(absprec - val)
        if absprec <= val:
            return cls(p, absprec, 0, 0)
        n = absprec - val
        residue %= p**n
        if residue == 0:
            return cls(p, absprec, 0, 0)
        k = ord_int(residue, p)
        return cls(p, val + k, residue // p**k, n - k)

    # basic properties

    @property
    def is_inexact_zero(self) -> bool:
        return not self.is_zero and self.unit == 0

    @property
    def absprec(self) -> Valuation:
        if self.is_zero:
            return INFINITY
        return self.val + self.relprec

    def valuation(self) -> Valuation:
        if self.is_zero:
            return INFINITY
        if self.unit == 0:
            raise AmbiguousZero(f"value is 0 + O({self.prime}^{self.val})")
        return Fraction(self.val)

    def cap(self, absprec: int) -> PadicNumber:
        """Forget digits at or beyond ``p**absprec``."""
        if self.is_zero:
            return PadicNumber.zero(self.prime, absprec)
        if self.absprec <= absprec:
            return self
        return PadicNumber._make(self.prime, self.val, self.unit, absprec)

    def to_fraction(self) -> Fraction:
        """Canonical rational representative ``p**val * unit``."""
        if self.is_zero or self.unit == 0:
            return Fraction(0)
        return Fraction(self.prime) ** self.val * self.unit

    def congruent(self, other, absprec: int | None = None) -> bool:
        """True when ``self`` and ``other`` agree modulo ``p**absprec``.

        Without ``absprec`` the joint absolute precision is used.  Asking for
        more digits than either operand carries is a PrecisionExhausted.
        """
        other = self._coerce(other)
        known = min(self.absprec, other.absprec)
        if absprec is None:
            if known == INFINITY:
                return self.to_fraction() == other.to_fraction()
            absprec = known
        elif absprec > known:
            raise PrecisionExhausted(
                f"only {known} digits known, {absprec} requested")
        d = self.to_fraction() - other.to_fraction()
        return d == 0 or ord_rational(d, self.prime) >= absprec

    # coercion

    def _coerce(self, other) -> PadicNumber:
        if isinstance(other, PadicNumber):
            if other.prime != self.prime:
                raise ValueError(
                    f"mixed primes {self.prime} and {other.prime}")
            return other
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return PadicNumber.zero(self.prime)
            n = self.absprec - ord_rational(q, self.prime)
            n = DEFAULT_PRECISION if n == INFINITY else max(int(n), 1)
            return from_rational(q.numerator, q.denominator, self.prime, n)
        return NotImplemented

    # arithmetic

    def _add(self, other: PadicNumber) -> PadicNumber:
        """Sum that may return an inexact zero instead of raising."""
        p = self.prime
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        a = min(self.absprec, other.absprec)
        if self.unit == 0 or other.unit == 0:
            nz = other if self.unit == 0 else self
            return nz.cap(a) if nz.unit else PadicNumber(p, a, 0, 0)
        m = min(self.val, other.val)
        s = self.unit * p ** (self.val - m) + other.unit * p ** (other.val - m)
        return PadicNumber._make(p, m, s, a) if a > m else PadicNumber(p, a, 0, 0)

    def __add__(self, other) -> PadicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        r = self._add(other)
        if r.unit == 0 and not r.is_zero and self.unit and other.unit:
            raise PrecisionExhausted(
                f"sum vanishes modulo {self.prime}^{r.val}")
        return r

    __radd__ = __add__

    def __neg__(self) -> PadicNumber:
        if self.unit == 0:
            return self
        return PadicNumber(self.prime, self.val,
                           self.prime**self.relprec - self.unit, self.relprec)

    def __sub__(self, other) -> PadicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> PadicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> PadicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.prime
        if self.is_zero or other.is_zero:
            return PadicNumber.zero(p)
        if self.unit == 0 or other.unit == 0:
            a = self.val + other.val
            if self.unit == 0 and other.unit == 0:
                return PadicNumber(p, a, 0, 0)
            nz = other if self.unit == 0 else self
            zero = self if self.unit == 0 else other
            return PadicNumber(p, zero.val + nz.val, 0, 0)
        n = min(self.relprec, other.relprec)
        return PadicNumber(p, self.val + other.val,
                           self.unit * other.unit % p**n, n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> PadicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.prime
        if other.is_zero:
            raise DivisionByZero("division by exact zero")
        if other.unit == 0:
            raise PrecisionExhausted("division by a zero known only to precision")
        if self.is_zero:
            return self
        if self.unit == 0:
            return PadicNumber(p, self.val - other.val, 0, 0)
        n = min(self.relprec, other.relprec)
        mod = p**n
        return PadicNumber(p, self.val - other.val,
                           self.unit * pow(other.unit, -1, mod) % mod, n)

    def __rtruediv__(self, other) -> PadicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, e: int) -> PadicNumber:
        if not isinstance(e, int):
            return NotImplemented
        p = self.prime
        if e == 0:
            return PadicNumber(p, 0, 1, self.relprec or DEFAULT_PRECISION)
        if self.unit == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return self if self.is_zero else PadicNumber(p, self.val * e, 0, 0)
        mod = p**self.relprec
        return PadicNumber(p, self.val * e, pow(self.unit, e, mod), self.relprec)

    def __str__(self) -> str:
        return format_padic(self)


def from_rational(a: int, b: int, p: int, N: int = DEFAULT_PRECISION) -> PadicNumber:
    """Expansion of ``a/b`` at relative precision ``N``."""
    check_prime(p)
    if N < 1:
        raise ValueError(f"relative precision must be >= 1, got {N}")
    if b == 0:
        raise DivisionByZero("zero denominator")
    if a == 0:
        return PadicNumber.zero(p)
    va, vb = ord_int(a, p), ord_int(b, p)
    mod = p**N
    unit = (a // p**va) * pow(b // p**vb, -1, mod) % mod
    return PadicNumber(p, va - vb, unit, N)


def from_fraction(q, p: int, N: int = DEFAULT_PRECISION) -> PadicNumber:
    q = Fraction(q)
    return from_rational(q.numerator, q.denominator, p, N)


def add(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    return x + y


def mul(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    return x * y


def div(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    return x / y


def neg(x: PadicNumber) -> PadicNumber:
    return -x


def valuation(x: PadicNumber) -> Valuation:
    return x.valuation()


def digits_of(x: PadicNumber) -> tuple[int, list[int]]:
    """Valuation and little-endian base-p digits of the unit part."""
    if x.unit == 0:
        raise ValueError("digits_of needs a nonzero value")
    p, u = x.prime, x.unit
    digits = []
    for _ in range(x.relprec):
        u, d = divmod(u, p)
        digits.append(d)
    return x.val, digits


# text formats

def format_padic(x: PadicNumber) -> str:
    """Render as ``p^v*(d0,d1,...)+O(p^(v+N))``; zeros as ``0 + O(p^a)``."""
    p = x.prime
    if x.is_zero:
        return "0"
    if x.unit == 0:
        return f"0 + O({p}^{x.val})"
    v, digits = digits_of(x)
    body = ",".join(map(str, digits))
    return f"{p}^{v}*({body})+O({p}^{v + x.relprec})"


_LITERAL = re.compile(
    r"^(?P<p>\d+)\^(?P<v>-?\d+)\*\((?P<d>\d+(?:,\d+)*)\)\+O\((?P=p)\^(?P<a>-?\d+)\)$")
_ZERO = re.compile(r"^0 \+ O\((?P<p>\d+)\^(?P<a>-?\d+)\)$")


def parse_padic(text: str, p: int | None = None) -> PadicNumber:
    """Inverse of :func:`format_padic`; ``p`` is needed only for ``"0"``."""
    text = text.strip()
    if text == "0":
        if p is None:
            raise ParseError("bare exact zero needs an explicit prime")
        return PadicNumber.zero(check_prime(p))
    m = _ZERO.match(text)
    if m:
        return PadicNumber.zero(check_prime(int(m["p"])), int(m["a"]))
    m = _LITERAL.match(text)
    if not m:
        raise ParseError(f"not a p-adic literal: {text!r}")
    prime = check_prime(int(m["p"]))
    v, a = int(m["v"]), int(m["a"])
    digits = [int(d) for d in m["d"].split(",")]
    if a - v != len(digits) or any(d >= prime for d in digits) or digits[0] == 0:
        raise ParseError(f"inconsistent p-adic literal: {text!r}")
    unit = sum(d * prime**i for i, d in enumerate(digits))
    return PadicNumber(prime, v, unit, len(digits))


_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``a/b`` or ``a`` with integer ``a, b``."""
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"not a rational literal: {text!r}")
    den = int(m[2]) if m[2] is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m[1]), den)
