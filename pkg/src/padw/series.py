"""Power series for exp_p, log_p and the p-adic Lambert W function.

All three series are evaluated by Horner's rule with a certified truncation
index, so a result returned at absolute precision ``A`` is correct modulo
``p**A``.  The Lambert W value can also be obtained by Newton iteration on
``w * exp(w) = x``; the two routes are independent and are cross-checked in
the test-suite.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .core import (
    INFINITY,
    PadicNumber,
    Valuation,
    check_prime,
    from_rational,
    ord_factorial,
    ord_int,
)
from .errors import DivergentInput, NoConvergence, PrecisionExhausted

GUARD_DIGITS = 5


def radius_exponent(p: int) -> Fraction:
    """``1/(p-1)``: the disk of convergence is ``ord(x) > 1/(p-1)``."""
    return Fraction(1, p - 1)


@dataclass(frozen=True)
class ConvergenceThreshold:
    prime: int

    @property
    def rho(self) -> Fraction:
        return radius_exponent(self.prime)

    @property
    def r_p(self) -> float:
        return self.prime ** -float(self.rho)

    def contains(self, t: Valuation) -> bool:
        return t > self.rho


class Family(enum.Enum):
    LAMBERT_W = "W"
    EXP = "exp"
    LOG = "log"


@dataclass(frozen=True)
class CoefficientRule:
    """Exact Taylor coefficients of one of the supported series.

    ``LOG`` is the series of ``log(1 + t)`` in ``t``.
    """

    family: Family

    def coefficient(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"negative index {n}")
        if self.family is Family.EXP:
            return Fraction(1, math.factorial(n))
        if n == 0:
            return Fraction(0)
        if self.family is Family.LAMBERT_W:
            return Fraction((-n) ** (n - 1), math.factorial(n))
        return Fraction((-1) ** (n + 1), n)

    def converges(self, t: Valuation, p: int) -> bool:
        if self.family is Family.LOG:
            return t >= 1
        return t > radius_exponent(p)

    def truncation_index(self, t: Valuation, target: int, p: int) -> int:
        if self.family is Family.LOG:
            return _log_truncation_index(t, target, p)
        return truncation_index(t, target, p)


LAMBERT_W = CoefficientRule(Family.LAMBERT_W)
EXP = CoefficientRule(Family.EXP)
LOG = CoefficientRule(Family.LOG)


def w_coefficient(n: int) -> Fraction:
    if n < 1:
        raise ValueError(f"W coefficients start at n = 1, got {n}")
    return LAMBERT_W.coefficient(n)


def w_term_valuation(n: int, t: Valuation, p: int) -> Valuation:
    """Exact ``ord_p`` of the n-th W term when ``ord_p(x) = t``."""
    if t == INFINITY:
        return INFINITY
    t = Fraction(t)
    return n * t + (n - 1) * ord_int(n, p) - ord_factorial(n, p)


def w_term_lower_bound(n: int, t: Valuation, p: int) -> Fraction:
    """``n*(t - rho) + rho``, a lower bound for the n-th term valuation.

    Comes from ``S_n >= 1`` in Legendre's formula; tight at ``n = 1``.
    """
    rho = radius_exponent(p)
    t = Fraction(t)
    if t <= rho:
        raise DivergentInput(f"t = {t} is not above 1/(p-1) = {rho}")
    return n * (t - rho) + rho


def truncation_index(t: Valuation, target: int, p: int) -> int:
    """Smallest ``M >= 1`` such that every W or exp term with ``n > M``
    has valuation at least ``target``."""
    rho = radius_exponent(p)
    if t == INFINITY:
        return 1
    t = Fraction(t)
    if t <= rho:
        raise DivergentInput(
            f"valuation {t} is not above 1/(p-1) = {rho} for p = {p}")
    return max(1, math.ceil((target - rho) / (t - rho)))


def _log_truncation_index(t: Valuation, target: int, p: int) -> int:
    # ord(t^n / n) >= n*t - floor(log_p n); n*t - log_p(n) increases for n >= 2
    if t == INFINITY:
        return 1
    if t < 1:
        raise DivergentInput(f"log series needs ord(u - 1) >= 1, got {t}")
    t = Fraction(t)
    m = 1
    while True:
        n = m + 1
        slack = n * t - target
        if slack >= 0 and p ** math.floor(slack) >= n:
            return m
        m += 1


def eval_series(rule: CoefficientRule, x: PadicNumber, target: int) -> PadicNumber:
    """Truncated sum of ``rule`` at ``x``, correct modulo ``p**target``.

    Coefficients are injected at relative precision
    ``target - ord(x) + GUARD_DIGITS``.
    """
    p = x.prime
    b0 = rule.coefficient(0)
    if x.is_zero:
        return from_rational(1, 1, p, target) if b0 else PadicNumber.zero(p)
    if x.unit == 0:
        # 0 + O(p^a): every term with n >= 1 vanishes modulo p^a
        if not rule.converges(Fraction(x.val), p):
            raise PrecisionExhausted("argument too imprecise to place in the disk")
        a = min(x.val, target)
        if b0:
            return from_rational(1, 1, p, a) if a > 0 else PadicNumber.zero(p, a)
        return PadicNumber.zero(p, a)

    t = x.valuation()
    if not rule.converges(t, p):
        raise DivergentInput(
            f"{rule.family.value} series diverges at valuation {t} for p = {p}")
    m = rule.truncation_index(t, target, p)
    work = max(1, target - x.val + GUARD_DIGITS)

    def inject(n: int) -> PadicNumber:
        c = rule.coefficient(n)
        return from_rational(c.numerator, c.denominator, p, work)

    acc = inject(m)
    for n in range(m - 1, 0, -1):
        acc = inject(n)._add(x * acc)
    acc = x * acc
    if b0:
        acc = inject(0)._add(acc)
    return acc.cap(target)


def _require_disk(x: PadicNumber, what: str) -> None:
    if x.is_zero:
        return
    t = Fraction(x.val)
    rho = radius_exponent(x.prime)
    if t <= rho:
        raise DivergentInput(
            f"{what} needs ord(x) > {rho} for p = {x.prime}, got {t}")


def exp_p(x: PadicNumber, A: int) -> PadicNumber:
    _require_disk(x, "exp_p")
    return eval_series(EXP, x, A)


def log_p(u: PadicNumber, A: int) -> PadicNumber:
    """Logarithm of a 1-unit ``u`` (``ord(u - 1) >= 1``)."""
    if u.is_zero or (u.unit and u.val != 0):
        raise DivergentInput("log_p is defined here only on 1-units")
    t = u._add(-u._coerce(1))
    if t.unit and t.val < 1:
        raise DivergentInput(f"log_p needs ord(u - 1) >= 1, got {t.val}")
    return eval_series(LOG, t, A)


def lambert_w_series(x: PadicNumber, A: int) -> PadicNumber:
    """W_p(x) from its Taylor series, correct modulo ``p**A``."""
    _require_disk(x, "lambert_w_series")
    return eval_series(LAMBERT_W, x, A)


class NewtonStep(NamedTuple):
    iterate: PadicNumber
    residual_ord: Valuation


def newton_iterates(x: PadicNumber, A: int) -> Iterator[NewtonStep]:
    """Yield ``w_k`` and ``ord(w_k exp(w_k) - x)`` until the residual
    reaches ``p**A``.  Starts from ``w_0 = x``."""
    _require_disk(x, "lambert_w_newton")
    p = x.prime
    if x.is_zero:
        yield NewtonStep(x, INFINITY)
        return
    work = A + GUARD_DIGITS
    w = x.cap(work)
    last = None
    while True:
        e = exp_p(w, work)
        r = (w * e)._add(-x)
        if r.absprec < A:
            raise PrecisionExhausted(
                f"residual known only modulo {p}^{r.absprec}, need {A}")
        ord_r = INFINITY if r.unit == 0 else r.val
        yield NewtonStep(w, ord_r)
        if ord_r >= A:
            return
        if last is not None and ord_r <= last:
            raise NoConvergence(
                f"residual valuation stalled at {ord_r} (previous {last})")
        last = ord_r
        w = w._add(-(r / ((1 + w) * e)))


def lambert_w_newton(x: PadicNumber, A: int) -> PadicNumber:
    """W_p(x) by Newton iteration on ``w exp(w) = x``."""
    for step in newton_iterates(x, A):
        pass
    return step.iterate.cap(A) if not x.is_zero else x


class IdentityCheck(NamedTuple):
    holds: bool
    residual_ord: Valuation | None


def verify_defining_identity(x: PadicNumber, A: int) -> IdentityCheck:
    """Check ``W(x) exp(W(x)) == x`` modulo ``p**A``.

    ``residual_ord`` is the valuation of the residual when it is nonzero at
    the working precision, else None.
    """
    w = lambert_w_series(x, A)
    if w.is_zero:
        return IdentityCheck(x.is_zero, None)
    r = (w * exp_p(w, A))._add(-x)
    if r.unit == 0:
        return IdentityCheck(r.absprec >= A, None)
    return IdentityCheck(r.val >= A, Fraction(r.val))


def boundary_divergence_scan(p: int, n_max: int) -> list[tuple[int, Fraction]]:
    """Term valuations of the W series on the boundary ``t = 1/(p-1)``."""
    check_prime(p)
    if n_max < p:
        raise ValueError(f"n_max must be at least p = {p}")
    rho = radius_exponent(p)
    return [(n, w_term_valuation(n, rho, p)) for n in range(1, n_max + 1)]


def boundary_witnesses(p: int, scan) -> list[int]:
    """Indices ``n = p^j + 1`` in ``scan`` whose term valuation is ``2/(p-1)``."""
    target = 2 * radius_exponent(p)
    hits = []
    for n, t in scan:
        m = n - 1
        if m >= p and p ** ord_int(m, p) == m and t == target:
            hits.append(n)
    return hits
