"""Valuation-level analysis of the W series.

Everything here is exact rational arithmetic on valuations.  The rescaled
series ``W(pi x)`` with ``pi**(p-1) = p`` is handled only through
``ord(pi) = 1/(p-1)``; the element ``pi`` itself is never built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .core import (
    PadicNumber,
    Valuation,
    check_prime,
    digit_sum,
    from_rational,
    ord_int,
)
from .errors import DivergentRadius, InvalidWitness, PrecisionExhausted
from .series import (
    radius_exponent,
    truncation_index,
    w_term_lower_bound,
    w_term_valuation,
)

BRACKET_PRECISION = 16
BRACKET_MAX_PRECISION = 4096


@dataclass(frozen=True)
class GrowthModulusReport:
    prime: int
    t: Fraction
    value_ord: Fraction
    argmax: tuple[int, ...]
    scan_bound: int
    tail_ord: Fraction

    @property
    def certified(self) -> bool:
        return self.tail_ord > self.value_ord


def growth_modulus(t, p: int, n_scan: int = 0) -> GrowthModulusReport:
    """Largest term of the W series on ``|x| = p**(-t)``, as a valuation.

    Terms ``n <= M`` are scanned with ``M = truncation_index(t, t + 1, p)``;
    beyond ``M`` the lower bound certifies every term is strictly smaller.
    """
    check_prime(p)
    t = Fraction(t)
    rho = radius_exponent(p)
    if t <= rho:
        raise DivergentRadius(f"t = {t} must exceed 1/(p-1) = {rho}")
    m = max(truncation_index(t, t + 1, p), n_scan)
    vals = [w_term_valuation(n, t, p) for n in range(1, m + 1)]
    best = min(vals)
    argmax = tuple(n for n, v in enumerate(vals, 1) if v == best)
    report = GrowthModulusReport(p, t, best, argmax, m, w_term_lower_bound(m + 1, t, p))
    assert report.certified, report
    return report


def critical_line_intercept(n: int, p: int) -> Fraction:
    """``c_n`` with term valuation ``n*t + c_n`` for the W series."""
    return (n - 1) * ord_int(n, p) - Fraction(n - digit_sum(n, p), p - 1)


@dataclass(frozen=True)
class CriticalRadiusCertificate:
    prime: int
    n_max: int
    # t*(n) where term n meets term 1; all must satisfy t*(n) <= 1/(p-1)
    crossings: tuple[tuple[int, Fraction], ...]
    pair_bound: int
    # (n, m, t) pairs meeting inside the disk with a common value not maximal
    dominated_pairs: tuple[tuple[int, int, Fraction], ...]
    violations: tuple = ()

    @property
    def holds(self) -> bool:
        return not self.violations


def critical_radius_scan(p: int, n_max: int, pair_bound: int = 40) -> CriticalRadiusCertificate:
    """Certify that the W series has no critical radius in ``t > 1/(p-1)``.

    Every term ``n >= 2`` meets the linear term at ``t*(n) <= 1/(p-1)``.
    For pairs ``n, m <= pair_bound`` meeting inside the disk, the tie is
    checked to lie strictly below the linear term there, so it is not a
    tie for the maximum.
    """
    check_prime(p)
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rho = radius_exponent(p)
    c1 = critical_line_intercept(1, p)
    crossings = []
    violations = []
    for n in range(2, n_max + 1):
        ts = (c1 - critical_line_intercept(n, p)) / (n - 1)
        crossings.append((n, ts))
        if ts > rho:
            violations.append(("crossing", n, ts))

    dominated = []
    for n in range(2, pair_bound + 1):
        cn = critical_line_intercept(n, p)
        for m in range(n + 1, pair_bound + 1):
            ts = (critical_line_intercept(m, p) - cn) / (n - m)
            if ts <= rho:
                continue
            # common value n*t + c_n versus the linear term t + c_1
            if n * ts + cn > ts + c1:
                dominated.append((n, m, ts))
            else:
                violations.append(("pair", n, m, ts))
    return CriticalRadiusCertificate(p, n_max, tuple(crossings), pair_bound,
                                     tuple(dominated), tuple(violations))


# Christol-Robba analysis of W(pi x)

def p_nu(nu: int, p: int) -> int:
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    return p**nu * (p**nu - 1)


def digit_sum_p_nu_identity(nu: int, p: int) -> tuple[int, int, bool]:
    lhs = digit_sum(p_nu(nu, p), p)
    rhs = nu * (p - 1)
    return lhs, rhs, lhs == rhs


def rescaled_coefficient_valuation(n: int, p: int) -> Fraction:
    """``ord`` of the n-th coefficient of ``W(pi x)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (n - 1) * ord_int(n, p) + Fraction(digit_sum(n, p), p - 1)


def cr_observations(n: int, nu: int, p: int) -> tuple[int, int, int]:
    """``(ord n, ord(n + p_nu), S_{n+p_nu} - S_n - S_{p_nu})``."""
    q = p_nu(nu, p)
    return (ord_int(n, p), ord_int(n + q, p),
            digit_sum(n + q, p) - digit_sum(n, p) - digit_sum(q, p))


@dataclass(frozen=True)
class CRBracket:
    """Ratio ``X = a_{n+p_nu} / a_n`` of consecutive-shift coefficients."""

    n: int
    nu: int
    prime: int
    value: PadicNumber
    ord_value: Fraction
    ord_minus_one: Valuation


def _bracket_at(n: int, nu: int, p: int, prec: int) -> PadicNumber:
    q = p_nu(nu, p)
    shift, r = divmod(q, p - 1)
    assert r == 0, "p_nu / (p - 1) must be an integer"
    prod = 1
    for j in range(1, q + 1):
        prod *= n + j
    x = from_rational(n + q, n, p, prec) ** (n - 1)
    x = x * from_rational((n + q) ** q * p**shift, prod, p, prec)
    return -x if q % 2 else x


def cr_bracket(n: int, nu: int, p: int) -> CRBracket:
    """Evaluate ``X`` with the factorial-free product for ``n!/(n+p_nu)!``.

    Valuations are exact.  ``X`` is carried p-adically and the precision
    doubles until ``X - 1`` is resolved.
    """
    check_prime(p)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    prec = BRACKET_PRECISION
    while True:
        x = _bracket_at(n, nu, p, prec)
        d = x._add(-x._coerce(1))
        if d.unit:
            return CRBracket(n, nu, p, x, x.valuation(), d.valuation())
        if prec >= BRACKET_MAX_PRECISION:
            raise PrecisionExhausted(f"X - 1 vanishes modulo {p}^{d.val}")
        prec *= 2


def cr_bracket_exact(n: int, nu: int, p: int) -> Fraction:
    """``X`` as an exact rational; only sensible for small ``n``."""
    q = p_nu(nu, p)
    prod = 1
    for j in range(1, q + 1):
        prod *= n + j
    x = (Fraction(n + q, n) ** (n - 1) * (n + q) ** q
         * Fraction(p) ** (q // (p - 1)) / prod)
    return -x if q % 2 else x


def cr_difference_valuation(n: int, nu: int, p: int) -> Fraction:
    """``ord(a_{n+p_nu} - a_n)`` via ``a_{n+p_nu} - a_n = a_n (X - 1)``."""
    return rescaled_coefficient_valuation(n, p) + cr_bracket(n, nu, p).ord_minus_one


@dataclass(frozen=True)
class CRWitnessRow:
    nu: int
    p_nu: int
    alpha: int
    k: int
    n: int
    s_n: int
    diff_ord: Fraction
    predicted_ord: Fraction
    bracket_unit: bool
    # extra evidence, not serialized
    bracket_ord: Fraction = field(default=Fraction(0), compare=False)
    observations: tuple[int, int, int] = field(default=(0, 0, 0), compare=False)

    @property
    def consistent(self) -> bool:
        return not self.bracket_unit or self.diff_ord == self.predicted_ord


@dataclass(frozen=True)
class WitnessReport:
    prime: int
    nu: int
    k: int
    rows: tuple[CRWitnessRow, ...]

    @property
    def max_diff_ord(self) -> Fraction:
        """``|a_{n+p_nu} - a_n| >= p**(-max_diff_ord)`` on every row."""
        return max(r.diff_ord for r in self.rows)

    def defeats(self, eps_ord) -> bool:
        """True when every row has ``|a_{n+p_nu} - a_n| > p**(-eps_ord)``."""
        return all(r.diff_ord < eps_ord for r in self.rows)


def witness_row(nu: int, p: int, k: int, alpha: int) -> CRWitnessRow:
    if alpha <= 2 * nu:
        raise InvalidWitness(f"alpha = {alpha} must exceed 2*nu = {2 * nu}")
    if k < 1:
        raise InvalidWitness(f"k must be >= 1, got {k}")
    n = p**alpha * k + 1
    s = digit_sum(n, p)
    br = cr_bracket(n, nu, p)
    return CRWitnessRow(
        nu=nu, p_nu=p_nu(nu, p), alpha=alpha, k=k, n=n, s_n=s,
        diff_ord=rescaled_coefficient_valuation(n, p) + br.ord_minus_one,
        predicted_ord=Fraction(s, p - 1),
        bracket_unit=br.ord_minus_one == 0,
        bracket_ord=br.ord_value,
        observations=cr_observations(n, nu, p),
    )


def cr_witness_report(nu: int, p: int, k: int, alphas: Iterable[int]) -> WitnessReport:
    check_prime(p)
    alphas = sorted(set(alphas))
    bad = [a for a in alphas if a <= 2 * nu]
    if bad:
        raise InvalidWitness(f"alpha values {bad} do not exceed 2*nu = {2 * nu}")
    rows = sorted((witness_row(nu, p, k, a) for a in alphas),
                  key=lambda r: (r.alpha, r.n))
    return WitnessReport(p, nu, k, tuple(rows))


def cr_counterexample(p: int, nu: int, N: int, eps_ord, k: int = 1) -> CRWitnessRow | None:
    """A witness ``n >= N`` with ``|a_{n+p_nu} - a_n| > p**(-eps_ord)``.

    Uses the smallest admissible ``alpha``; returns None if that row does
    not violate the bound.
    """
    alpha = 2 * nu + 1
    while p**alpha * k + 1 < N:
        alpha += 1
    row = witness_row(nu, p, k, alpha)
    return row if row.diff_ord < Fraction(eps_ord) else None
