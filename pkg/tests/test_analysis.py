from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padw import (
    DivergentRadius,
    InvalidWitness,
    cr_bracket,
    cr_difference_valuation,
    cr_observations,
    cr_witness_report,
    critical_radius_scan,
    digit_sum_p_nu_identity,
    growth_modulus,
    p_nu,
    rescaled_coefficient_valuation,
)
from padw.analysis import cr_bracket_exact, cr_counterexample, witness_row

from oracles import cr_direct_difference_ord, vp, w_coeff


@pytest.mark.parametrize("nu,p,expected", [(1, 2, 2), (1, 3, 6), (2, 3, 72), (2, 5, 600)])
def test_p_nu(nu, p, expected):
    assert p_nu(nu, p) == expected


@pytest.mark.parametrize("nu,p,expected", [(1, 2, (1, 1, True)), (2, 3, (4, 4, True)), (1, 5, (4, 4, True))])
def test_digit_sum_identity_examples(nu, p, expected):
    assert digit_sum_p_nu_identity(nu, p) == expected


@pytest.mark.parametrize("n,p,expected", [(1, 2, 1), (1, 7, Fraction(1, 6)), (4, 3, 1), (3, 3, Fraction(5, 2))])
def test_rescaled_coefficient_valuation(n, p, expected):
    assert rescaled_coefficient_valuation(n, p) == expected


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rescaled_matches_coefficient_valuation(p):
    for n in range(1, 120):
        assert rescaled_coefficient_valuation(n, p) == vp(w_coeff(n), p) + Fraction(n, p - 1)


def test_cr_observations_examples():
    assert cr_observations(28, 1, 3) == (0, 0, 0)
    assert cr_observations(9, 1, 2) == (0, 0, 0)
    assert cr_observations(3, 1, 3)[0] == 1


@pytest.mark.parametrize("n,nu,p,ord_x,ord_x1", [(28, 1, 3, 1, 0), (9, 1, 2, 1, 0), (4, 1, 3, 0, 0)])
def test_cr_bracket_examples(n, nu, p, ord_x, ord_x1):
    br = cr_bracket(n, nu, p)
    assert (br.ord_value, br.ord_minus_one) == (ord_x, ord_x1)


@pytest.mark.parametrize("p,nu", [(2, 1), (2, 2), (3, 1), (5, 1)])
def test_cr_bracket_matches_exact_rational(p, nu):
    for n in range(1, 60):
        br = cr_bracket(n, nu, p)
        x = cr_bracket_exact(n, nu, p)
        assert br.ord_value == vp(x, p)
        assert br.value.congruent(br.value._coerce(x))
        assert br.ord_minus_one == (vp(x - 1, p) if x != 1 else float("inf"))


@pytest.mark.parametrize("n,nu,p,expected", [(28, 1, 3, 1), (9, 1, 2, 2), (10, 1, 3, 1)])
def test_cr_difference_valuation_examples(n, nu, p, expected):
    assert cr_difference_valuation(n, nu, p) == expected


@pytest.mark.parametrize("p", [2, 3])
def test_factorization_matches_direct_difference(p):
    for n in range(1, 201):
        assert cr_difference_valuation(n, 1, p) == cr_direct_difference_ord(n, 1, p), n


def test_witness_report_examples():
    rep = cr_witness_report(1, 3, 1, [3, 4, 5])
    assert [r.n for r in rep.rows] == [28, 82, 244]
    assert all(r.diff_ord == 1 and r.bracket_unit for r in rep.rows)
    rep = cr_witness_report(1, 2, 1, [4, 3])
    assert [r.n for r in rep.rows] == [9, 17]
    assert all(r.diff_ord == 2 for r in rep.rows)
    with pytest.raises(InvalidWitness):
        cr_witness_report(1, 3, 1, [1])


def test_witness_accepts_k_divisible_by_p():
    row = witness_row(1, 3, 3, 3)
    assert row.n == 82 and row.observations == (0, 0, 0)
    row = witness_row(1, 3, 2, 3)
    assert row.n == 55 and row.s_n == 3 and row.diff_ord == Fraction(3, 2)


def test_report_bound_and_counterexample():
    rep = cr_witness_report(2, 5, 1, range(5, 9))
    assert rep.max_diff_ord == Fraction(1, 2)
    assert rep.defeats(Fraction(3, 4))
    assert not rep.defeats(Fraction(1, 2))
    row = cr_counterexample(3, 1, 100, Fraction(3, 2))
    assert row is not None and row.n >= 100


@pytest.mark.parametrize("t,p", [(1, 5), (2, 2), (Fraction(7, 2), 3), (Fraction(11, 20), 3)])
def test_growth_modulus_examples(t, p):
    rep = growth_modulus(t, p)
    assert rep.value_ord == t and rep.argmax == (1,) and rep.certified


def test_growth_modulus_rejects_boundary():
    with pytest.raises(DivergentRadius):
        growth_modulus(Fraction(1, 2), 2)
    with pytest.raises(DivergentRadius):
        growth_modulus(1, 2)


def test_growth_scan_bound_beats_oracle():
    rep = growth_modulus(Fraction(3, 4), 3, n_scan=500)
    assert rep.scan_bound == 500
    assert min(n * rep.t + vp(w_coeff(n), 3) for n in range(1, 500)) == rep.value_ord


@pytest.mark.parametrize("p,n,expected", [(2, 2, 0), (3, 4, Fraction(1, 3)), (5, 5, Fraction(-3, 4))])
def test_critical_crossing_examples(p, n, expected):
    cert = critical_radius_scan(p, n)
    assert dict(cert.crossings)[n] == expected
    assert cert.holds


def test_critical_pairs_inside_disk_are_dominated():
    # terms 8 and 10 meet at t = 1 for p = 3, well below the linear term
    cert = critical_radius_scan(3, 12, pair_bound=12)
    assert (8, 10, Fraction(1)) in cert.dominated_pairs
    assert cert.holds


@given(st.sampled_from([2, 3, 5]), st.integers(1, 6), st.integers(1, 30))
@settings(max_examples=80, deadline=None)
def test_growth_modulus_property(p, num, den):
    t = Fraction(1, p - 1) + Fraction(num, den)
    rep = growth_modulus(t, p)
    assert rep.value_ord == t and rep.argmax == (1,)


def test_legendre_quotient_is_integer():
    for p in (2, 3, 5, 7):
        for n in range(1, 3000):
            s = sum(int(d) for d in _digits(n, p))
            assert (n - s) % (p - 1) == 0 and n - s >= 0


def _digits(n, p):
    while n:
        n, r = divmod(n, p)
        yield r
