"""W(pi x) is not an analytic element: the Christol-Robba differences stay large."""

from fractions import Fraction

from padw import cr_observations, cr_witness_report, digit_sum_p_nu_identity, p_nu
from padw.analysis import cr_bracket, cr_counterexample
from padw.report import witness_record, witness_table

for p in (2, 3, 5):
    print(f"p={p}: p_nu =", [p_nu(nu, p) for nu in (1, 2, 3)],
          "digit-sum identity:", [digit_sum_p_nu_identity(nu, p) for nu in (1, 2, 3)])

# a witness n = p^alpha + 1 with alpha > 2 nu
br = cr_bracket(28, 1, 3)
print("\nn=28, p=3: observations", cr_observations(28, 1, 3),
      "ord X =", br.ord_value, "ord(X - 1) =", br.ord_minus_one)

rep = cr_witness_report(2, 5, 1, range(5, 9))
print()
print(witness_table(rep))
print()
for row in rep.rows[:2]:
    print(witness_record(row))

# whatever N is chosen, some n >= N violates |a_{n+p_nu} - a_n| < p^(-3/(p-1))
print()
for N in (10, 10**3, 10**5):
    row = cr_counterexample(3, 1, N, Fraction(3, 2))
    print(f"N={N}: n={row.n} has diff ord {row.diff_ord} < 3/2")
