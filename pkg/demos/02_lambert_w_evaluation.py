"""Evaluating W_p two ways and checking w * exp(w) = x."""

from fractions import Fraction

from padw import (
    DivergentInput,
    exp_p,
    from_fraction,
    lambert_w_newton,
    lambert_w_series,
    log_p,
    verify_defining_identity,
)
from padw.series import newton_iterates

A = 24
for p, q in [(2, Fraction(4)), (3, Fraction(9, 7)), (5, Fraction(15, 2)), (7, Fraction(-49, 3))]:
    x = from_fraction(q, p, A)
    ws = lambert_w_series(x, A)
    wn = lambert_w_newton(x, A)
    print(f"p={p} x={q}")
    print("  series :", ws)
    print("  newton :", wn, "| agree:", ws == wn)
    print("  ord W  :", ws.valuation(), "= ord x:", x.valuation())
    print("  identity holds:", verify_defining_identity(x, A).holds)
    # x / W(x) = exp(W(x)), so its logarithm gives W(x) back
    print("  log(x/W) == W:", log_p(x / ws, A).congruent(ws))

# Newton doubles the number of correct digits per step
print("\nresidual valuations for x = 7 in Q_7:",
      [s.residual_ord for s in newton_iterates(from_fraction(7, 7, 64), 64)])

# ord x = 1 is on the boundary for p = 2, where the series diverges
try:
    exp_p(from_fraction(2, 2, 8), 8)
except DivergentInput as exc:
    print("exp_2(2):", exc)
