"""Working with capped-precision p-adic numbers."""

from padw import PadicNumber, PrecisionExhausted, digits_of, format_padic, from_rational

# 1/3 in Q_5, known to 6 digits
x = from_rational(1, 3, 5, 6)
print("1/3     =", format_padic(x))
print("digits  =", digits_of(x))

# valuations add under multiplication; 9/25 sits at ord -2
y = from_rational(9, 25, 5, 6)
print("9/25    =", y, " ord", y.valuation())
print("x * y   =", x * y, " ord", (x * y).valuation())

# absolute precision of a sum is the smaller of the two
z = from_rational(1, 1, 5, 10) + from_rational(25, 1, 5, 3)
print("1 + 25  =", z, "(known mod 5^%d)" % z.absprec)

# leading digits cancel: relative precision shrinks, nothing is rounded
w = from_rational(1, 1, 5, 6) + from_rational(124, 1, 5, 6)
print("1 + 124 =", w)

# full cancellation has no meaningful digits left
try:
    from_rational(1, 1, 5, 4) + from_rational(-1, 1, 5, 4)
except PrecisionExhausted as exc:
    print("1 - 1   -> PrecisionExhausted:", exc)

print("exact zero:", PadicNumber.zero(5), "| zero to precision:", PadicNumber.zero(5, 8))
