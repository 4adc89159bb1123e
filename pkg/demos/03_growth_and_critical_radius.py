"""Term valuations of the W series: growth modulus, critical radii, boundary."""

from fractions import Fraction

from padw import boundary_divergence_scan, critical_radius_scan, growth_modulus
from padw.report import growth_table
from padw.series import boundary_witnesses

# the largest term on |x| = p^-t is always the linear one
for p, t in [(2, Fraction(3, 2)), (3, Fraction(7, 2)), (5, Fraction(1, 3))]:
    print(growth_table(growth_modulus(t, p)))
    print()

# every term meets the linear term outside the open disk
cert = critical_radius_scan(3, 2000, pair_bound=30)
print("p=3 crossings certified:", len(cert.crossings), "holds:", cert.holds)
print("largest crossing t*:", max(t for _, t in cert.crossings), "<= 1/2")
print("pairs tying inside the disk (all below the linear term):", cert.dominated_pairs[:4], "...")

# on the boundary ord x = 1/(p-1) the terms n = p^j + 1 stay at 2/(p-1)
scan = boundary_divergence_scan(3, 3**7 + 1)
print("\nboundary witnesses for p=3:", boundary_witnesses(3, scan))
