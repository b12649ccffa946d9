"""Direct summation over Bessel zeros against the closed forms.

At order 1/2 the zeros are m*pi and the two-variable series collapses to a
Fourier sine series, so everything can be checked by hand. At generic orders
the closed form comes from the recursion for phi_n and the delta polynomials.
"""
import math

from sneddon import S_closed, S1_closed, SeriesParams, bessel_zeros, sum_S, sum_S1

print("first zeros of J_1/2 divided by pi:", bessel_zeros(0.5, 5).zeros / math.pi)

x, y = 0.8, 0.4
r = sum_S(SeriesParams(0, 0.5, 0.5, 0.5), x, y, tol=1e-12)
print(f"\norder 1/2, x={x}, y={y}")
print(f"  summed  {r.value:.16f}  ({r.terms_used} terms, tail {r.tail_estimate:.1e})")
print(f"  by hand {math.sqrt(x * y) * (1 - x) / (2 * x):.16f}")

print("\ngeneric orders: n, alpha, beta, nu, x, y -> closed, summed, rel err")
for n, a, b, nu, x, y in [(0, 1.7, 0.3, 0.25, 0.9, 0.3), (2, 2.5, 0.3, 1.3, 1.2, 0.5), (-1, 0.3, 1.7, -0.4, 0.7, 0.7)]:
    c = S_closed(n, a, b, nu, x, y)
    s = sum_S(SeriesParams(n, a, b, nu), x, y, tol=1e-10).value
    print(f"  {n:2d} {a:4} {b:4} {nu:5} {x} {y}  {c: .12e} {s: .12e} {abs(c - s) / abs(c):.1e}")

# integer orders need the limit formulas with harmonic numbers and log x
print("\none-variable series at nu = 0 (limit formula):")
for a in (0.3, 1.7):
    c = S1_closed(0, a, 0.0, 1.3)
    s = sum_S1(0, a, 0.0, 1.3, tol=1e-11).value
    print(f"  alpha={a}: closed {c:.14f}  summed {s:.14f}")
