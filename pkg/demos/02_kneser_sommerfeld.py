"""The Kneser-Sommerfeld resolvent and its Taylor coefficients.

The resolvent sum over zeros has a closed form in J_nu and Y_nu. Expanding it
in z**2 gives the Sneddon-Bessel sums as coefficients, which is how the second
half of the package ties back to the first.
"""
from sneddon import ResolventPoint, ks_rhs, resolvent_taylor_match, sum_resolvent

nu, x, y = 0.25, 0.9, 0.3
print(f"nu={nu}, x={x}, y={y}")
for z in (0.0, 0.8, 2.0):
    s = sum_resolvent("ks", nu, x, y, z, tol=1e-12)
    c = ks_rhs(ResolventPoint(x=x, y=y, z=z, nu=nu))
    print(f"  z={z}: series {s.value:.15f}  closed {c:.15f}")

print("\nz^(2n) coefficients: closed form S_n vs least-squares fit of the resolvent")
for n, (closed, fitted) in enumerate(resolvent_taylor_match("ks", nu, x, y, n_max=4)):
    print(f"  n={n}: {closed: .15e} {fitted: .15e}  rel {abs(closed - fitted) / abs(closed):.1e}")
