"""Partial fractions of f / Phi_nu^2 over the zeros of J_nu.

For an entire f of controlled growth, the n-th Taylor coefficient of
f/Phi_nu^2 at t is a sum over the double poles at +-j_m. Below, f is a product
of two normalised Bessel functions; at t = 0 the even coefficients are the
delta polynomials of the closed forms.
"""
from sneddon import EntireFnSpec, delta2, double_bessel_numbers, pf_lhs, pf_rhs

a, b, nu, x, y = 0.3, 1.7, 0.25, 0.9, 0.3
f = EntireFnSpec.bessel_product(a, b, x, y)

print("double Bessel numbers (Taylor coefficients of f/Phi^2) vs delta_k:")
c = double_bessel_numbers(f, nu, 8)
for k in range(4):
    print(f"  z^{2 * k}: {c[2 * k]: .15e}   delta_{k} = {delta2(k, a, b, nu, x, y)[1]: .15e}")

print("\nboth sides of the expansion, n = 1 and 2:")
for t in (0.37, 2.1):
    for n in (1, 2):
        r = pf_rhs(f, nu, n, t)
        print(f"  t={t}, n={n}: lhs {pf_lhs(f, nu, n, t): .14e}  rhs {r.value: .14e}  tail {r.tail_estimate:.1e}")

g = EntireFnSpec.phi_squared(nu)
print(f"\nf = Phi_nu^2 makes the ratio constant, so n >= 1 gives 0: rhs = {pf_rhs(g, nu, 2, 2.1).value:.1e}")
