"""The transform T_{mu,eta}: raising the order of J with one integral.

T maps J_eta(x)/x^eta to J_mu(x)/x^mu and rescales powers x^r; both are
checked here on a small table.
"""
from sneddon.sonin import power_spec, power_target, sonin_spec, sonin_target, t_transform

print(" mu   eta    x      T(J_eta/x^eta)        J_mu/x^mu")
for mu, eta in [(1.3, 0.2), (2.5, 0.5), (0.7, -0.4)]:
    for x in (0.5, 5.0):
        print(f"{mu:4} {eta:5} {x:5}  {t_transform(sonin_spec(mu, eta), x):.15e}  {sonin_target(mu, x):.15e}")

print("\npowers, mu=1.3, eta=0.2, x=2:")
for r in (0.0, -0.5, 2.5):
    print(f"  r={r:4}: {t_transform(power_spec(1.3, 0.2, r), 2.0):.15e}  {power_target(1.3, 0.2, r, 2.0):.15e}")
