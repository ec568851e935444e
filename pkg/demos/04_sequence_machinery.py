"""Inside the proof machinery: the coefficient-ratio sequences.

The sharp bound comes from chaining lower bounds on the ratio sequence
gamma: its consecutive ratios r_k dominate a closed-form sequence sigma_k,
whose product is bounded below by an elliptic integral.  Everything here
is executable, so the chain can be watched link by link.
"""

import math

from prolate import (ProlateContext, exponent_term, lambda_gamma_bound,
                     lambda_log, product_lower_bound, trace, zeta)

c, n = 100.0, 80
ctx = ProlateContext(c)
m = ctx.mode(n)
tr = trace(c, n, m.chi)

print(f"c = {c}, n = {n}, chi = {m.chi:.2f}, turning index k0 = {tr.k0}\n")

print(" k   log gamma_k      r_k = g_{k+1}/g_k   sigma_k")
for k in range(1, tr.k0 + 1, 3):
    print(f"{k:3d}  {tr.gamma[k].log_abs:12.4f}    {tr.r[k]:14.6f}    {tr.sigma[k]:10.6f}")

print("\nmonotone growth up to the turning index:")
print("  beta_1 < ... < beta_k0+2 :",
      all(tr.beta[k] < tr.beta[k + 1] for k in range(1, tr.k0 + 2)))
print("  r_k > sigma_k > 1 for k = 2..k0:",
      all(tr.r[k] > tr.sigma[k] > 1 for k in range(2, tr.k0 + 1)))

bound = product_lower_bound(tr)
product = sum(math.log(tr.sigma[k]) for k in range(2, tr.k0))
print(f"\nlog product sigma_2..sigma_(k0-1) = {product:.4f}"
      f"  >  integral bound = {bound.log_abs:.4f}")
print(f"(the integral is the shared decay exponent: {exponent_term(c, m.chi):.4f})")

gb = lambda_gamma_bound(tr, m.psi_at_zero)
print("\nthe chain, in logs:")
print(f"  |lambda_n|      : {lambda_log(ctx, n).log_abs:10.4f}")
print(f"  gamma-route bound: {gb.log_abs:10.4f}   (intermediate, tightest)")
print(f"  zeta            : {zeta(m).log_abs:10.4f}   (closed form)")
