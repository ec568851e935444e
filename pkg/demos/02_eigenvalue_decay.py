"""Three routes to |lambda_n| and what happens past the plunge region.

Route 1 reads the eigenvalue off the leading basis coefficient, route 2
applies the integral operator by quadrature, and route 3 rebuilds the
coefficient profile in log scale so magnitudes like e^-125 come out exact
to many digits while any eigenvector representation of them is pure noise.
"""

import math

from prolate import (ProlateContext, count_above, eigenvalue_record,
                     lambda_direct, lambda_log, lambda_quadrature, mu)

c = 100.0
ctx = ProlateContext(c)

print(f"c = {c}, 2c/pi = {2 * c / math.pi:.2f}\n")

print("the flat region: |lambda_n| ~ sqrt(2 pi / c), mu_n ~ 1")
print(" n    |lambda_n|   mu_n")
for n in (0, 20, 40, 60, 63):
    rec = eigenvalue_record(ctx, n)
    print(f"{n:3d}   {rec.lambda_abs.to_float():.6f}   {rec.mu.to_float():.6f}")

print(f"\neigenvalues of the sinc operator above 1/2: {count_above(ctx, 0.5)}")

n = 70
m = ctx.mode(n)
print(f"\nthree routes at n = {n}:")
print(f"  coefficient route : {lambda_direct(m).to_float():.15e}")
print(f"  quadrature route  : {lambda_quadrature(m).to_float():.15e}")
print(f"  log-domain route  : {lambda_log(ctx, n).to_float():.15e}")

print("\npast the plunge the decay is brutal; only the log route survives:")
print(" n     log|lambda_n|   |lambda_n|")
for n in (80, 100, 120, 140, 160):
    ll = lambda_log(ctx, n)
    print(f"{n:4d}   {ll.log_abs:10.3f}     {ll.to_float():.3e}")

print("\nmu follows by exact arithmetic: mu = (c / 2 pi) |lambda|^2")
lam = lambda_log(ctx, 160)
print(f"  n=160: log mu = {mu(c, lam).log_abs:.3f}")
