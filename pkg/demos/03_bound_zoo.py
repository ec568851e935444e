"""The explicit upper bounds on |lambda_n| and their hypothesis flags.

zeta is the sharp one (needs chi and psi(0)), eta trades sharpness for a
prefactor in n and c only, xi drops chi entirely, and nu is the classical
gamma-function bound that only bites far past the plunge.  A BoundReport
evaluates all of them at once and records which hypotheses held.
"""

import math

from prolate import ProlateContext, aux_G, aux_H, aux_f, bound_report, delta_of_n

c = 100.0
ctx = ProlateContext(c)

print(f"c = {c}; bounds kick in past 2c/pi + sqrt(42) = "
      f"{2 * c / math.pi + math.sqrt(42):.2f}\n")

print(" n    log|lam|   log zeta   log eta    log xi     log nu    flags")
for n in (70, 80, 100, 120, 140):
    rep = bound_report(ctx, n)
    flags = ",".join(k for k, v in sorted(rep.hypotheses.items()) if v)
    print(f"{n:4d}  {rep.lambda_abs.log_abs:9.2f}  {rep.zeta.log_abs:9.2f}"
          f"  {rep.eta.log_abs:9.2f}  {rep.xi.log_abs:9.2f}"
          f"  {rep.nu.log_abs:9.2f}   {flags}")

print("\ndepth parameter delta(n): -delta tracks log|lambda| up to log sqrt(2pi/c)")
for n in (80, 110, 140):
    d = delta_of_n(n, c)
    rep = bound_report(ctx, n)
    print(f"  n={n:3d}: -delta = {-d:8.2f}   log|lambda| = {rep.lambda_abs.log_abs:8.2f}"
          f"   log sqrt(2pi/c) = {0.5 * math.log(2 * math.pi / c):.2f}")

print("\nthe exponent machinery: f, its inverse H, and the prefactor integral G")
for s in (0.5, 2.0, 4.0):
    y = (s / 4) * math.log(16 * math.e / s)
    h = aux_H(y)
    print(f"  s={s}: H((s/4)log(16e/s)) = {h:.6f}  in [s, s + s^2/5] ="
          f" [{s}, {s + s * s / 5:.3f}];  G(H) = {aux_G(h):.6f} <= pi/4 = {math.pi/4:.6f}")
print(f"  inverse identity residual at x=3: {abs(aux_f(aux_H(aux_f(3.0))) - aux_f(3.0)):.2e}")
