"""Coefficient-ratio sequences behind the principal bound.

The proof of the principal bound runs through a chain of rescaled versions
of the coefficient ratios a_k / a_1: alpha (raw ratios), beta (square-root
rescaling), beta_new (a minorant with the same head), gamma (a second
rescaling whose recurrence has constant trailing coefficient 1), the
consecutive-ratio sequence r, and its closed-form minorant sigma.  Each
monotonicity or domination statement about these sequences is executable,
so this module materializes them all, in log-scaled arithmetic because
gamma spans hundreds of orders of magnitude by the turning index.

Rational coefficients are evaluated exactly as written (not pre-simplified)
to keep the code auditable against their defining formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import k0 as turning_index
from .elliptic import exponent_term
from .logscale import LogScaledReal


# -- scalar coefficient families (k is the 1-based sequence index) ----------

def big_a(k: int) -> float:
    return (k * (2 * k - 1) * (4 * k + 3)) / ((k + 1) * (2 * k + 1) * (4 * k - 1)) \
        * math.sqrt((4 * k + 5) / (4 * k - 3))


def big_b(k: int, c: float, chi: float) -> float:
    c2 = c * c
    root = math.sqrt((4 * k + 1) * (4 * k + 5))
    return ((chi - 2 * k * (2 * k + 1)) / c2) * (4 * k + 3) * root / ((2 * k + 1) * (2 * k + 2)) \
        - (4 * k * (2 * k + 1) - 1) * root / ((4 * k - 1) * (2 * k + 1) * (2 * k + 2))


def a_tilde(k: int) -> float:
    if k == 0:
        return 0.0
    return (k * (2 * k - 1) * (4 * k + 3)) / ((k + 1) * (2 * k + 1) * (4 * k - 1))


def b_chi(k: int, c: float, chi: float) -> float:
    return ((4 * k + 1) * (4 * k + 3)) / ((2 * k + 1) * (2 * k + 2)) \
        * (chi - c * c - 2 * k * (2 * k + 1)) / (c * c)


def rho_seq(k: int) -> float:
    return ((4 * k - 6) * (4 * k - 4) * (4 * k + 7)) / ((4 * k - 2) * (4 * k) * (4 * k + 3))


def a_new(k: int) -> float:
    return ((4 * k - 4) / (4 * k + 4)) * ((4 * k - 6) / (4 * k + 2)) * ((4 * k + 7) / (4 * k - 1))


def f_seq(k: int) -> float:
    return ((4 * k - 4) * (4 * k - 6)) / (4 * k - 1)


def b_one(k: int, c: float, chi: float) -> float:
    return (4 * (4 * k + 1) * (4 * k + 3) ** 2) / (4 * k * (4 * k - 2) * (4 * k + 7)) \
        * (chi - c * c - 2 * k * (2 * k + 1)) / (c * c)


def b_two(k: int) -> float:
    return 2.0 + 60.0 / (32 * k ** 4 + 32 * k ** 3 - 38 * k ** 2 + 7 * k)


def g_n_value(c: float, chi: float, x: float) -> float:
    """Integrand base for the product bound; needs 4 x^2 <= chi - c^2."""
    gap = chi - c * c
    if gap < 0:
        raise ValueError("requires chi >= c^2")
    if 4.0 * x * x > gap * (1.0 + 1e-12):
        raise ValueError("requires 4 x^2 <= chi - c^2")
    u = 1.0 + 2.0 * max(gap - 4.0 * x * x, 0.0) / (c * c)
    return u + math.sqrt(max(u * u - 1.0, 0.0))


@dataclass(frozen=True)
class SequenceTrace:
    """Materialized sequences for one (c, n, chi); index k addresses entry [k].

    alpha/beta/beta_new/gamma are lists of LogScaledReal with [0] unused;
    r[k] = gamma_{k+1}/gamma_k and sigma[k] are plain floats (sigma is NaN
    where its discriminant goes negative, past the turning region).
    """

    c: float
    n: int
    chi: float
    k0: int
    K: int
    alpha: list
    beta: list
    beta_new: list
    gamma: list
    r: list
    sigma: list


def trace(c: float, n: int, chi: float, K: int | None = None) -> SequenceTrace:
    """Populate every sequence up to index K (default: turning index + 8)."""
    if chi <= c * c:
        raise ValueError("sequence trace requires chi > c^2")
    k_turn = turning_index(c, chi)
    if K is None:
        K = k_turn + 8
    if K < k_turn + 2:
        raise ValueError("K must reach at least the turning index + 2")

    one = LogScaledReal.one()
    alpha = [None] * (K + 1)
    alpha[1] = one
    if K >= 2:
        alpha[2] = LogScaledReal.from_float(big_b(0, c, chi))
    for k in range(1, K - 1):
        alpha[k + 2] = big_b(k, c, chi) * alpha[k + 1] - big_a(k) * alpha[k]

    beta = [None] * (K + 1)
    for k in range(1, K + 1):
        beta[k] = alpha[k] * math.sqrt(2.0 / (4 * k - 3))

    beta_new = [None] * (K + 1)
    for k in range(1, min(3, K) + 1):
        beta_new[k] = beta[k]
    for k in range(2, K - 1):
        step = beta_new[k + 1] - beta_new[k]
        beta_new[k + 2] = (b_chi(k, c, chi) + 1.0) * beta_new[k + 1] + a_new(k) * step

    v2 = (chi - c * c) / (c * c)
    gamma = [None] * (K + 1)
    gamma[1] = LogScaledReal.from_float(math.sqrt(2.0))
    if K >= 2:
        gamma[2] = LogScaledReal.from_float(
            8.0 / (7.0 * math.sqrt(2.0)) * (2.0 + 3.0 * v2))
    if K >= 3:
        gamma[3] = LogScaledReal.from_float(
            16.0 * math.sqrt(2.0) / 11.0
            * (3.0 + 15.0 * v2
               + (105.0 / 8.0) * v2 * (chi - c * c - 6.0) / (c * c)
               - 105.0 / (2.0 * c * c)))
    for k in range(2, K - 1):
        gamma[k + 2] = (b_one(k, c, chi) + b_two(k)) * gamma[k + 1] - gamma[k]

    r = [None] * (K + 1)
    for k in range(1, K):
        if gamma[k].is_zero():
            r[k] = math.nan
        else:
            r[k] = gamma[k + 1].sign * gamma[k].sign \
                * math.exp(gamma[k + 1].log_abs - gamma[k].log_abs)

    sigma = [None] * (K + 1)
    for k in range(1, K + 1):
        half = 0.5 * (b_one(k, c, chi) + b_two(k))
        sigma[k] = half + math.sqrt(half * half - 1.0) if half >= 1.0 else math.nan

    return SequenceTrace(c, n, chi, k_turn, K, alpha, beta, beta_new, gamma, r, sigma)


def product_lower_bound(tr: SequenceTrace) -> LogScaledReal:
    """Integral lower bound on sigma_2 * ... * sigma_{k0-1}.

    Returns g(0)^-4 * exp(integral of log g over the turning range), which
    equals g(0)^-4 * exp(exponent_term); raises if the product fails to
    exceed it (it cannot, for a valid trace).
    """
    if tr.k0 <= 2:
        raise ValueError("product bound needs turning index k0 > 2")
    bound_log = -4.0 * math.log(g_n_value(tr.c, tr.chi, 0.0)) \
        + exponent_term(tr.c, tr.chi)
    product_log = sum(math.log(tr.sigma[k]) for k in range(2, tr.k0))
    if not product_log > bound_log:
        raise ArithmeticError(
            f"sigma product {product_log:.6e} fails its integral bound "
            f"{bound_log:.6e} at c={tr.c}, n={tr.n}")
    return LogScaledReal.from_log(bound_log)


def lambda_gamma_bound(tr: SequenceTrace, psi_at_zero: float) -> LogScaledReal:
    """Intermediate eigenvalue bound 2 prefactor(k0) / (|psi(0)| gamma_k0).

    Tighter than the closed-form principal bound, since the loosening of
    the prefactor and of 1/gamma_k0 both happen after this point.
    """
    if tr.n % 2 != 0:
        raise ValueError("gamma-route bound applies to even mode indices")
    if tr.k0 <= 2:
        raise ValueError("gamma-route bound needs turning index k0 > 2")
    if psi_at_zero == 0.0:
        raise ValueError("psi(0) must be non-zero")
    g = tr.gamma[tr.k0]
    if g.sign <= 0:
        raise ArithmeticError("gamma at the turning index should be positive")
    q = tr.k0
    log_val = (math.log(2.0 / abs(psi_at_zero))
               + math.log((4 * q - 4) * (4 * q - 6))
               - math.log(4 * q - 1) - 0.5 * math.log(4 * q - 3)
               - g.log_abs)
    return LogScaledReal.from_log(log_val)
