import math

import numpy as np
import pytest

from prolate import (MatchFailure, ProlateContext, ResolutionLoss,
                     count_above, eigenvalue_record, lambda_abs,
                     lambda_direct, lambda_log, lambda_odd,
                     lambda_quadrature, mu)
from prolate.eigenvalues import _two_sided_profile
from prolate.spectrum import build_matrix

# published eigenvalue magnitudes at desk scale (five significant digits)
PINNED = [
    (10.0, 0, 0.79267, 1.0000),
    (10.0, 3, 0.79183, 0.99790),
    (10.0, 6, 0.52588, 0.44015),
    (100.0, 0, 0.25066, 1.0000),
    (100.0, 31, 0.25066, 1.0000),
    (100.0, 63, 0.18589, 0.54997),
]


@pytest.mark.parametrize("c,n,lam_ref,mu_ref", PINNED)
def test_pinned_magnitudes(c, n, lam_ref, mu_ref):
    ctx = ProlateContext(c)
    rec = eigenvalue_record(ctx, n)
    assert rec.lambda_abs.to_float() == pytest.approx(lam_ref, rel=1e-4)
    assert rec.mu.to_float() == pytest.approx(mu_ref, rel=5e-4)


def test_parity_dispatch(ctx10):
    with pytest.raises(ValueError):
        lambda_direct(ctx10.mode(3))
    with pytest.raises(ValueError):
        lambda_odd(ctx10.mode(2))


def test_resolution_loss_deep_tail(ctx10):
    # by n = 40 at c = 10 the magnitude is ~e^-80: invisible to doubles
    with pytest.raises(ResolutionLoss):
        lambda_direct(ctx10.mode(40))
    assert lambda_abs(ctx10, 40).log_abs < -60


def test_quadrature_route_even(ctx10):
    val = lambda_quadrature(ctx10.mode(6))
    assert val.to_float() == pytest.approx(0.52588, rel=1e-4)
    direct = lambda_direct(ctx10.mode(6))
    assert val.to_float() == pytest.approx(direct.to_float(), rel=1e-8)


def test_quadrature_route_odd(ctx10):
    val = lambda_quadrature(ctx10.mode(5))
    direct = lambda_odd(ctx10.mode(5))
    assert val.to_float() == pytest.approx(direct.to_float(), rel=1e-8)


def test_quadrature_route_near_band_edge(ctx100):
    # even neighbor of the last flat-region index
    m = ctx100.mode(62)
    assert lambda_quadrature(m).to_float() == pytest.approx(
        lambda_direct(m).to_float(), rel=1e-8)


def test_vanishing_bandlimit_limit():
    # as c -> 0 the kernel flattens and the top eigenvalue goes to 2
    ctx = ProlateContext(1e-6)
    assert lambda_direct(ctx.mode(0)).to_float() == pytest.approx(2.0, rel=1e-9)


def test_log_route_matches_direct(ctx100):
    for n in (64, 70, 71):
        direct = lambda_direct(ctx100.mode(n)) if n % 2 == 0 else lambda_odd(ctx100.mode(n))
        ll = lambda_log(ctx100, n)
        assert abs(ll.log_abs - direct.log_abs) < 1e-6 * max(1.0, abs(direct.log_abs))


def test_log_route_deep_tail_thresholds(ctx100):
    # smallest n past 2c/pi with log-magnitude under -100 (published: 138)
    n = 128
    while lambda_log(ctx100, n).log_abs >= -100.0:
        n += 1
    assert n == 138


def test_two_sided_profile_rejects_non_eigenvalue(ctx10):
    # between two eigenvalues no minimal/dominant match can exist
    band = build_matrix(10.0, 0, 120)
    fake = 0.5 * (ctx10.chi(0) + ctx10.chi(2))
    with pytest.raises(MatchFailure):
        _two_sided_profile(band.diag, band.offdiag, fake, 120)


def test_mu_arithmetic():
    assert mu(10.0, 0.79267).to_float() == pytest.approx(1.0000, rel=5e-4)
    assert mu(1e5, 0.60295e-2).to_float() == pytest.approx(0.57861, rel=5e-4)
    assert mu(10.0, 0.0).is_zero()
    with pytest.raises(ValueError):
        mu(-1.0, 0.5)


def test_count_above(ctx100):
    n_half = count_above(ctx100, 0.5)
    assert abs(n_half - 63) <= 2
    assert count_above(ctx100, 0.999999) >= 0
    with pytest.raises(ValueError):
        count_above(ctx100, 0.0)
    with pytest.raises(ValueError):
        count_above(ctx100, 1.0)


def test_count_above_grows_toward_small_alpha(ctx100):
    counts = [count_above(ctx100, a) for a in (0.9, 0.5, 0.1)]
    assert counts[0] < counts[1] < counts[2]
    assert abs(counts[1] - 2 * 100.0 / math.pi) <= 2


def test_plunge_profile_tracks_log_odds(ctx100):
    # over an alpha grid, N(c, a) - 2c/pi moves with log((1-a)/a) log(c)/pi^2
    alphas = (0.9, 0.7, 0.5, 0.3, 0.1)
    xs = [math.log((1 - a) / a) for a in alphas]
    ys = [count_above(ctx100, a) - 2 * 100.0 / math.pi for a in alphas]
    assert all(b >= a for a, b in zip(ys, ys[1:]))
    assert ys[-1] > ys[0]
    slope = np.polyfit(xs, ys, 1)[0]
    expect = math.log(100.0) / math.pi**2
    assert 0.2 * expect < slope < 5.0 * expect


def test_monotone_decay(ctx10):
    vals = [lambda_abs(ctx10, n).log_abs for n in range(20)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_mu_in_unit_interval(ctx10):
    for n in range(12):
        m = eigenvalue_record(ctx10, n).mu
        assert 0.0 < m.to_float() < 1.0


def test_phase_bookkeeping(ctx10):
    for n in range(8):
        rec = eigenvalue_record(ctx10, n)
        assert rec.phase == n % 4
        # even indices are real (phase 0 or 2), odd purely imaginary (1 or 3)
        assert (rec.phase % 2 == 0) == (n % 2 == 0)


def test_record_mu_consistency(ctx10):
    rec = eigenvalue_record(ctx10, 4)
    expect = 10.0 / (2 * math.pi) * rec.lambda_abs.to_float() ** 2
    assert rec.mu.to_float() == pytest.approx(expect, rel=1e-12)
