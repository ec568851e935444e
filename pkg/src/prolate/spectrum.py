"""Spectral problem for the prolate differential operator.

In the normalized-Legendre basis the operator is an infinite symmetric
matrix coupling only degrees of equal parity, so each parity class gives a
tridiagonal block.  Selected eigenvalues come from bisection with Sturm
counts and eigenvectors from inverse iteration (LAPACK stebz/stein through
scipy), which keeps the cost O(dim) per mode and reaches c = 1e5 at desk
scale.  Truncation is never trusted blindly: the dimension is doubled until
the eigenvalue is stable and the coefficient tail has died off.
"""

from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .legendre import even_values_at_zero, odd_derivs_at_zero

CACHE_ENV_VAR = "PROLATE_CACHE_DIR"
_CACHE_FORMAT = "prolate-spectrum-cache"
_CACHE_VERSION = 1

CHI_RTOL = 1e-10       # eigenvalue stability under dimension doubling
TAIL_RTOL = 1e-20      # trailing coefficient magnitude, relative to the peak
_MAX_DOUBLINGS = 8


class TruncationNotConverged(RuntimeError):
    """Doubling the matrix dimension kept moving the requested quantity."""


@dataclass(frozen=True)
class MatrixBand:
    """Tridiagonal block of the operator matrix for one parity class.

    Row j corresponds to Legendre degree parity + 2*j; diag holds the
    degree-coupling entries A[m, m] and offdiag the A[m, m+2] couplings,
    which are positive for c > 0.
    """

    c: float
    parity: int
    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        self.diag.setflags(write=False)
        self.offdiag.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.diag.size

    def degrees(self) -> np.ndarray:
        return self.parity + 2 * np.arange(self.dim)


def build_matrix(c: float, parity: int, dim: int) -> MatrixBand:
    """Tridiagonal block over degrees congruent to parity mod 2."""
    if c < 0:
        raise ValueError("band limit must be non-negative")
    if parity not in (0, 1):
        raise ValueError("parity must be 0 (even) or 1 (odd)")
    if dim < 2:
        raise ValueError("dimension must be at least 2")
    m = parity + 2.0 * np.arange(dim)
    c2 = c * c
    diag = m * (m + 1.0) + (2.0 * m * (m + 1.0) - 1.0) / ((2.0 * m + 3.0) * (2.0 * m - 1.0)) * c2
    mo = m[:-1]
    offdiag = (mo + 2.0) * (mo + 1.0) / ((2.0 * mo + 3.0) * np.sqrt((2.0 * mo + 1.0) * (2.0 * mo + 5.0))) * c2
    return MatrixBand(float(c), parity, diag, offdiag)


@dataclass(frozen=True)
class ProlateMode:
    """One eigenfunction: index, operator eigenvalue, and basis coefficients.

    coeffs[j] multiplies the normalized Legendre polynomial of degree
    parity + 2*j; the vector has unit Euclidean norm and its largest-
    magnitude entry is positive (the norm is intrinsic, the sign is a
    convention of this package).  psi_at_zero is set for even modes,
    dpsi_at_zero for odd ones.
    """

    n: int
    c: float
    chi: float
    parity: int
    coeffs: np.ndarray
    psi_at_zero: float | None
    dpsi_at_zero: float | None

    def __post_init__(self):
        self.coeffs.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.coeffs.size

    def degrees(self) -> np.ndarray:
        return self.parity + 2 * np.arange(self.dim)


class ProlateContext:
    """A band limit plus truncation policy, owning cached spectral data.

    The default policy starts each parity block at ceil(n/2) + ceil(c) + 64
    coefficients and doubles until the eigenvalue moves less than CHI_RTOL
    and the coefficient tail is below TAIL_RTOL of the peak.  Passing
    truncation_dim pins the dimension instead; the tail check still runs
    and failure raises TruncationNotConverged.

    Cached entries are inserted under a lock, one key at a time, so
    concurrent lookups for distinct n are safe.  If the environment
    variable PROLATE_CACHE_DIR is set (or cache_dir is given), converged
    eigenvalues persist to a small versioned JSON file there.
    """

    def __init__(self, c: float, truncation_dim: int | None = None,
                 chi_rtol: float = CHI_RTOL, tail_rtol: float = TAIL_RTOL,
                 cache_dir: str | None = None):
        if not (isinstance(c, (int, float)) and math.isfinite(c) and c > 0):
            raise ValueError("band limit c must be a positive finite number")
        self.c = float(c)
        self.truncation_dim = truncation_dim
        self.chi_rtol = chi_rtol
        self.tail_rtol = tail_rtol
        self._chi: dict[int, tuple[float, int]] = {}
        self._modes: dict[int, ProlateMode] = {}
        self._lock = threading.Lock()
        self._cache_path = None
        cache_dir = cache_dir if cache_dir is not None else os.environ.get(CACHE_ENV_VAR)
        if cache_dir:
            os.makedirs(cache_dir, exist_ok=True)
            self._cache_path = os.path.join(cache_dir, "spectrum_cache.json")
            self._load_disk_cache()

    # -- persistence -------------------------------------------------------

    def _load_disk_cache(self):
        try:
            with open(self._cache_path) as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return
        if data.get("format") != _CACHE_FORMAT or data.get("version") != _CACHE_VERSION:
            return
        entries = data.get("entries", {}).get(repr(self.c), {})
        for key, (chi_val, dim) in entries.items():
            self._chi[int(key)] = (float(chi_val), int(dim))

    def _save_disk_cache(self):
        if self._cache_path is None:
            return
        data = {"format": _CACHE_FORMAT, "version": _CACHE_VERSION, "entries": {}}
        try:
            with open(self._cache_path) as fh:
                old = json.load(fh)
            if old.get("format") == _CACHE_FORMAT and old.get("version") == _CACHE_VERSION:
                data["entries"] = old.get("entries", {})
        except (OSError, ValueError):
            pass
        mine = data["entries"].setdefault(repr(self.c), {})
        for n, (chi_val, dim) in sorted(self._chi.items()):
            mine[str(n)] = [chi_val, dim]
        tmp = self._cache_path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, self._cache_path)

    # -- solves ------------------------------------------------------------

    def _initial_dim(self, n: int) -> int:
        return n // 2 + math.ceil(self.c) + 64

    def _eig(self, n: int, dim: int, want_vector: bool):
        band = build_matrix(self.c, n % 2, dim)
        idx = n // 2
        # bisection resolves eigenvalues to a few ulps of the matrix norm
        noise = 32.0 * np.finfo(float).eps * (
            float(np.max(np.abs(band.diag))) + 2.0 * float(np.max(band.offdiag, initial=0.0)))
        if want_vector:
            vals, vecs = eigh_tridiagonal(band.diag, band.offdiag,
                                          select="i", select_range=(idx, idx))
            return float(vals[0]), vecs[:, 0], noise
        vals = eigh_tridiagonal(band.diag, band.offdiag, select="i",
                                select_range=(idx, idx), eigvals_only=True)
        return float(vals[0]), None, noise

    @staticmethod
    def _tail_ok(vec: np.ndarray, tail_rtol: float) -> bool:
        peak = np.max(np.abs(vec))
        return bool(np.max(np.abs(vec[-4:])) < tail_rtol * peak)

    def _converged_solve(self, n: int, want_vector: bool):
        if self.truncation_dim is not None:
            dim = max(self.truncation_dim, n // 2 + 2)
            chi_val, vec, _ = self._eig(n, dim, True)
            if not self._tail_ok(vec, self.tail_rtol):
                raise TruncationNotConverged(
                    f"fixed dimension {dim} leaves a live coefficient tail "
                    f"for c={self.c}, n={n}")
            return chi_val, (vec if want_vector else None), dim
        dim = self._initial_dim(n)
        prev = None
        for _ in range(_MAX_DOUBLINGS):
            chi_val, vec, noise = self._eig(n, dim, True)
            stable = prev is not None and abs(chi_val - prev) <= self.chi_rtol * abs(chi_val) + noise
            if stable and self._tail_ok(vec, self.tail_rtol):
                return chi_val, (vec if want_vector else None), dim
            prev = chi_val
            dim *= 2
        raise TruncationNotConverged(
            f"eigenvalue for c={self.c}, n={n} kept moving after "
            f"{_MAX_DOUBLINGS} dimension doublings")

    def chi(self, n: int) -> float:
        """Operator eigenvalue chi_n, stable under truncation doubling."""
        if n < 0:
            raise ValueError("mode index must be non-negative")
        with self._lock:
            hit = self._chi.get(n)
        if hit is not None:
            return hit[0]
        chi_val, _, dim = self._converged_solve(n, want_vector=False)
        with self._lock:
            self._chi[n] = (chi_val, dim)
        self._save_disk_cache()
        return chi_val

    def converged_dim(self, n: int) -> int:
        """Matrix dimension at which the mode converged (solving if needed)."""
        with self._lock:
            hit = self._chi.get(n)
        if hit is None:
            self.chi(n)
            with self._lock:
                hit = self._chi[n]
        return hit[1]

    def mode(self, n: int) -> ProlateMode:
        """Full eigenvector record for index n, cached."""
        if n < 0:
            raise ValueError("mode index must be non-negative")
        with self._lock:
            cached = self._modes.get(n)
        if cached is not None:
            return cached
        with self._lock:
            hit = self._chi.get(n)
        if hit is not None:
            chi_val, dim = hit
            _, vec, _ = self._eig(n, dim, True)
        else:
            chi_val, vec, dim = self._converged_solve(n, want_vector=True)
        vec = vec / np.linalg.norm(vec)
        if vec[np.argmax(np.abs(vec))] < 0:
            vec = -vec
        parity = n % 2
        if parity == 0:
            psi0 = float(vec @ even_values_at_zero(vec.size))
            m = ProlateMode(n, self.c, chi_val, parity, vec, psi0, None)
        else:
            dpsi0 = float(vec @ odd_derivs_at_zero(vec.size))
            m = ProlateMode(n, self.c, chi_val, parity, vec, None, dpsi0)
        with self._lock:
            self._modes[n] = m
            self._chi.setdefault(n, (chi_val, dim))
        self._save_disk_cache()
        return m

    def chi_many(self, n_max: int) -> np.ndarray:
        """chi_0 .. chi_{n_max} in one converged solve per parity block."""
        out = np.empty(n_max + 1)
        for parity in (0, 1):
            top = n_max if (n_max % 2 == parity) else n_max - 1
            if top < parity:
                continue
            hi = top // 2
            dim = self._initial_dim(top)
            prev = None
            for _ in range(_MAX_DOUBLINGS):
                band = build_matrix(self.c, parity, dim)
                vals = eigh_tridiagonal(band.diag, band.offdiag, select="i",
                                        select_range=(0, hi), eigvals_only=True)
                noise = 32.0 * np.finfo(float).eps * (
                    float(np.max(np.abs(band.diag))) + 2.0 * float(np.max(band.offdiag, initial=0.0)))
                if prev is not None and np.all(np.abs(vals - prev) <= self.chi_rtol * np.abs(vals) + noise):
                    break
                prev = vals
                dim *= 2
            else:
                raise TruncationNotConverged(
                    f"block eigenvalues for c={self.c} did not settle")
            out[parity:top + 1:2] = vals
        return out


def chi(ctx: ProlateContext, n: int) -> float:
    """Eigenvalue chi_n of the prolate differential operator."""
    return ctx.chi(n)


def mode(ctx: ProlateContext, n: int) -> ProlateMode:
    """Converged coefficient record for the n-th eigenfunction."""
    return ctx.mode(n)


def psi_value(m: ProlateMode, x):
    """Evaluate the eigenfunction at x in [-1, 1] (scalar or array).

    Sums the normalized-Legendre series with one recurrence sweep over all
    degrees up to the truncation, accumulating only the mode's parity.
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(np.abs(x_arr) > 1.0):
        raise ValueError("argument outside [-1, 1]")
    max_degree = m.parity + 2 * (m.dim - 1)
    acc = np.zeros_like(x_arr)
    p_prev = np.ones_like(x_arr)
    if m.parity == 0:
        acc += m.coeffs[0] * math.sqrt(0.5) * p_prev
    if max_degree >= 1:
        p_cur = x_arr.copy()
        if m.parity == 1:
            acc += m.coeffs[0] * math.sqrt(1.5) * p_cur
        for deg in range(2, max_degree + 1):
            j = deg - 1
            p_next = ((2 * j + 1) * x_arr * p_cur - j * p_prev) / (j + 1)
            p_prev, p_cur = p_cur, p_next
            if deg % 2 == m.parity:
                acc += m.coeffs[(deg - m.parity) // 2] * math.sqrt(deg + 0.5) * p_cur
    return acc if np.ndim(x) else float(acc[0])
