"""Undersampled path: circulant overlap kernel, dual frame, partial reconstruction.

For an arbitrary (band-unlimited) signal, N ring samples cannot determine the
signal, but the Gram matrix of the sampled coherent states

    B[k, l] = <z_k|z_l> = ((1-r^2) / (1-r^2 exp(2*pi*i*(l-k)/N)))^(2s)

is circulant, hence diagonalized by the DFT with eigenvalues

    lhat_j = sum_{q>=0} lambda_{j+qN},    j = 0..N-1,

all strictly positive.  Inverting B through this eigen-decomposition yields a
dual pseudo-frame, an interpolating kernel that is exact at the sample points,
the best-possible partial reconstruction (the orthogonal projection onto the
span of the sampled coherent states), a DFT-style coefficient transform, and
computable error bounds for quasi-bandlimited signals.

Numerical policy: the production eigenvalues come from a DFT of the first row
carried out in adaptive extended precision, because in double precision the
row DFT loses the small eigenvalues to cancellation as soon as the eigenvalue
spread exceeds ~1e4.  The independent check is the truncated lambda series in
ordinary doubles.  The tail ratios eps_n = (lhat_n - lambda_n)/lambda_n are
never formed by subtraction; they get their own series, exact down to the
underflow threshold.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import mpmath as mp
import numpy as np
from scipy.special import logsumexp

from .basis import (
    DiskSignal,
    ResolutionSpectrum,
    SamplingGrid,
    log_binomial,
    overlap,
)
from .validation import (
    CONDITION_LIMIT,
    ConditioningWarning,
    EigenvalueCrossCheckError,
    NumericalRangeError,
    as_disk_points,
    as_samples,
    check_band_limit,
    check_index,
    check_twice_s,
    series_tolerance,
)

__all__ = [
    "CirculantKernel",
    "QuasiBandProfile",
    "ErrorBound",
    "RadiusEstimate",
    "overlap_kernel",
    "kernel_eigenvalues",
    "invert_kernel",
    "dual_weights",
    "dual_sinc_kernel",
    "dual_sinc_series",
    "partial_reconstruct",
    "dft_coefficients",
    "rescale_truncate",
    "projector_element",
    "tail_excess",
    "quasi_band_profile",
    "alias_error",
    "error_bound",
    "leading_order_bound",
    "max_radius_estimate",
    "band_projection_curve",
    "critical_radius",
]

_EIG_AGREE_RTOL = 1e-12
_EIG_IMAG_RTOL = 1e-13
_MAX_SERIES_BLOCKS = 100_000
_SERIES_BLOCK = 16


@dataclass(frozen=True)
class CirculantKernel:
    """Sampled reproducing-kernel operator B in circulant form.

    ``first_row`` holds C_0..C_{N-1} with B[k, l] = C[(l-k) mod N];
    ``eigenvalues`` holds the cross-checked lhat_0..lhat_{N-1}.
    Immutable after construction and safe to share across threads.
    """

    twice_s: int
    grid: SamplingGrid
    first_row: np.ndarray
    eigenvalues: np.ndarray

    def __post_init__(self):
        self.first_row.flags.writeable = False
        self.eigenvalues.flags.writeable = False

    @property
    def n_samples(self) -> int:
        return self.grid.n_samples

    @property
    def spectrum(self) -> ResolutionSpectrum:
        return ResolutionSpectrum(self.twice_s, self.grid)

    @property
    def condition_number(self) -> float:
        return float(np.max(self.eigenvalues) / np.min(self.eigenvalues))

    @property
    def is_ill_conditioned(self) -> bool:
        return self.condition_number > CONDITION_LIMIT

    def dense(self) -> np.ndarray:
        """Assemble the dense N x N Gram matrix from the circulant row."""
        n = self.n_samples
        idx = (np.arange(n)[np.newaxis, :] - np.arange(n)[:, np.newaxis]) % n
        return self.first_row[idx]


@dataclass(frozen=True)
class QuasiBandProfile:
    """Band limit M plus the relative tail amplitude eps with tail energy <= eps^2."""

    band_limit: int
    epsilon_m: float

    def __post_init__(self):
        check_band_limit(self.band_limit)
        if not 0.0 <= self.epsilon_m < 1.0:
            raise ValueError(f"epsilon_m must lie in [0, 1), got {self.epsilon_m!r}")


@dataclass(frozen=True)
class ErrorBound:
    """Normalized squared-error bound; ``value`` is the full three-term form,
    ``leading_order`` the single-power-of-r approximation."""

    value: float
    leading_order: float


@dataclass(frozen=True)
class RadiusEstimate:
    """Ring-radius upper estimate; ``clamped`` marks a raw value >= 1 clipped
    to 1.0 (the formula then imposes no constraint inside the disk)."""

    value: float
    clamped: bool


def _first_row(twice_s: int, grid: SamplingGrid) -> np.ndarray:
    r2 = grid.radius * grid.radius
    ang = grid.angles
    base = (1.0 - r2) / (1.0 - r2 * (np.cos(ang) + 1j * np.sin(ang)))
    return base**twice_s


def _eigenvalues_series(twice_s: int, grid: SamplingGrid, tol: float) -> np.ndarray:
    """lhat_j = sum_q lambda_{j+qN}, truncated under the global policy.

    Terms are positive with eventually decreasing ratios (limit r^(2N)), so a
    geometric majorant built from the last observed ratio bounds the tail.
    """
    n = grid.n_samples
    spectrum = ResolutionSpectrum(twice_s, grid)
    j = np.arange(n)[:, np.newaxis]
    total = np.zeros(n)
    for block in range(_MAX_SERIES_BLOCKS):
        q = np.arange(block * _SERIES_BLOCK, (block + 1) * _SERIES_BLOCK)[np.newaxis, :]
        terms = np.exp(spectrum.log_values(j + q * n))
        total += terms.sum(axis=1)
        last, prev = terms[:, -1], terms[:, -2]
        if np.all(last == 0.0):
            break
        ratio = np.where(prev > 0.0, last / prev, 0.0)
        if np.all(ratio < 1.0):
            tail_bound = last * ratio / (1.0 - ratio)
            if np.all(last < tol * total) and np.all(tail_bound < tol * total):
                break
    else:
        raise EigenvalueCrossCheckError("eigenvalue series failed to terminate")
    return total


def _eigenvalues_dft(twice_s: int, grid: SamplingGrid) -> tuple[np.ndarray, float]:
    """Length-N DFT of the first row, in precision adapted to the spread.

    Returns (eigenvalues as float64, worst relative imaginary residue).  The
    working precision covers the gap between the row scale (order 1) and the
    smallest eigenvalue, which double precision cannot bridge once the spread
    passes ~1e4.
    """
    n = grid.n_samples
    spectrum = ResolutionSpectrum(twice_s, grid)
    min_log = float(np.min(spectrum.log_values(np.arange(n))))
    digits = 30 + int(np.ceil(max(0.0, -min_log) / np.log(10.0))) + int(np.log10(n) + 1)
    with mp.workdps(digits):
        r2 = mp.mpf(grid.radius) ** 2
        one = mp.mpf(1)
        roots = [mp.expjpi(mp.mpf(2 * k) / n) for k in range(n)]
        row = [((one - r2) / (one - r2 * roots[l])) ** twice_s for l in range(n)]
        values = np.empty(n)
        worst_imag = mp.mpf(0)
        for j in range(n):
            acc = mp.mpc(0)
            for l in range(n):
                acc += row[l] * mp.conj(roots[(l * j) % n])
            values[j] = float(acc.real)
            worst_imag = max(worst_imag, abs(acc.imag))
        scale = max(values)
        residue = float(worst_imag / scale) if scale > 0 else float(worst_imag)
    return values, residue


def _cross_checked_eigenvalues(twice_s: int, grid: SamplingGrid) -> np.ndarray:
    dft_vals, imag_residue = _eigenvalues_dft(twice_s, grid)
    if imag_residue > _EIG_IMAG_RTOL:
        raise EigenvalueCrossCheckError(
            f"imaginary residue {imag_residue!r} of the row DFT exceeds {_EIG_IMAG_RTOL}"
        )
    if np.any(dft_vals <= 0.0):
        j = int(np.argmin(dft_vals))
        log_val = float(ResolutionSpectrum(twice_s, grid).log_values(j))
        raise NumericalRangeError(
            f"kernel eigenvalue {j} not representable as a positive double",
            log_value=log_val,
        )
    series_vals = _eigenvalues_series(twice_s, grid, series_tolerance())
    gap = float(np.max(np.abs(dft_vals - series_vals) / dft_vals))
    if gap > _EIG_AGREE_RTOL:
        raise EigenvalueCrossCheckError(
            f"row-DFT and series eigenvalues disagree by {gap!r} relative "
            f"(limit {_EIG_AGREE_RTOL}); this indicates an implementation fault"
        )
    return dft_vals


def overlap_kernel(twice_s: int, grid: SamplingGrid) -> CirculantKernel:
    """Build the circulant Gram kernel for (twice_s, grid), eigenvalues included.

    Construction runs the two independent eigenvalue computations and refuses
    to return a kernel on disagreement.
    """
    twice_s = check_twice_s(twice_s)
    row = _first_row(twice_s, grid)
    eig = _cross_checked_eigenvalues(twice_s, grid)
    return CirculantKernel(twice_s=twice_s, grid=grid, first_row=row, eigenvalues=eig)


def kernel_eigenvalues(kernel: CirculantKernel) -> np.ndarray:
    """Recompute the eigenvalues both ways, assert agreement, return the DFT route."""
    return _cross_checked_eigenvalues(kernel.twice_s, kernel.grid)


def invert_kernel(kernel: CirculantKernel) -> np.ndarray:
    """Dense inverse of B via the eigen-decomposition:

        (B^-1)[l, k] = (1/N) sum_j lhat_j^(-1) exp(2*pi*i*j*(k-l)/N).
    """
    if kernel.is_ill_conditioned:
        warnings.warn(
            f"kernel condition number {kernel.condition_number:.3e} exceeds "
            f"{CONDITION_LIMIT:.0e}; inverse entries lose up to all digits",
            ConditioningWarning,
            stacklevel=2,
        )
    n = kernel.n_samples
    g = np.fft.ifft(1.0 / kernel.eigenvalues)
    idx = (np.arange(n)[np.newaxis, :] - np.arange(n)[:, np.newaxis]) % n
    return g[idx]


def dual_weights(kernel: CirculantKernel, samples) -> np.ndarray:
    """Apply B^-1 to a sample vector using two FFTs (no dense matrix)."""
    values = as_samples(samples, kernel.n_samples)
    return np.fft.fft(np.fft.ifft(values) / kernel.eigenvalues)


def _inverse_column(kernel: CirculantKernel, k: int) -> np.ndarray:
    n = kernel.n_samples
    g = np.fft.ifft(1.0 / kernel.eigenvalues)
    return g[(k - np.arange(n)) % n]


def dual_sinc_kernel(kernel: CirculantKernel, k: int, z):
    """Dual-frame interpolating kernel XiHat_k(z) = sum_l (B^-1)[l, k] <z|z_l>.

    Satisfies XiHat_k(z_l) = delta_kl on the grid.  This closed finite sum is
    the production route; :func:`dual_sinc_series` evaluates the equivalent
    residue-class series as a cross-check.
    """
    k = check_index(k, "k")
    n = kernel.n_samples
    if k >= n:
        raise ValueError(f"grid index k must satisfy 0 <= k < {n}, got {k}")
    z_arr = as_disk_points(z)
    z_flat = np.atleast_1d(z_arr)
    column = _inverse_column(kernel, k)
    gram = overlap(kernel.twice_s, z_flat[:, np.newaxis], kernel.grid.points[np.newaxis, :])
    out = gram @ column
    if np.isscalar(z) or z_arr.ndim == 0:
        return complex(out[0])
    return out.reshape(z_arr.shape)


def dual_sinc_series(kernel: CirculantKernel, k: int, z):
    """Residue-class series form of XiHat_k, closed by roots-of-unity sectioning.

    The series sum_{n = j mod N} binom(2s+n-1, n) u^n equals
    (1/N) sum_l w^(-jl) (1 - w^l u)^(-2s) with w = exp(2*pi*i/N) and |u| < 1,
    which removes all truncation error.  Kept as an independent check of
    :func:`dual_sinc_kernel`.
    """
    k = check_index(k, "k")
    n = kernel.n_samples
    if k >= n:
        raise ValueError(f"grid index k must satisfy 0 <= k < {n}, got {k}")
    z_arr = as_disk_points(z)
    z_flat = np.atleast_1d(z_arr)
    r = kernel.grid.radius
    s = kernel.twice_s / 2.0
    # u = r^2 * conj(z)/conj(z_k); |u| = r|z| < 1 keeps the sectioned sum exact.
    u = r * np.conj(z_flat) * np.exp(2j * np.pi * k / n)
    roots = np.exp(2j * np.pi * np.arange(n) / n)
    base = (1.0 - roots[:, np.newaxis] * u[np.newaxis, :]) ** (-kernel.twice_s)
    section_weights = np.exp(-2j * np.pi * np.outer(np.arange(n), np.arange(n)) / n) / n
    sections = section_weights @ base
    mod2 = z_flat.real * z_flat.real + z_flat.imag * z_flat.imag
    prefactor = np.exp(
        s * (np.log1p(-mod2) - np.log1p(-r * r)) + kernel.twice_s * np.log1p(-r * r)
    )
    out = prefactor * ((1.0 / kernel.eigenvalues) @ sections)
    if np.isscalar(z) or z_arr.ndim == 0:
        return complex(out[0])
    return out.reshape(z_arr.shape)


def partial_reconstruct(kernel: CirculantKernel, samples, z):
    """Evaluate the alias sum_k XiHat_k(z) Psi(z_k) at point(s) z.

    The alias is the orthogonal projection of the signal onto the span of the
    N sampled coherent states; it interpolates the samples exactly.
    """
    weights = dual_weights(kernel, samples)
    z_arr = as_disk_points(z)
    z_flat = np.atleast_1d(z_arr)
    gram = overlap(kernel.twice_s, z_flat[:, np.newaxis], kernel.grid.points[np.newaxis, :])
    out = gram @ weights
    if np.isscalar(z) or z_arr.ndim == 0:
        return complex(out[0])
    return out.reshape(z_arr.shape)


def dft_coefficients(kernel: CirculantKernel, samples, n_max: int) -> np.ndarray:
    """Filtered DFT coefficients of the alias:

        ahat_n = (lambda_n^(1/2) / lhat_{n mod N}) (1/sqrt(N)) sum_k e^{2 pi i n k / N} Psi(z_k).

    One length-N DFT of the samples serves every n; coefficients repeat
    across residue classes up to the factor sqrt(lambda_{n+pN}/lambda_n).
    """
    n_max = check_index(n_max, "n_max")
    n = kernel.n_samples
    values = as_samples(samples, n)
    plus_dft = np.sqrt(n) * np.fft.ifft(values)
    idx = np.arange(n_max + 1)
    residues = idx % n
    log_lam = np.asarray(kernel.spectrum.log_values(idx), dtype=np.float64)
    scale = np.exp(0.5 * log_lam - np.log(kernel.eigenvalues[residues]))
    return scale * plus_dft[residues]


def rescale_truncate(kernel: CirculantKernel, dft_coeffs, band_limit: int) -> DiskSignal:
    """Truncate the alias coefficients at ``band_limit`` < N and undo the filter.

    Multiplying ahat_n by lhat_n/lambda_n recovers the bandlimited
    reconstruction exactly when the samples came from a signal of band limit
    <= band_limit.
    """
    n = kernel.n_samples
    band_limit = check_band_limit(band_limit, n_samples=n)
    coeffs = np.asarray(dft_coeffs, dtype=np.complex128)
    if coeffs.ndim != 1 or coeffs.size < band_limit + 1:
        raise ValueError(
            f"need at least {band_limit + 1} alias coefficients, got shape {coeffs.shape}"
        )
    idx = np.arange(band_limit + 1)
    log_lam = np.asarray(kernel.spectrum.log_values(idx), dtype=np.float64)
    ratio = np.exp(np.log(kernel.eigenvalues[idx]) - log_lam)
    return DiskSignal(kernel.twice_s, ratio * coeffs[: band_limit + 1])


def projector_element(kernel: CirculantKernel, m: int, n: int) -> float:
    """Matrix element <m|P|n> of the sampled-span projector in the coefficient basis:

        (lambda_m lambda_n)^(1/2) / lhat_{n mod N}   when m = n mod N, else 0.
    """
    m = check_index(m, "m")
    n = check_index(n, "n")
    n_s = kernel.n_samples
    if m % n_s != n % n_s:
        return 0.0
    log_lam = kernel.spectrum.log_values(np.array([m, n], dtype=np.int64))
    return float(np.exp(0.5 * (log_lam[0] + log_lam[1]) - np.log(kernel.eigenvalues[n % n_s])))


def tail_excess(kernel: CirculantKernel, n) -> np.ndarray | float:
    """Relative eigenvalue excess eps_n = (lhat_n - lambda_n)/lambda_n, n < N.

    Computed by its own ratio series

        eps_n = sum_{u>=1} [binom(2s-1+n+uN, n+uN) / binom(2s-1+n, n)] r^(2uN),

    never by subtracting lhat - lambda, so it stays exact down to the
    underflow threshold (the difference cancels catastrophically once
    eps_n drops below machine epsilon).  Strictly decreasing in n.
    """
    n_arr = np.atleast_1d(np.asarray(n))
    if np.any(n_arr < 0) or np.any(n_arr >= kernel.n_samples):
        raise ValueError(f"n must satisfy 0 <= n < {kernel.n_samples}")
    tol = series_tolerance()
    n_s = kernel.n_samples
    log_r2n = 2.0 * n_s * np.log(kernel.grid.radius)
    base = log_binomial(kernel.twice_s, n_arr.astype(np.float64))
    col = n_arr[:, np.newaxis]
    total = np.zeros(n_arr.shape[0])
    for block in range(_MAX_SERIES_BLOCKS):
        u = np.arange(1 + block * _SERIES_BLOCK, 1 + (block + 1) * _SERIES_BLOCK)
        logs = (
            log_binomial(kernel.twice_s, (col + u[np.newaxis, :] * n_s).astype(np.float64))
            - base[:, np.newaxis]
            + u[np.newaxis, :] * log_r2n
        )
        terms = np.exp(logs)
        total += terms.sum(axis=1)
        last, prev = terms[:, -1], terms[:, -2]
        if np.all(last == 0.0):
            break
        ratio = np.where(prev > 0.0, last / prev, 0.0)
        if np.all(ratio < 1.0):
            tail_bound = last * ratio / (1.0 - ratio)
            if np.all(last < tol * total) and np.all(tail_bound < tol * total):
                break
    else:
        raise EigenvalueCrossCheckError("tail-excess series failed to terminate")
    if np.ndim(n) == 0:
        return float(total[0])
    return total


def quasi_band_profile(signal: DiskSignal, band_limit: int) -> QuasiBandProfile:
    """Exact tail profile of a stored signal: eps^2 = tail energy / total energy."""
    band_limit = check_band_limit(band_limit)
    energies = np.abs(signal.coefficients) ** 2
    total = float(energies.sum())
    if total == 0.0:
        raise ValueError("zero signal has no quasi-bandlimited profile")
    tail = float(energies[band_limit + 1 :].sum())
    return QuasiBandProfile(band_limit=band_limit, epsilon_m=float(np.sqrt(tail / total)))


def _lambda_tail_from(kernel: CirculantKernel, start: int) -> float:
    """sum_{q} lambda_{start + qN}, the spectrum mass at and above ``start``."""
    spectrum = kernel.spectrum
    n = kernel.n_samples
    tol = series_tolerance()
    total = 0.0
    for block in range(_MAX_SERIES_BLOCKS):
        q = block * _SERIES_BLOCK + np.arange(_SERIES_BLOCK)
        terms = np.exp(np.asarray(spectrum.log_values(start + q * n), dtype=np.float64))
        total += float(terms.sum())
        last, prev = terms[-1], terms[-2]
        if last == 0.0:
            break
        ratio = last / prev if prev > 0.0 else 0.0
        if ratio < 1.0 and last < tol * total and last * ratio / (1.0 - ratio) < tol * total:
            break
    else:
        raise EigenvalueCrossCheckError("lambda tail series failed to terminate")
    return total


def alias_error(kernel: CirculantKernel, signal: DiskSignal) -> float:
    """Exact distance || psi - P psi || to the sampled-coherent-state span.

    The projector couples coefficients only within a residue class mod N, so
    with v the class coefficients, mu the matching lambda values, S = sum(mu)
    and T the lambda tail beyond the stored coefficients,

        E^2 = sum_j [ (1/S_j) sum_{q<p} |sqrt(mu_q) v_p - sqrt(mu_p) v_q|^2
                      + |w_j|^2 T_j / (S_j (S_j + T_j)) ],

    by the Lagrange identity.  Every term is nonnegative, so the result keeps
    full relative precision even when the error is many orders below the
    signal norm (forming ||psi||^2 - <psi|P|psi> directly would cancel
    catastrophically there).  Zero exactly when psi lies in the span of the N
    sampled coherent states.
    """
    if signal.twice_s != kernel.twice_s:
        raise ValueError(
            f"signal twice_s {signal.twice_s} does not match kernel twice_s {kernel.twice_s}"
        )
    n = kernel.n_samples
    coeffs = signal.coefficients
    length = coeffs.size
    log_lam = np.asarray(kernel.spectrum.log_values(np.arange(length)), dtype=np.float64)
    sqrt_lam = np.exp(0.5 * log_lam)
    error_sq = 0.0
    for j in range(min(n, length)):
        v = coeffs[j::n]
        x = sqrt_lam[j::n]
        stored = float(np.sum(x * x))
        w = complex(np.sum(x * v))
        cross = x[:, np.newaxis] * v[np.newaxis, :] - x[np.newaxis, :] * v[:, np.newaxis]
        pair_sum = 0.5 * float(np.sum(np.abs(cross) ** 2))
        tail = _lambda_tail_from(kernel, j + v.size * n)
        error_sq += pair_sum / stored + abs(w) ** 2 * tail / (stored * (stored + tail))
    return float(np.sqrt(error_sq))


def leading_order_bound(
    twice_s: int, radius: float, n_samples: int, epsilon_m: float, variant: str = "printed"
) -> float:
    """Leading-order normalized squared-error bound, two published variants.

    "printed":  eps_M^2 + sqrt(1-eps_M^2) eps_M sqrt(N) binom(2s+N-1, N)^(1/2) r^N
    "derived":  eps_M^2 + 2 sqrt(1-eps_M^2) eps_M sqrt(N) binom(2s+N-1, N) r^N

    The second is what the printed radius estimate implies when inverted; the
    two are mutually inconsistent by the factor 2 binom^(1/2) (see README).
    """
    twice_s = check_twice_s(twice_s)
    n = int(n_samples)
    if not 0.0 <= epsilon_m < 1.0:
        raise ValueError(f"epsilon_m must lie in [0, 1), got {epsilon_m!r}")
    if epsilon_m == 0.0:
        return 0.0
    lb = log_binomial(twice_s, n)
    log_common = (
        0.5 * np.log1p(-epsilon_m * epsilon_m)
        + np.log(epsilon_m)
        + 0.5 * np.log(n)
        + n * np.log(radius)
    )
    if variant == "printed":
        cross = np.exp(log_common + 0.5 * lb)
    elif variant == "derived":
        cross = 2.0 * np.exp(log_common + lb)
    else:
        raise ValueError(f"variant must be 'printed' or 'derived', got {variant!r}")
    return float(epsilon_m * epsilon_m + cross)


def error_bound(
    kernel: CirculantKernel, profile: QuasiBandProfile, variant: str = "printed"
) -> ErrorBound:
    """Normalized squared-error bound for band limit M = N-1:

        eps_M^2 + (1-eps_M^2) eps_0/(1+eps_0)
                + 2 sqrt(1-eps_M^2) eps_M sqrt(N eps_0)/(1+eps_{N-1}).

    Only the critically-sampled band limit M = N-1 is accepted; the bound is
    not established for other M, so no extrapolation is offered.
    ``leading_order`` carries the single-power-of-r form (``variant`` selects
    which published variant, see :func:`leading_order_bound`).
    """
    n = kernel.n_samples
    if profile.band_limit != n - 1:
        raise ValueError(
            f"error bound requires band_limit = n_samples - 1 = {n - 1}, "
            f"got {profile.band_limit}"
        )
    em = profile.epsilon_m
    eps0 = float(tail_excess(kernel, 0))
    eps_last = float(tail_excess(kernel, n - 1))
    em2 = em * em
    value = (
        em2
        + (1.0 - em2) * eps0 / (1.0 + eps0)
        + 2.0 * np.sqrt(1.0 - em2) * em * np.sqrt(n * eps0) / (1.0 + eps_last)
    )
    leading = leading_order_bound(kernel.twice_s, kernel.grid.radius, n, em, variant)
    return ErrorBound(value=float(value), leading_order=leading)


def max_radius_estimate(
    twice_s: int,
    n_samples: int,
    epsilon: float,
    epsilon_m: float,
    variant: str = "printed",
) -> RadiusEstimate:
    """Analytic upper estimate of the ring radius keeping the error below epsilon.

    "printed" variant (default):

        r <= ((eps^2 - eps_M^2) / (2 sqrt((1-eps_M^2) N) eps_M binom(2s+N-1, N)))^(1/N)

    "derived" solves the leading-order printed bound instead (drops the
    factor 2, square-roots the binomial).  Computed in the log domain and
    clamped to 1.0 with ``clamped=True`` when the raw value is >= 1.
    """
    twice_s = check_twice_s(twice_s)
    n = int(n_samples)
    if n < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples!r}")
    if not 0.0 <= epsilon_m < 1.0:
        raise ValueError(f"epsilon_m must lie in [0, 1), got {epsilon_m!r}")
    if not epsilon > epsilon_m:
        raise ValueError(
            f"target epsilon {epsilon!r} must exceed the tail epsilon_m {epsilon_m!r}"
        )
    if epsilon_m == 0.0:
        return RadiusEstimate(value=1.0, clamped=True)
    lb = log_binomial(twice_s, n)
    log_num = np.log(epsilon * epsilon - epsilon_m * epsilon_m)
    log_half_den = 0.5 * (np.log1p(-epsilon_m * epsilon_m) + np.log(n)) + np.log(epsilon_m)
    if variant == "printed":
        log_den = np.log(2.0) + log_half_den + lb
    elif variant == "derived":
        log_den = log_half_den + 0.5 * lb
    else:
        raise ValueError(f"variant must be 'printed' or 'derived', got {variant!r}")
    raw_log = (log_num - log_den) / n
    if raw_log >= 0.0:
        return RadiusEstimate(value=1.0, clamped=True)
    return RadiusEstimate(value=float(np.exp(raw_log)), clamped=False)


def band_projection_curve(twice_s: int, band_limit: int, radius) -> np.ndarray | float:
    """Ring expectation of the band-limit projector:

        P(r) = (1-r^2)^(2s) sum_{m=0}^{M} binom(2s+m-1, m) r^(2m),

    equal to 1 at r = 0, monotone non-increasing on [0, 1), and dropping
    through 1/2 near the critical radius when s and M are large.  Accepts a
    scalar or array radius in [0, 1); log-domain throughout, so s and M in the
    thousands are fine.
    """
    twice_s = check_twice_s(twice_s)
    band_limit = check_band_limit(band_limit)
    r_arr = np.atleast_1d(np.asarray(radius, dtype=np.float64))
    if np.any(r_arr < 0.0) or np.any(r_arr >= 1.0):
        raise ValueError("radius must lie in [0, 1)")
    m = np.arange(band_limit + 1, dtype=np.float64)
    lb = log_binomial(twice_s, m)
    # r = 0 rows are overwritten below; a placeholder keeps log() finite there.
    safe_r = np.where(r_arr > 0.0, r_arr, 0.5)
    log_terms = (
        twice_s * np.log1p(-r_arr * r_arr)[:, np.newaxis]
        + lb[np.newaxis, :]
        + 2.0 * m[np.newaxis, :] * np.log(safe_r)[:, np.newaxis]
    )
    out = np.exp(logsumexp(log_terms, axis=1))
    out = np.where(r_arr == 0.0, 1.0, out)
    if np.isscalar(radius) or np.asarray(radius).ndim == 0:
        return float(out[0])
    return out.reshape(np.asarray(radius).shape)


def critical_radius(twice_s: int, band_limit: int) -> float:
    """Transition radius r_c = (1 + (2s-1)/M)^(-1/2) of the projection curve."""
    twice_s = check_twice_s(twice_s)
    band_limit = int(band_limit)
    if band_limit < 1:
        raise ValueError(f"band limit must be >= 1, got {band_limit!r}")
    return float((1.0 + (twice_s - 1.0) / band_limit) ** -0.5)
