"""Brute-force reference implementations backing the test suite.

Everything here deliberately avoids the factored/circulant shortcuts used by
the production paths: frames are materialized densely from the basis
functions, the Gram matrix is inverted by a generic Hermitian solve, and the
continuous resolution of unity is checked by plain tensor-product quadrature.
Desk scale only (L <= 128, N <= 64); no performance targets.
"""

from __future__ import annotations

import warnings

import mpmath as mp
import numpy as np
from scipy.special import gammaln

from .basis import DiskSignal, SamplingGrid, basis_fn, overlap
from .validation import (
    CONDITION_LIMIT,
    ConditioningWarning,
    QuadratureError,
    check_index,
    check_twice_s,
)

__all__ = [
    "dense_frame",
    "dense_projector",
    "quadrature_inner",
    "quadrature_norm",
    "random_signal",
]


def dense_frame(twice_s: int, grid: SamplingGrid, n_coefficients: int) -> np.ndarray:
    """Dense N x L sampling matrix, entry (k, n) = U_n(z_k), no factored shortcut."""
    if n_coefficients < 1:
        raise ValueError(f"need at least one coefficient column, got {n_coefficients!r}")
    points = grid.points
    m = np.arange(n_coefficients)
    return basis_fn(twice_s, m[np.newaxis, :], points[:, np.newaxis])


def _halved_frame_highprec(twice_s: int, grid: SamplingGrid, n_coefficients: int) -> np.ndarray:
    """Y = L^-1 T with B = L L* by plain Cholesky, carried in big floats.

    The Gram matrix of overlaps is assembled pairwise and factored without
    any use of its circulant structure.  Extended precision is required
    because double-precision rounding of the Gram entries alone perturbs
    T* B^-1 T by ~eps * cond(B).  Y itself has entries bounded by 1 (Y*Y is
    an orthogonal projector), so it converts to float64 losslessly for the
    final product.
    """
    n = grid.n_samples
    radius = grid.radius
    # precision sized to the Gram conditioning, estimated from the lambda spread
    logs = np.array(
        [
            float(twice_s) * np.log1p(-radius * radius)
            + float(gammaln(twice_s + j) - gammaln(j + 1.0) - gammaln(twice_s))
            + 2.0 * j * np.log(radius)
            for j in range(n)
        ]
    )
    digits = 35 + int(np.ceil((np.max(logs) - np.min(logs)) / np.log(10.0)))
    with mp.workdps(digits):
        r = mp.mpf(radius)
        s = mp.mpf(twice_s) / 2
        one = mp.mpf(1)
        points = [r * mp.expjpi(mp.mpf(2 * k) / n) for k in range(n)]
        prefactor = (one - r * r) ** s
        half_binom = [
            mp.sqrt(mp.gamma(twice_s + m) / (mp.gamma(m + 1) * mp.gamma(twice_s)))
            for m in range(n_coefficients)
        ]
        frame = []
        for k in range(n):
            conj_z = mp.conj(points[k])
            power = mp.mpc(1)
            row = []
            for m in range(n_coefficients):
                row.append(half_binom[m] * prefactor * power)
                power *= conj_z
            frame.append(row)
        gram = [
            [
                (one - abs(points[k]) ** 2) ** s
                * (one - abs(points[l]) ** 2) ** s
                / (one - points[l] * mp.conj(points[k])) ** twice_s
                for l in range(n)
            ]
            for k in range(n)
        ]
        lower = [[mp.mpc(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1):
                acc = gram[i][j]
                for k in range(j):
                    acc -= lower[i][k] * mp.conj(lower[j][k])
                if i == j:
                    lower[i][j] = mp.sqrt(acc.real)
                else:
                    lower[i][j] = acc / lower[j][j]
        halved = np.empty((n, n_coefficients), dtype=np.complex128)
        for m in range(n_coefficients):
            column = [mp.mpc(0)] * n
            for i in range(n):
                acc = frame[i][m]
                for k in range(i):
                    acc -= lower[i][k] * column[k]
                column[i] = acc / lower[i][i]
            for i in range(n):
                halved[i, m] = complex(column[i])
    return halved


def dense_projector(twice_s: int, grid: SamplingGrid, n_coefficients: int) -> np.ndarray:
    """Dense L x L sampled-span projector T* B^-1 T via a generic Hermitian solve.

    B is assembled as the pairwise Gram matrix of overlaps (not from the
    circulant row) and factored by plain Cholesky in extended precision,
    keeping this route independent of the production eigen-decomposition.
    Ill-conditioned B is reported through a :class:`ConditioningWarning`.
    """
    if n_coefficients < 1:
        raise ValueError(f"need at least one coefficient column, got {n_coefficients!r}")
    points = grid.points
    gram = overlap(twice_s, points[:, np.newaxis], points[np.newaxis, :])
    eigs = np.linalg.eigvalsh(gram)
    if eigs[0] <= 0.0 or eigs[-1] / eigs[0] > CONDITION_LIMIT:
        warnings.warn(
            f"Gram matrix ill-conditioned (eigenvalue range {eigs[0]:.3e}..{eigs[-1]:.3e})",
            ConditioningWarning,
            stacklevel=2,
        )
    halved = _halved_frame_highprec(twice_s, grid, n_coefficients)
    return halved.conj().T @ halved


def _gauss_nodes(n_radial: int, n_angular: int):
    nodes, weights = np.polynomial.legendre.leggauss(n_radial)
    t = 0.5 * (nodes + 1.0)
    w_t = 0.5 * weights
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    w_theta = 2.0 * np.pi / n_angular
    return t, w_t, theta, w_theta


def _resolution_integral(
    twice_s: int, m: int, m_other: int, n_radial: int, n_angular: int
) -> complex:
    # Substituting t = |z|^2 gives d^2 z = (1/2) dt dtheta and keeps the Gauss
    # nodes strictly inside the disk.
    t, w_t, theta, w_theta = _gauss_nodes(n_radial, n_angular)
    z = np.sqrt(t)[:, np.newaxis] * np.exp(1j * theta)[np.newaxis, :]
    u = basis_fn(twice_s, m, z)
    v = u if m_other == m else basis_fn(twice_s, m_other, z)
    integrand = u * np.conj(v) / (1.0 - t[:, np.newaxis]) ** 2
    radial = integrand.sum(axis=1) * w_theta
    value = 0.5 * (twice_s - 1.0) / np.pi * np.sum(w_t * radial)
    return complex(value)


def quadrature_inner(
    twice_s: int, m: int, m_other: int, n_radial: int = 200, n_angular: int = 256
) -> complex:
    """Inner product of basis functions under the resolution-of-unity measure.

    Integrates (2s-1)/pi * U_m(z) conj(U_m'(z)) / (1-|z|^2)^2 over the open
    disk with a tensor Gauss rule; equals delta_{m m'} up to quadrature error.
    """
    twice_s = check_twice_s(twice_s)
    m = check_index(m, "m")
    m_other = check_index(m_other, "m_other")
    return _resolution_integral(twice_s, m, m_other, n_radial, n_angular)


def quadrature_norm(
    twice_s: int, m: int, n_radial: int = 200, n_angular: int = 256
) -> float:
    """Squared norm of U_m under the resolution-of-unity measure; equals 1.

    Convergence is verified against a half-resolution rule; disagreement
    raises :class:`QuadratureError` carrying the achieved estimate.
    """
    twice_s = check_twice_s(twice_s)
    m = check_index(m, "m")
    full = _resolution_integral(twice_s, m, m, n_radial, n_angular).real
    coarse = _resolution_integral(
        twice_s, m, m, max(n_radial // 2, 2), max(n_angular // 2, 4)
    ).real
    if abs(full - coarse) > 1e-9 * max(1.0, abs(full)):
        raise QuadratureError(
            f"quadrature for (twice_s={twice_s}, m={m}) did not converge", estimate=full
        )
    return float(full)


def random_signal(
    twice_s: int,
    *,
    band_limit: int | None = None,
    decay: float | None = None,
    seed: int,
) -> DiskSignal:
    """Deterministic random test signal of one of two kinds.

    ``band_limit=M`` draws exactly M+1 complex-normal coefficients and
    normalizes to unit energy.  ``decay=rho`` builds the geometric
    quasi-bandlimited profile a_n = rho^n exp(i theta_n) with uniform random
    phases, truncated at the first L with rho^L < 1e-12 so tail energies have
    closed forms.  The same seed always reproduces the same signal.
    """
    twice_s = check_twice_s(twice_s)
    if (band_limit is None) == (decay is None):
        raise ValueError("specify exactly one of band_limit or decay")
    rng = np.random.default_rng(seed)
    if band_limit is not None:
        m = check_index(band_limit, "band_limit")
        coeffs = rng.standard_normal(m + 1) + 1j * rng.standard_normal(m + 1)
        coeffs /= np.linalg.norm(coeffs)
        return DiskSignal(twice_s, coeffs)
    rho = float(decay)
    if not 0.0 < rho < 1.0:
        raise ValueError(f"decay must lie in (0, 1), got {decay!r}")
    length = int(np.ceil(-12.0 * np.log(10.0) / np.log(rho)))
    if rho**length >= 1e-12:
        length += 1
    phases = rng.uniform(0.0, 2.0 * np.pi, length)
    coeffs = rho ** np.arange(length) * np.exp(1j * phases)
    return DiskSignal(twice_s, coeffs)
