import numpy as np

import disksampling as ds


def random_disk_points(rng, count, max_radius=0.95):
    """Uniform-in-area points inside a disk of the given radius."""
    moduli = max_radius * np.sqrt(rng.uniform(0.0, 1.0, count))
    angles = rng.uniform(0.0, 2.0 * np.pi, count)
    return moduli * np.exp(1j * angles)


def unit_signal(rng, twice_s, band_limit):
    coeffs = rng.standard_normal(band_limit + 1) + 1j * rng.standard_normal(band_limit + 1)
    coeffs /= np.linalg.norm(coeffs)
    return ds.DiskSignal(twice_s, coeffs)


def sup_relative_error(approx, exact):
    scale = np.max(np.abs(exact))
    if scale == 0.0:
        return float(np.max(np.abs(approx)))
    return float(np.max(np.abs(np.asarray(approx) - np.asarray(exact))) / scale)
