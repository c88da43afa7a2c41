"""Seeded random inputs for property checks.

All generators take a ``numpy.random.Generator`` so callers control the
stream; :func:`rng` builds the default PCG64 generator from an integer seed.
"""

import numpy as np

from .evolution import DensityMatrix, DephasingFactors
from .linalg import hermitian_eigen


def rng(seed):
    return np.random.default_rng(seed)


def random_hermitian(gen, scale=1.0):
    """Hermitian 4x4 with real and imaginary parts of the entries in ``[-scale, scale]``."""
    a = gen.uniform(-scale, scale, (4, 4)) + 1j * gen.uniform(-scale, scale, (4, 4))
    h = np.triu(a, 1)
    h = h + h.conj().T
    np.fill_diagonal(h, a.real.diagonal())
    return h


def random_unitary(gen):
    """Unitary built from the eigenvectors of a random Hermitian matrix."""
    return hermitian_eigen(random_hermitian(gen)).eigenvectors


def random_psd(gen):
    a = gen.standard_normal((4, 4)) + 1j * gen.standard_normal((4, 4))
    return a.conj().T @ a


def random_density_matrix(gen, rank=None):
    """Random state ``A A^dagger / tr`` with ``A`` complex Gaussian of shape ``(4, rank)``."""
    k = 4 if rank is None else rank
    a = gen.standard_normal((4, k)) + 1j * gen.standard_normal((4, k))
    m = a @ a.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(m / np.trace(m).real)


def random_factors(gen):
    """Uniform phases and decays ``q`` in ``(0, 1]``."""
    phi1, phi2 = gen.uniform(0.0, 2.0 * np.pi, 2)
    q1, q2 = 1.0 - gen.uniform(0.0, 1.0, 2)
    return DephasingFactors.from_phases(phi1, phi2, q1, q2)


def random_alpha(gen):
    """``|alpha|`` log-uniform in ``[1e-2, 1e2]``, uniform phase."""
    return complex(10.0 ** gen.uniform(-2.0, 2.0) * np.exp(1j * gen.uniform(0.0, 2.0 * np.pi)))
