"""Dense complex linear algebra for 4x4 Hermitian matrices.

Matrices are plain ``numpy`` arrays of shape ``(4, 4)`` and dtype
``complex128``, with rows and columns ordered as the two-qubit basis
``|up up>, |up down>, |down up>, |down down>``.

The eigensolver is a cyclic complex Jacobi iteration.  At this size it is
fast, has no failure modes beyond the sweep budget, and keeps exact zeros
exactly zero, which matters for the block-sparse states used elsewhere.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument, NoConvergence, NotHermitian, NotPositive

DIM = 4
HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-12
JACOBI_RTOL = 1e-13
MAX_SWEEPS = 100

__all__ = [
    "EigenDecomposition",
    "as_matrix",
    "matmul",
    "adjoint",
    "hermiticity_error",
    "hermitian_eigen",
    "psd_sqrt",
]


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (ascending) and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_matrix(a, name="matrix"):
    """Return ``a`` as a finite 4x4 complex array, raising InvalidArgument otherwise."""
    m = np.asarray(a, dtype=np.complex128)
    if m.shape != (DIM, DIM):
        raise InvalidArgument(f"{name} must be {DIM}x{DIM}, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidArgument(f"{name} has non-finite entries")
    return m


def matmul(a, b):
    return as_matrix(a, "a") @ as_matrix(b, "b")


def adjoint(a):
    return as_matrix(a).conj().T.copy()


def hermiticity_error(a):
    """Largest entrywise modulus of ``a - a^dagger``."""
    m = as_matrix(a)
    return float(np.max(np.abs(m - m.conj().T)))


def _require_hermitian(m, tol=HERMITIAN_TOL):
    err = float(np.max(np.abs(m - m.conj().T)))
    if err > tol:
        raise NotHermitian(f"matrix is not Hermitian (max |H - H^dagger| = {err:.3e})")


def _jacobi(rows, scale):
    """Diagonalize the Hermitian matrix ``rows`` (list of lists, mutated).

    Returns the eigenvector matrix as a list of rows.  Each rotation is the
    real symmetric Jacobi rotation preceded by the phase change that makes
    the pivot entry real and positive.
    """
    n = len(rows)
    a = rows
    v = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    threshold = JACOBI_RTOL * scale
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]

    for _ in range(MAX_SWEEPS):
        off = 0.0
        for p, q in pairs:
            b = a[p][q]
            off += b.real * b.real + b.imag * b.imag
        if math.sqrt(2.0 * off) <= threshold:
            return v

        for p, q in pairs:
            b = a[p][q]
            ab = abs(b)
            if ab == 0.0:
                continue
            app = a[p][p].real
            aqq = a[q][q].real
            theta = (aqq - app) / (2.0 * ab)
            if abs(theta) > 1e150:
                t = 0.5 / theta
            else:
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            e = b / ab
            sce = s * e.conjugate()
            cce = c * e.conjugate()

            for r in range(n):
                if r == p or r == q:
                    continue
                arp = a[r][p]
                arq = a[r][q]
                nrp = c * arp - sce * arq
                nrq = s * arp + cce * arq
                a[r][p] = nrp
                a[r][q] = nrq
                a[p][r] = nrp.conjugate()
                a[q][r] = nrq.conjugate()
            a[p][p] = complex(app - t * ab, 0.0)
            a[q][q] = complex(aqq + t * ab, 0.0)
            a[p][q] = 0j
            a[q][p] = 0j

            for r in range(n):
                vrp = v[r][p]
                vrq = v[r][q]
                v[r][p] = c * vrp - sce * vrq
                v[r][q] = s * vrp + cce * vrq

    raise NoConvergence(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")


def hermitian_eigen(h):
    """Eigendecomposition of a 4x4 Hermitian matrix.

    Parameters
    ----------
    h : array_like, shape (4, 4)
        Hermitian to within ``1e-12`` (max-abs of ``h - h^dagger``).

    Returns
    -------
    EigenDecomposition
        Eigenvalues sorted ascending (stable with respect to Jacobi output
        order) and unitary eigenvector matrix with eigenvectors as columns.

    Raises
    ------
    NotHermitian, NoConvergence
    """
    m = as_matrix(h)
    _require_hermitian(m)
    m = 0.5 * (m + m.conj().T)
    scale = float(np.linalg.norm(m))

    rows = m.tolist()
    for i in range(DIM):
        rows[i][i] = complex(rows[i][i].real, 0.0)
    v = _jacobi(rows, scale)

    evals = np.array([rows[i][i].real for i in range(DIM)])
    order = np.argsort(evals, kind="stable")
    vecs = np.array(v, dtype=np.complex128)[:, order]
    return EigenDecomposition(evals[order], vecs)


def psd_sqrt(m, tol=PSD_TOL):
    """Principal square root of a positive-semidefinite Hermitian matrix.

    Eigenvalues in ``[-tol, 0)`` are treated as roundoff and clamped to zero;
    anything more negative raises NotPositive.
    """
    dec = hermitian_eigen(m)
    lam = dec.eigenvalues
    if lam[0] < -tol:
        raise NotPositive(f"matrix has eigenvalue {lam[0]:.3e} < -{tol:g}")
    root = np.sqrt(np.clip(lam, 0.0, None))
    v = dec.eigenvectors
    s = (v * root) @ v.conj().T
    return 0.5 * (s + s.conj().T)
