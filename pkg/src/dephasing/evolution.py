"""Two-qubit states and the exact pure-dephasing map.

Basis order is ``|up up>, |up down>, |down up>, |down down>`` with spin
value ``gamma = +1`` for up and ``-1`` for down.  Qubit ``r`` contributes,
for a density-matrix element with row spin ``g1`` and column spin ``g2``,

    exp(i a_r (g2 - g1) t) * exp(-G_r(t) (g1 - g2)^2)

which, with ``p_r = exp(2 i a_r t)`` and ``q_r = exp(-4 G_r(t))``, is
``p_r`` (``g2 - g1 = 2``), ``conj(p_r)`` (``g2 - g1 = -2``) or 1, times
``q_r`` whenever the spins differ.  Populations are never touched.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bath import Bath, spectral_function
from .errors import InvalidArgument, InvalidState
from .linalg import DIM, as_matrix, hermitian_eigen

TRACE_TOL = 1e-12
HERMITIAN_TOL = 1e-12
EIGEN_TOL = 1e-10
UNIT_MODULUS_TOL = 1e-12

__all__ = [
    "QubitParams",
    "DensityMatrix",
    "DephasingFactors",
    "spins",
    "factor_exponents",
    "factor_matrix",
    "dephasing_factors",
    "evolve",
    "bell_family_state",
    "evolved_bell_family",
]


def spins(index):
    """Spin values ``(gamma_1, gamma_2)`` of basis state ``index``."""
    return (1 if index < 2 else -1, 1 if index % 2 == 0 else -1)


def factor_exponents(row, col):
    """Exponents ``(p1, p2, q1, q2)`` of the dephasing factor at ``(row, col)``.

    A ``p`` exponent of -1 stands for the complex conjugate.  ``q``
    exponents are 0 or 1.
    """
    (a1, a2), (b1, b2) = spins(row), spins(col)
    return ((b1 - a1) // 2, (b2 - a2) // 2, (a1 - b1) ** 2 // 4, (a2 - b2) ** 2 // 4)


_EXPONENTS = tuple(tuple(factor_exponents(j, k) for k in range(DIM)) for j in range(DIM))


@dataclass(frozen=True)
class QubitParams:
    """Level splitting ``a`` (``H_S = a sigma_z``) and the qubit's own bath."""

    a: float
    bath: Bath

    def __post_init__(self):
        a = float(self.a)
        if not math.isfinite(a):
            raise InvalidArgument(f"qubit splitting must be finite, got {a}")
        object.__setattr__(self, "a", a)


class DensityMatrix:
    """Validated two-qubit density matrix.

    The wrapped array is read-only.  Construction checks Hermiticity and
    unit trace to ``1e-12`` and eigenvalues ``>= -1e-10``.
    """

    __slots__ = ("m",)

    def __init__(self, m):
        arr = as_matrix(m, "density matrix").copy()
        herm = float(np.max(np.abs(arr - arr.conj().T)))
        if herm > HERMITIAN_TOL:
            raise InvalidState(f"density matrix is not Hermitian (deviation {herm:.3e})")
        tr = np.trace(arr)
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidState(f"density matrix trace is {tr}, expected 1")
        lo = hermitian_eigen(arr).eigenvalues[0]
        if lo < -EIGEN_TOL:
            raise InvalidState(f"density matrix has negative eigenvalue {lo:.3e}")
        arr.setflags(write=False)
        self.m = arr

    @classmethod
    def _trusted(cls, arr):
        # for matrices that are valid by construction
        obj = cls.__new__(cls)
        arr = np.array(arr, dtype=np.complex128)
        arr.setflags(write=False)
        obj.m = arr
        return obj

    def __array__(self, dtype=None, copy=None):
        return self.m if dtype is None else self.m.astype(dtype)

    def __repr__(self):
        return f"DensityMatrix(\n{self.m!r})"

    def __eq__(self, other):
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return bool(np.array_equal(self.m, other.m))

    __hash__ = None

    @property
    def trace(self):
        return complex(np.trace(self.m))

    @property
    def purity(self):
        return float(np.real(np.trace(self.m @ self.m)))


def _as_density(rho):
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)


@dataclass(frozen=True)
class DephasingFactors:
    """Per-qubit phase ``p_r = exp(2 i a_r t)`` and decay ``q_r = exp(-4 G_r(t))``.

    ``q_r = 0`` is accepted as the underflow limit of complete dephasing.
    """

    p1: complex = 1.0
    p2: complex = 1.0
    q1: float = 1.0
    q2: float = 1.0

    def __post_init__(self):
        for name in ("p1", "p2"):
            p = complex(getattr(self, name))
            if not (math.isfinite(p.real) and math.isfinite(p.imag)):
                raise InvalidArgument(f"{name} must be finite")
            if abs(abs(p) - 1.0) > UNIT_MODULUS_TOL:
                raise InvalidArgument(f"{name} must have unit modulus, got |{name}| = {abs(p)!r}")
            object.__setattr__(self, name, p)
        for name in ("q1", "q2"):
            q = float(getattr(self, name))
            if not 0.0 <= q <= 1.0:
                raise InvalidArgument(f"{name} must lie in [0, 1], got {q!r}")
            object.__setattr__(self, name, q)

    @classmethod
    def from_phases(cls, phi1, phi2, q1=1.0, q2=1.0):
        """Factors with ``p_r = exp(i phi_r)``."""
        return cls(cmath.exp(1j * phi1), cmath.exp(1j * phi2), q1, q2)

    def __mul__(self, other):
        if not isinstance(other, DephasingFactors):
            return NotImplemented
        return DephasingFactors(
            self.p1 * other.p1, self.p2 * other.p2, self.q1 * other.q1, self.q2 * other.q2
        )

    @property
    def xi(self):
        """Combined decay ``q1 * q2``."""
        return self.q1 * self.q2

    @property
    def eta(self):
        """Detuning phase ``arg(conj(p1) * p2)``, in ``(-pi, pi]``."""
        return cmath.phase(self.p1.conjugate() * self.p2)


def _power(p, k):
    if k == 1:
        return p
    if k == -1:
        return p.conjugate()
    return 1.0


def factor_matrix(f):
    """The 4x4 array of multiplicative factors applied by :func:`evolve`."""
    out = np.ones((DIM, DIM), dtype=np.complex128)
    for j in range(DIM):
        for k in range(DIM):
            e1, e2, n1, n2 = _EXPONENTS[j][k]
            out[j, k] = _power(f.p1, e1) * _power(f.p2, e2) * f.q1**n1 * f.q2**n2
    return out


def dephasing_factors(params1, params2, t):
    """Factors for two qubits after evolving for time ``t`` (raises InvalidTime)."""
    g1 = spectral_function(params1.bath, t)
    g2 = spectral_function(params2.bath, t)
    t = float(t)
    return DephasingFactors(
        cmath.exp(2j * params1.a * t),
        cmath.exp(2j * params2.a * t),
        math.exp(-4.0 * g1),
        math.exp(-4.0 * g2),
    )


def evolve(rho0, f):
    """Apply the dephasing map with factors ``f`` to ``rho0``.

    Every off-diagonal element is multiplied by its factor from
    :func:`factor_matrix`; the diagonal is copied unchanged.
    """
    rho0 = _as_density(rho0)
    fac = factor_matrix(f)
    out = rho0.m * fac
    np.fill_diagonal(out, np.diag(rho0.m))
    return DensityMatrix._trusted(out)


def bell_family_state(alpha):
    """``|psi><psi|`` for ``|psi> = (|up down> + alpha |down up>) / sqrt(1 + |alpha|^2)``."""
    alpha = complex(alpha)
    if not (math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
        raise InvalidArgument(f"alpha must be finite, got {alpha}")
    psi = np.array([0.0, 1.0, alpha, 0.0], dtype=np.complex128)
    psi /= math.sqrt(1.0 + abs(alpha) ** 2)
    return DensityMatrix._trusted(np.outer(psi, psi.conj()))


def evolved_bell_family(alpha, f):
    """Closed-form evolved state of the ``alpha`` family under factors ``f``."""
    alpha = complex(alpha)
    if not (math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
        raise InvalidArgument(f"alpha must be finite, got {alpha}")
    norm = 1.0 + abs(alpha) ** 2
    coh = f.p1.conjugate() * f.q1 * f.p2 * f.q2 * alpha.conjugate()
    m = np.zeros((DIM, DIM), dtype=np.complex128)
    m[1, 1] = 1.0
    m[2, 2] = abs(alpha) ** 2
    m[1, 2] = coh
    m[2, 1] = coh.conjugate()
    return DensityMatrix._trusted(m / norm)
