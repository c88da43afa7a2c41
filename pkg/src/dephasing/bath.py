"""Bosonic baths and the thermally weighted spectral function G(t).

A bath is a finite list of modes ``(omega_k, g_k)`` at inverse temperature
``beta``.  For that bath

    G(t) = 2 * sum_k |g_k|^2 / omega_k^2 * sin^2(omega_k t / 2) * coth(beta omega_k / 2)

and a qubit coupled to it loses coherence by the factor ``exp(-4 G(t))``.
Units follow hbar = 1: frequencies and couplings share one unit, time is
its inverse.  ``beta = math.inf`` is zero temperature.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument, InvalidTime

COTH_SERIES_CUTOFF = 1e-4

__all__ = [
    "BathMode",
    "Bath",
    "OhmicSpec",
    "thermal_coth",
    "spectral_function",
    "discretize_ohmic",
]


def _check_beta(beta):
    beta = float(beta)
    if math.isnan(beta) or beta <= 0.0:
        raise InvalidArgument(f"beta must be positive or inf, got {beta}")
    return beta


@dataclass(frozen=True)
class BathMode:
    omega: float
    g: complex

    def __post_init__(self):
        omega = float(self.omega)
        g = complex(self.g)
        if not math.isfinite(omega) or omega <= 0.0:
            raise InvalidArgument(f"mode frequency must be positive and finite, got {omega}")
        if not (math.isfinite(g.real) and math.isfinite(g.imag)):
            raise InvalidArgument(f"mode coupling must be finite, got {g}")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "g", g)


@dataclass(frozen=True)
class Bath:
    """Independent bosonic modes at a common inverse temperature."""

    modes: tuple = ()
    beta: float = math.inf

    def __post_init__(self):
        modes = tuple(m if isinstance(m, BathMode) else BathMode(*m) for m in self.modes)
        object.__setattr__(self, "modes", modes)
        object.__setattr__(self, "beta", _check_beta(self.beta))

    @property
    def omegas(self):
        return np.array([m.omega for m in self.modes], dtype=float)

    @property
    def couplings_sq(self):
        return np.array([abs(m.g) ** 2 for m in self.modes], dtype=float)

    def with_beta(self, beta):
        return Bath(self.modes, beta)

    @classmethod
    def ohmic(cls, spec, n_modes, omega_max, beta=math.inf):
        return cls(discretize_ohmic(spec, n_modes, omega_max), beta)


@dataclass(frozen=True)
class OhmicSpec:
    """Spectral density ``J(w) = amplitude * w**s * exp(-w / omega_c)``."""

    amplitude: float
    s: float = 1.0
    omega_c: float = 1.0

    def __post_init__(self):
        for name in ("amplitude", "s", "omega_c"):
            val = float(getattr(self, name))
            if not math.isfinite(val) or val <= 0.0:
                raise InvalidArgument(f"OhmicSpec.{name} must be positive and finite, got {val}")
            object.__setattr__(self, name, val)

    def density(self, omega):
        omega = np.asarray(omega, dtype=float)
        return self.amplitude * omega**self.s * np.exp(-omega / self.omega_c)


def thermal_coth(beta, omega):
    """``coth(beta * omega / 2)``, equal to 1 at zero temperature (``beta = inf``).

    Small arguments use ``1/x + x/3 - x**3/45`` to avoid cancellation.
    """
    omega = float(omega)
    if not math.isfinite(omega) or omega <= 0.0:
        raise InvalidArgument(f"omega must be positive and finite, got {omega}")
    beta = _check_beta(beta)
    if math.isinf(beta):
        return 1.0
    x = 0.5 * beta * omega
    if x < COTH_SERIES_CUTOFF:
        return 1.0 / x + x / 3.0 - x**3 / 45.0
    return 1.0 / math.tanh(x)


def _check_times(t):
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InvalidTime(f"time must be finite, got {t}")
    if np.any(arr < 0.0):
        raise InvalidTime(f"time must be non-negative, got {t}")
    return arr


def spectral_function(bath, t):
    """Evaluate G(t) for a bath.

    ``t`` may be a scalar (returns float) or an array (returns an array of
    the same shape).  ``G(0) == 0`` exactly.
    """
    arr = _check_times(t)
    if not bath.modes:
        out = np.zeros_like(arr)
    else:
        w = bath.omegas
        weight = 2.0 * bath.couplings_sq / w**2
        weight *= np.array([thermal_coth(bath.beta, wk) for wk in w])
        half = 0.5 * np.multiply.outer(arr, w)
        out = np.sin(half) ** 2 @ weight
    return float(out) if out.ndim == 0 else out


def discretize_ohmic(spec, n_modes, omega_max):
    """Sample an ohmic spectral density on a uniform midpoint grid.

    The interval ``(0, omega_max]`` is cut into ``n_modes`` cells of width
    ``dw``; mode ``k`` sits at the cell midpoint with real coupling
    ``g_k = sqrt(J(omega_k) * dw)``.
    """
    if not isinstance(spec, OhmicSpec):
        raise InvalidArgument("spec must be an OhmicSpec")
    if int(n_modes) != n_modes or n_modes < 1:
        raise InvalidArgument(f"n_modes must be a positive integer, got {n_modes}")
    omega_max = float(omega_max)
    if not math.isfinite(omega_max) or omega_max <= 0.0:
        raise InvalidArgument(f"omega_max must be positive and finite, got {omega_max}")
    n = int(n_modes)
    dw = omega_max / n
    w = (np.arange(n) + 0.5) * dw
    g = np.sqrt(spec.density(w) * dw)
    return tuple(BathMode(float(wk), complex(gk)) for wk, gk in zip(w, g))
