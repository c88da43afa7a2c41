"""JSON run configurations for the command-line tools.

A simulation config looks like::

    {
      "qubit1": {"a": 1.0,
                 "bath": {"modes": [{"omega": 2.0, "g_re": 1.0, "g_im": 0.0}],
                          "beta": "inf"}},
      "qubit2": {"a": 1.0,
                 "bath": {"ohmic": {"amplitude": 0.05, "s": 1.0, "omega_c": 5.0,
                                    "n_modes": 200, "omega_max": 40.0},
                          "beta": 2.0}},
      "alpha": {"re": 1.0, "im": 0.0},
      "time": {"t_max": 10.0, "n_steps": 200}
    }

and an eigenvalue-scan config (the ``fig1`` command)::

    {"xi_values": [0, 0.25, 0.5, 0.75, 1],
     "eta": {"min": 0.0, "max": 3.141592653589793, "n_points": 181},
     "suppress_prefactor": true,
     "alpha": {"re": 1.0, "im": 0.0}}

``beta`` may be the string ``"inf"`` for zero temperature.  Every key of
the scan config is optional.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .bath import Bath, BathMode, OhmicSpec, discretize_ohmic
from .errors import ConfigError, DephasingError
from .evolution import QubitParams

DEFAULT_XI_VALUES = (0.0, 0.25, 0.5, 0.75, 1.0)

__all__ = [
    "OhmicBlock",
    "BathConfig",
    "QubitConfig",
    "SimConfig",
    "Fig1Config",
    "load_json",
    "parse_sim_config",
    "parse_fig1_config",
    "load_sim_config",
    "load_fig1_config",
]


@dataclass(frozen=True)
class OhmicBlock:
    amplitude: float
    s: float
    omega_c: float
    n_modes: int
    omega_max: float


@dataclass(frozen=True)
class BathConfig:
    """Either explicit ``modes`` or an ``ohmic`` block, plus ``beta``."""

    beta: float
    modes: tuple = ()
    ohmic: OhmicBlock = None

    def build(self):
        if self.ohmic is not None:
            o = self.ohmic
            modes = discretize_ohmic(OhmicSpec(o.amplitude, o.s, o.omega_c), o.n_modes, o.omega_max)
        else:
            modes = self.modes
        return Bath(modes, self.beta)

    def to_dict(self):
        out = {"beta": "inf" if math.isinf(self.beta) else self.beta}
        if self.ohmic is not None:
            o = self.ohmic
            out["ohmic"] = {
                "amplitude": o.amplitude,
                "s": o.s,
                "omega_c": o.omega_c,
                "n_modes": o.n_modes,
                "omega_max": o.omega_max,
            }
        else:
            out["modes"] = [
                {"omega": m.omega, "g_re": m.g.real, "g_im": m.g.imag} for m in self.modes
            ]
        return out


@dataclass(frozen=True)
class QubitConfig:
    a: float
    bath: BathConfig

    def build(self):
        return QubitParams(self.a, self.bath.build())

    def to_dict(self):
        return {"a": self.a, "bath": self.bath.to_dict()}


@dataclass(frozen=True)
class SimConfig:
    qubit1: QubitConfig
    qubit2: QubitConfig
    alpha: complex
    t_max: float
    n_steps: int

    def times(self):
        return np.linspace(0.0, self.t_max, self.n_steps)

    def to_dict(self):
        return {
            "qubit1": self.qubit1.to_dict(),
            "qubit2": self.qubit2.to_dict(),
            "alpha": {"re": self.alpha.real, "im": self.alpha.imag},
            "time": {"t_max": self.t_max, "n_steps": self.n_steps},
        }


@dataclass(frozen=True)
class Fig1Config:
    xi_values: tuple = DEFAULT_XI_VALUES
    eta_min: float = 0.0
    eta_max: float = math.pi
    n_points: int = 181
    suppress_prefactor: bool = True
    alpha: complex = 1.0 + 0j

    def etas(self):
        return np.linspace(self.eta_min, self.eta_max, self.n_points)

    def to_dict(self):
        return {
            "xi_values": list(self.xi_values),
            "eta": {"min": self.eta_min, "max": self.eta_max, "n_points": self.n_points},
            "suppress_prefactor": self.suppress_prefactor,
            "alpha": {"re": self.alpha.real, "im": self.alpha.imag},
        }


# -- parsing helpers ---------------------------------------------------------


def load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(exc.msg, line=exc.lineno) from None


def _obj(data, path, allowed):
    if not isinstance(data, dict):
        raise ConfigError("expected an object", field=path or "<root>")
    extra = sorted(set(data) - set(allowed))
    if extra:
        raise ConfigError(f"unknown key(s) {extra}", field=path or "<root>")
    return data


def _join(path, key):
    return f"{path}.{key}" if path else key


def _get(data, path, key, default=KeyError):
    if key not in data:
        if default is KeyError:
            raise ConfigError("missing required key", field=_join(path, key))
        return default
    return data[key]


def _real(value, path, positive=False, nonneg=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"expected a number, got {value!r}", field=path)
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError("must be finite", field=path)
    if positive and value <= 0.0:
        raise ConfigError(f"must be > 0, got {value}", field=path)
    if nonneg and value < 0.0:
        raise ConfigError(f"must be >= 0, got {value}", field=path)
    return value


def _int(value, path, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"expected an integer, got {value!r}", field=path)
    if value < minimum:
        raise ConfigError(f"must be >= {minimum}, got {value}", field=path)
    return value


def _beta(value, path):
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "+inf", "infinity"):
            return math.inf
        raise ConfigError(f"expected a positive number or \"inf\", got {value!r}", field=path)
    return _real(value, path, positive=True)


def _complex(data, path):
    _obj(data, path, ("re", "im"))
    re = _real(_get(data, path, "re", 0.0), _join(path, "re"))
    im = _real(_get(data, path, "im", 0.0), _join(path, "im"))
    return complex(re, im)


def _bath(data, path):
    _obj(data, path, ("modes", "ohmic", "beta"))
    beta = _beta(_get(data, path, "beta"), _join(path, "beta"))
    if ("modes" in data) == ("ohmic" in data):
        raise ConfigError("exactly one of 'modes' or 'ohmic' is required", field=path)
    if "ohmic" in data:
        p = _join(path, "ohmic")
        o = _obj(data["ohmic"], p, ("amplitude", "s", "omega_c", "n_modes", "omega_max"))
        block = OhmicBlock(
            amplitude=_real(_get(o, p, "amplitude"), _join(p, "amplitude"), positive=True),
            s=_real(_get(o, p, "s"), _join(p, "s"), positive=True),
            omega_c=_real(_get(o, p, "omega_c"), _join(p, "omega_c"), positive=True),
            n_modes=_int(_get(o, p, "n_modes"), _join(p, "n_modes"), 1),
            omega_max=_real(_get(o, p, "omega_max"), _join(p, "omega_max"), positive=True),
        )
        return BathConfig(beta=beta, ohmic=block)

    p = _join(path, "modes")
    raw = data["modes"]
    if not isinstance(raw, list) or not raw:
        raise ConfigError("expected a non-empty list of modes", field=p)
    modes = []
    for i, entry in enumerate(raw):
        mp = f"{p}[{i}]"
        _obj(entry, mp, ("omega", "g_re", "g_im"))
        omega = _real(_get(entry, mp, "omega"), _join(mp, "omega"), positive=True)
        g = complex(
            _real(_get(entry, mp, "g_re", 0.0), _join(mp, "g_re")),
            _real(_get(entry, mp, "g_im", 0.0), _join(mp, "g_im")),
        )
        modes.append(BathMode(omega, g))
    return BathConfig(beta=beta, modes=tuple(modes))


def _qubit(data, path):
    _obj(data, path, ("a", "bath"))
    return QubitConfig(
        a=_real(_get(data, path, "a"), _join(path, "a")),
        bath=_bath(_get(data, path, "bath"), _join(path, "bath")),
    )


def parse_sim_config(data):
    """Validate a decoded JSON object and return a :class:`SimConfig`."""
    _obj(data, "", ("qubit1", "qubit2", "alpha", "time"))
    time = _obj(_get(data, "", "time"), "time", ("t_max", "n_steps"))
    cfg = SimConfig(
        qubit1=_qubit(_get(data, "", "qubit1"), "qubit1"),
        qubit2=_qubit(_get(data, "", "qubit2"), "qubit2"),
        alpha=_complex(_get(data, "", "alpha"), "alpha"),
        t_max=_real(_get(time, "time", "t_max"), "time.t_max", positive=True),
        n_steps=_int(_get(time, "time", "n_steps"), "time.n_steps", 2),
    )
    # surface bath construction problems as config errors
    for name in ("qubit1", "qubit2"):
        try:
            getattr(cfg, name).build()
        except DephasingError as exc:
            raise ConfigError(str(exc), field=f"{name}.bath") from None
    return cfg


def parse_fig1_config(data):
    """Validate a decoded JSON object and return a :class:`Fig1Config`."""
    _obj(data, "", ("xi_values", "eta", "suppress_prefactor", "alpha"))
    defaults = Fig1Config()
    xi_raw = _get(data, "", "xi_values", list(defaults.xi_values))
    if not isinstance(xi_raw, list) or not xi_raw:
        raise ConfigError("expected a non-empty list", field="xi_values")
    xis = []
    for i, x in enumerate(xi_raw):
        x = _real(x, f"xi_values[{i}]", nonneg=True)
        if x > 1.0:
            raise ConfigError(f"must be <= 1, got {x}", field=f"xi_values[{i}]")
        xis.append(x)
    eta = _obj(_get(data, "", "eta", {}), "eta", ("min", "max", "n_points"))
    suppress = _get(data, "", "suppress_prefactor", defaults.suppress_prefactor)
    if not isinstance(suppress, bool):
        raise ConfigError(f"expected true or false, got {suppress!r}", field="suppress_prefactor")
    alpha = _complex(_get(data, "", "alpha"), "alpha") if "alpha" in data else defaults.alpha
    return Fig1Config(
        xi_values=tuple(xis),
        eta_min=_real(_get(eta, "eta", "min", defaults.eta_min), "eta.min"),
        eta_max=_real(_get(eta, "eta", "max", defaults.eta_max), "eta.max"),
        n_points=_int(_get(eta, "eta", "n_points", defaults.n_points), "eta.n_points", 2),
        suppress_prefactor=suppress,
        alpha=alpha,
    )


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc.strerror}", field=str(path)) from None


def load_sim_config(path):
    return parse_sim_config(load_json(_read(path)))


def load_fig1_config(path):
    return parse_fig1_config(load_json(_read(path)))
