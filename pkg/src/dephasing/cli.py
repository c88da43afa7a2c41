"""Command-line front end.

Subcommands::

    dephasing simulate --config sim.json [--out rows.csv]
    dephasing fig1 --config fig1.json [--out mu.csv]
    dephasing verify [--seed N] [--samples N] [--tol NAME=VALUE ...]

Exit codes: 0 success, 1 a verification check failed, 2 bad config or
arguments.
"""

import argparse
import csv
import math
import os
import sys
from contextlib import contextmanager

import numpy as np

from . import __version__
from .bath import spectral_function
from .checks import DEFAULT_TOLERANCES, run_checks
from .config import load_fig1_config, load_sim_config
from .entanglement import ScanPoint, analytic_concurrence, analytic_mu, concurrence
from .errors import ConfigError, DephasingError
from .evolution import DephasingFactors, bell_family_state, evolve

SIM_COLUMNS = (
    "t", "G1", "G2", "q1", "q2", "re_p1", "im_p1", "re_p2", "im_p2",
    "mu1", "mu2", "concurrence_general", "concurrence_analytic",
)
FIG1_COLUMNS = ("xi", "eta", "mu1", "mu2")


def fmt(x):
    return format(float(x), ".17g")


def simulate_rows(config):
    """Yield one tuple of floats per time step, in :data:`SIM_COLUMNS` order."""
    q1, q2 = config.qubit1.build(), config.qubit2.build()
    times = config.times()
    g1 = spectral_function(q1.bath, times)
    g2 = spectral_function(q2.bath, times)
    rho0 = bell_family_state(config.alpha)
    for t, G1, G2 in zip(times, g1, g2):
        t = float(t)
        try:
            f = DephasingFactors(
                np.exp(2j * q1.a * t), np.exp(2j * q2.a * t), math.exp(-4 * G1), math.exp(-4 * G2)
            )
            general = concurrence(evolve(rho0, f)).c
            point = ScanPoint(f.q1 * f.q2, 2.0 * (q2.a - q1.a) * t, config.alpha)
            mu1, mu2 = analytic_mu(point)
            analytic = analytic_concurrence(point)
        except DephasingError as exc:
            raise type(exc)(f"at t = {t!r}: {exc}") from exc
        yield (
            t, G1, G2, f.q1, f.q2, f.p1.real, f.p1.imag, f.p2.real, f.p2.imag,
            mu1, mu2, general, analytic,
        )


def fig1_rows(config):
    """Yield ``(xi, eta, mu1, mu2)`` for every xi and every eta, xi-major.

    With the prefactor suppressed ``alpha`` is irrelevant; the scan runs at
    ``alpha = 1`` and divides by its prefactor 1/4, which is exact.
    """
    alpha = 1.0 if config.suppress_prefactor else config.alpha
    scale = 4.0 if config.suppress_prefactor else 1.0
    for xi in config.xi_values:
        for eta in config.etas():
            mu1, mu2 = analytic_mu(ScanPoint(xi, float(eta), alpha))
            yield xi, float(eta), scale * mu1, scale * mu2


def write_csv(stream, header, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(x) for x in row])


def run_simulate(config, stream):
    write_csv(stream, SIM_COLUMNS, simulate_rows(config))


def run_fig1(config, stream):
    write_csv(stream, FIG1_COLUMNS, fig1_rows(config))


def run_verify(seed=0, samples=10_000, tolerances=None, stream=None):
    """Run the verification suite, print one line per check, return the exit status."""
    stream = sys.stdout if stream is None else stream
    results = run_checks(seed=seed, samples=samples, tolerances=tolerances)
    for res in results:
        print(res.line(), file=stream)
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"FAILED: {', '.join(failed)}", file=stream)
        return 1
    print(f"ALL {len(results)} CHECKS PASSED", file=stream)
    return 0


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _tolerance(text):
    name, sep, value = text.partition("=")
    if not sep or name not in DEFAULT_TOLERANCES:
        raise argparse.ArgumentTypeError(
            f"expected NAME=VALUE with NAME one of {', '.join(DEFAULT_TOLERANCES)}"
        )
    try:
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad tolerance value {value!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dephasing",
        description="Entanglement decay of two qubits under independent pure dephasing.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="time series of G, dephasing factors and concurrence")
    p.add_argument("--config", required=True, help="JSON simulation config")
    p.add_argument("--out", help="CSV output path (default: stdout)")

    p = sub.add_parser("fig1", help="closed-form eigenvalues mu1, mu2 over (xi, eta)")
    p.add_argument("--config", required=True, help="JSON scan config")
    p.add_argument("--out", help="CSV output path (default: stdout)")

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument(
        "--tol",
        type=_tolerance,
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="override one check tolerance (testing the harness)",
    )
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            config = load_sim_config(args.config)
            with _output(args.out) as fh:
                run_simulate(config, fh)
            return 0
        if args.command == "fig1":
            config = load_fig1_config(args.config)
            with _output(args.out) as fh:
                run_fig1(config, fh)
            return 0
        if args.samples < 1:
            raise ConfigError("must be >= 1", field="--samples")
        return run_verify(args.seed, args.samples, dict(args.tol))
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DephasingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream closed early (e.g. `| head`); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
