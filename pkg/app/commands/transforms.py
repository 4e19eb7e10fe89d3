import argparse
import logging
from pathlib import Path

import numpy as np

from ..config import settings
from ..conventions import forward_prefactor
from ..grids import centered_steps, natural_frequency_grid
from ..io_csv import read_signal_csv, read_spectrum_csv, write_signal_csv, write_spectrum_csv
from ..riemann_transform import forward_fft, forward_naive, inverse_fft
from .common import add_convention_args, convention_from_args

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    # forward
    forward = subparsers.add_parser("forward", help="transformada direta pelo caminho FFT")
    forward.add_argument("--in", dest="input", type=Path, required=True, help="CSV t,re,im")
    forward.add_argument("--out", type=Path, required=True, help="CSV omega,re,im")
    add_convention_args(forward)
    start = forward.add_mutually_exclusive_group()
    start.add_argument("--omega-start", type=float, default=0.0)
    start.add_argument("--center-nyquist", action="store_true",
                       help="centra a grade em zero, cobrindo [-|ω_nyq|, +|ω_nyq|]")
    forward.set_defaults(handler=run_forward)

    # inverse
    inverse = subparsers.add_parser("inverse", help="transformada inversa pelo caminho FFT")
    inverse.add_argument("--in", dest="input", type=Path, required=True, help="CSV omega,re,im")
    inverse.add_argument("--out", type=Path, required=True, help="CSV t,re,im")
    add_convention_args(inverse)
    inverse.add_argument("--t-start", type=float, default=0.0)
    inverse.set_defaults(handler=run_inverse)

    # compare
    compare = subparsers.add_parser("compare", help="compara caminho FFT com a soma direta")
    compare.add_argument("--in", dest="input", type=Path, required=True, help="CSV t,re,im")
    add_convention_args(compare)
    compare.add_argument("--omega-start", type=float, default=0.0)
    compare.set_defaults(handler=run_compare)


def run_forward(args: argparse.Namespace) -> int:
    conv = convention_from_args(args)
    signal = read_signal_csv(args.input)

    omega_start = args.omega_start
    if args.center_nyquist:
        W = natural_frequency_grid(signal.grid, conv).spacing
        omega_start = centered_steps(signal.grid.count) * W

    spectrum = forward_fft(signal, omega_start, conv)
    write_spectrum_csv(spectrum, args.out)
    return 0


def run_inverse(args: argparse.Namespace) -> int:
    conv = convention_from_args(args)
    spectrum = read_spectrum_csv(args.input, conv)
    signal = inverse_fft(spectrum, args.t_start)
    write_signal_csv(signal, args.out)
    return 0


def run_compare(args: argparse.Namespace) -> int:
    conv = convention_from_args(args)
    signal = read_signal_csv(args.input)

    spectrum = forward_fft(signal, args.omega_start, conv)
    naive = forward_naive(signal, spectrum.grid.points(), conv)

    deviation = float(np.max(np.abs(spectrum.values - naive)))
    scale = float(np.sum(np.abs(signal.values))) * forward_prefactor(conv) * abs(signal.grid.spacing)
    tolerance = settings.ORACLE_RTOL * scale

    print(f"desvio máximo: {deviation:.3e} (tolerância {tolerance:.3e})")
    if deviation > tolerance:
        logger.warning("caminho FFT fora da tolerância do oráculo")
        return 1
    return 0
