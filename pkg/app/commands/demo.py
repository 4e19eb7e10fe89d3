import argparse
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from .. import dft_core
from ..analytic_refs import (
    fig1_grid,
    fig1_signal,
    fig2_grid,
    rect_signal,
    rect_transform_analytic,
    require_analytic_convention,
)
from ..grids import centered_steps, natural_frequency_grid
from ..io_csv import write_frame_csv, write_signal_csv, write_spectrum_csv
from ..models import SampledSignal, Spectrum, TransformConvention
from ..riemann_transform import forward_fft
from .common import add_convention_args, convention_from_args

logger = logging.getLogger(__name__)

# Faixa |ω| onde o espectro do rect deve concordar com a forma fechada
FIG2_BAND = 2.0


def register(subparsers) -> None:
    demo = subparsers.add_parser("demo", help="gera os CSV das demonstrações (fig1, fig2)")
    demo.add_argument("figure", choices=["fig1", "fig2"])
    demo.add_argument("--out", required=True, help="prefixo dos arquivos gerados")
    add_convention_args(demo)
    demo.set_defaults(handler=run)


def output_path(prefix: str, name: str) -> Path:
    return Path(f"{prefix}_{name}.csv")


def centered_spectrum(signal: SampledSignal, conv: TransformConvention) -> Spectrum:
    W = natural_frequency_grid(signal.grid, conv).spacing
    return forward_fft(signal, centered_steps(signal.grid.count) * W, conv)


def run_fig1(prefix: str, conv: TransformConvention) -> None:
    """sin(t) + 0.1e^{−2it}: magnitudes da DFT crua e o espectro de Riemann centrado"""
    signal = fig1_signal(fig1_grid())
    magnitudes = np.abs(dft_core.fft(signal.values))
    dft_frame = pd.DataFrame({
        "k": np.arange(1, magnitudes.size + 1),
        "magnitude": magnitudes,
    })

    write_signal_csv(signal, output_path(prefix, "signal"))
    write_frame_csv(dft_frame, output_path(prefix, "dft"))
    write_spectrum_csv(centered_spectrum(signal, conv), output_path(prefix, "spectrum"))


def run_fig2(prefix: str, conv: TransformConvention) -> None:
    """rect(t − 1): espectro de Riemann centrado e a forma fechada nas mesmas frequências"""
    require_analytic_convention(conv)
    signal = rect_signal(1.0, fig2_grid())
    spectrum = centered_spectrum(signal, conv)
    omegas = spectrum.grid.points()
    analytic = Spectrum(grid=spectrum.grid, values=rect_transform_analytic(omegas), convention=conv)

    band = np.abs(omegas) <= FIG2_BAND
    deviation = np.max(np.abs(spectrum.values[band] - analytic.values[band]))
    logger.info("fig2: desvio máximo para |ω| <= %.1f: %.3e", FIG2_BAND, deviation)

    write_signal_csv(signal, output_path(prefix, "signal"))
    write_spectrum_csv(spectrum, output_path(prefix, "spectrum"))
    write_spectrum_csv(analytic, output_path(prefix, "analytic"))


def run(args: argparse.Namespace) -> int:
    conv = convention_from_args(args)
    if args.figure == "fig1":
        run_fig1(args.out, conv)
    else:
        run_fig2(args.out, conv)
    return 0
