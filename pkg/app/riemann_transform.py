"""
Aproximações por soma de Riemann da transformada de Fourier contínua.

Direta:  F̃(ω) = √(|b|/(2π)^(1−a)) |τ′| Σ_j x_j e^{i b ω t′_j}
Inversa: F(t) = √(|b|/(2π)^(1+a)) |W′| Σ_k X_k e^{−i b ω′_k t}

Cada uma tem o caminho ingênuo O(N·M), que serve de oráculo, e o caminho FFT
O(N log N): DFT na grade natural, fatores de fase e depois o deslocamento
periódico para a grade pedida.
"""
import logging
import math
from typing import Sequence

import numpy as np

from . import dft_core
from .config import settings
from .conventions import forward_prefactor, inverse_prefactor
from .exceptions import GridTooShort, MisalignedOrigin, OffGridStart
from .grids import natural_frequency_grid, natural_time_grid
from .models import (
    GridShift,
    SampledSignal,
    Spectrum,
    TransformConvention,
    UniformGrid,
    fits_int64,
)

logger = logging.getLogger(__name__)


def _direct_sum(values: np.ndarray, rows: np.ndarray, cols: np.ndarray, coeff: complex) -> np.ndarray:
    """Σ_c values[c]·e^{coeff·rows[r]·cols[c]} para cada linha, em blocos de linhas"""
    out = np.empty(rows.size, dtype=np.complex128)
    block = max(1, settings.NAIVE_BLOCK_ROWS)
    for lo in range(0, rows.size, block):
        hi = lo + block
        out[lo:hi] = np.exp(coeff * np.outer(rows[lo:hi], cols)) @ values
    return out


def _lattice_steps(start: float, spacing: float, what: str) -> int:
    ratio = start / spacing
    if not math.isfinite(ratio):
        raise OffGridStart(f"{what}={start!r} não é finito")
    n = round(ratio)
    if abs(ratio - n) > settings.LATTICE_ATOL:
        raise OffGridStart(
            f"{what}={start!r} não é múltiplo inteiro do espaçamento natural {spacing!r} "
            f"(razão {ratio!r})"
        )
    return int(n)


def forward_naive(
    signal: SampledSignal,
    omegas: Sequence[float],
    conv: TransformConvention,
) -> np.ndarray:
    """Soma de Riemann direta (forma matricial), O(N·M). Oráculo de forward_fft."""
    omegas = np.asarray(omegas, dtype=float).reshape(-1)
    t = signal.grid.points()
    scale = forward_prefactor(conv) * abs(signal.grid.spacing)
    return scale * _direct_sum(signal.values, omegas, t, 1j * conv.b)


def inverse_naive(spectrum: Spectrum, times: Sequence[float]) -> np.ndarray:
    """Soma de Riemann direta da inversa, O(N·M). Oráculo de inverse_fft."""
    conv = spectrum.convention
    times = np.asarray(times, dtype=float).reshape(-1)
    omegas = spectrum.grid.points()
    scale = inverse_prefactor(conv) * abs(spectrum.grid.spacing)
    return scale * _direct_sum(spectrum.values, times, omegas, -1j * conv.b)


def apply_shift(
    natural_values: Sequence[complex],
    n: int,
    domain_start: float,
    domain_spacing: float,
    N: int,
    *,
    inverse: bool = False,
) -> tuple[np.ndarray, GridShift]:
    """
    Leva valores da grade natural (início 0) para a grade que começa `n` passos adiante.

    Para a saída k: q = ((k−1+n) mod N) + 1 e m_k = −⌊(k−1+n)/N⌋; o valor é o da
    entrada q vezes a fase de periodicidade
        direta:  e^{ i(2π/τ′) m t′₁}   (domain_start=t′₁, domain_spacing=τ′)
        inversa: e^{−i(2π/W′) m ω′₁}   (domain_start=ω′₁, domain_spacing=W′)
    n = 0 é a identidade.
    """
    values = np.asarray(natural_values, dtype=np.complex128).reshape(-1)
    if values.size != N:
        raise ValueError(f"{values.size} valores para N={N}")

    # divmod em int Python: n pode ser arbitrariamente grande
    whole, rest = divmod(int(n), N)
    s = np.arange(N) + rest  # 0..2N−2
    q = s % N
    carry = s // N
    if fits_int64(n, N):
        m = -(whole + carry)
    else:
        m = np.array([-(whole + int(c)) for c in carry], dtype=object)

    theta = 2 * math.pi * domain_start / domain_spacing
    if inverse:
        theta = -theta
    phase = np.exp(1j * np.asarray(m, dtype=float) * theta)
    shifted = phase * values[q]

    shift = GridShift(steps=int(n), wrap_counts=m, permutation=q + 1)
    logger.debug("deslocamento n=%d N=%d inverse=%s", n, N, inverse)
    return shifted, shift


def forward_fft(
    signal: SampledSignal,
    omega_start: float,
    conv: TransformConvention,
) -> Spectrum:
    """
    F̃ em N frequências igualmente espaçadas a partir de omega_start, em O(N log N).
    omega_start precisa ser múltiplo inteiro de W = −2π/(τ′ b N).
    """
    grid = signal.grid
    N = grid.count
    if N < 2:
        raise GridTooShort("o caminho FFT exige N >= 2; use forward_naive")

    natural = natural_frequency_grid(grid, conv)
    W = natural.spacing
    n = _lattice_steps(omega_start, W, "omega_start")

    omega_k = natural.points()
    scale = forward_prefactor(conv) * abs(grid.spacing)
    on_natural = scale * np.exp(1j * conv.b * omega_k * grid.start) * dft_core.fft(signal.values)

    values, _ = apply_shift(on_natural, n, grid.start, grid.spacing, N)
    return Spectrum(
        grid=UniformGrid(start=n * W, spacing=W, count=N),
        values=values,
        convention=conv,
    )


def inverse_fft(spectrum: Spectrum, time_start: float) -> SampledSignal:
    """
    F em N instantes igualmente espaçados a partir de time_start, em O(N log N).
    time_start precisa ser múltiplo inteiro de τ = −2π/(W′ b N).
    """
    conv = spectrum.convention
    grid = spectrum.grid
    N = grid.count
    if N < 2:
        raise GridTooShort("o caminho FFT exige N >= 2; use inverse_naive")

    natural = natural_time_grid(grid, conv)
    tau = natural.spacing
    n = _lattice_steps(time_start, tau, "time_start")

    t_j = natural.points()
    scale = inverse_prefactor(conv) * N * abs(grid.spacing)
    on_natural = scale * np.exp(-1j * conv.b * grid.start * t_j) * dft_core.ifft(spectrum.values)

    values, _ = apply_shift(on_natural, n, grid.start, grid.spacing, N, inverse=True)
    return SampledSignal(grid=UniformGrid(start=n * tau, spacing=tau, count=N), values=values)


def round_trip(signal: SampledSignal, conv: TransformConvention) -> SampledSignal:
    """
    inverse_fft(forward_fft(x)) na grade original. Só é identidade quando a origem
    é múltiplo inteiro do espaçamento.
    """
    grid = signal.grid
    ratio = grid.start / grid.spacing
    if abs(ratio - round(ratio)) > settings.ORIGIN_RTOL:
        raise MisalignedOrigin(
            f"início {grid.start!r} não é múltiplo inteiro do espaçamento {grid.spacing!r}"
        )

    spectrum = forward_fft(signal, 0.0, conv)
    restored = inverse_fft(spectrum, grid.start)
    return SampledSignal(grid=grid, values=restored.values)


def inversion_kernel(
    time_grid: UniformGrid,
    conv: TransformConvention,
    offsets: Sequence[int],
) -> np.ndarray:
    """
    Σ_{k′=1}^{N} e^{i b W′ (m τ′)(k′−1)} para cada deslocamento inteiro m.
    Vale N em m = 0 e zero para 0 < |m| ≤ N−1.
    """
    W = natural_frequency_grid(time_grid, conv).spacing
    m = np.asarray(offsets, dtype=float).reshape(-1)
    k = np.arange(time_grid.count)
    return np.exp(1j * conv.b * W * time_grid.spacing * np.outer(m, k)).sum(axis=1)


def spectrum_energy(spectrum: Spectrum) -> float:
    return float(np.sum(np.abs(spectrum.values) ** 2) * abs(spectrum.grid.spacing))


def signal_energy(signal: SampledSignal) -> float:
    return float(np.sum(np.abs(signal.values) ** 2) * abs(signal.grid.spacing))
