"""
Grades uniformes e as grades conjugadas que o caminho FFT exige.
"""
import logging
import math
from typing import Sequence

import numpy as np

from .config import settings
from .exceptions import NonUniformGrid, TooShort
from .models import TransformConvention, UniformGrid

logger = logging.getLogger(__name__)


def infer_grid(points: Sequence[float], rtol: float | None = None) -> UniformGrid:
    """
    Recupera (início, espaçamento, N) de uma lista de pontos igualmente espaçados.
    Aceita ordem decrescente (espaçamento negativo).
    """
    rtol = settings.GRID_UNIFORMITY_RTOL if rtol is None else rtol
    pts = np.asarray(points, dtype=float).reshape(-1)

    if pts.size < 2:
        raise TooShort(f"são necessários pelo menos 2 pontos, recebeu {pts.size}")
    if not np.all(np.isfinite(pts)):
        raise NonUniformGrid("pontos não finitos na grade")

    n = pts.size
    spacing = (pts[-1] - pts[0]) / (n - 1)
    if spacing == 0:
        raise NonUniformGrid("pontos não são estritamente monotônicos")

    gaps = np.diff(pts)
    deviation = np.abs(gaps - spacing)
    bad = np.flatnonzero(deviation > rtol * abs(spacing))
    if bad.size:
        j = int(bad[0])
        raise NonUniformGrid(
            f"intervalo {gaps[j]!r} entre os pontos {j + 1} e {j + 2} "
            f"difere do espaçamento {spacing!r}"
        )

    grid = UniformGrid(start=float(pts[0]), spacing=float(spacing), count=n)
    logger.debug("grade inferida: %r", grid)
    return grid


def natural_frequency_grid(time_grid: UniformGrid, conv: TransformConvention) -> UniformGrid:
    """ω_k = −2π(k−1)/(τ′ b N): a grade onde a soma de Riemann é uma DFT com fase"""
    n = time_grid.count
    w = -2 * math.pi / (time_grid.spacing * conv.b * n)
    return UniformGrid(start=0.0, spacing=w, count=n)


def natural_time_grid(freq_grid: UniformGrid, conv: TransformConvention) -> UniformGrid:
    """t_j = −2π(j−1)/(W′ b N), o espelho da grade natural de frequência"""
    n = freq_grid.count
    tau = -2 * math.pi / (freq_grid.spacing * conv.b * n)
    return UniformGrid(start=0.0, spacing=tau, count=n)


def nyquist_frequency(time_grid: UniformGrid, conv: TransformConvention) -> float:
    return -math.pi / (time_grid.spacing * conv.b)


def centered_steps(count: int) -> int:
    # N ímpar: ⌊N/2⌋ bins negativos, o zero e ⌊N/2⌋ positivos
    return -(count // 2)
