"""
Transformadas analíticas de referência e os sinais das demonstrações.
"""
import math

import numpy as np

from .exceptions import UnsupportedConvention
from .models import SampledSignal, TestSignalSpec, TransformConvention, UniformGrid

INV_SQRT_TWO_PI = 1 / math.sqrt(2 * math.pi)

# Tolerância para decidir que um ponto caiu exatamente na borda do rect
EDGE_ATOL = 1e-12
# Abaixo disso usa a série de sinc em vez de sin(x)/x
SINC_SERIES_CUTOFF = 1e-8


def fig1_grid() -> UniformGrid:
    """201 pontos em [−100, 100]"""
    return UniformGrid(start=-100.0, spacing=1.0, count=201)


def fig2_grid() -> UniformGrid:
    """201 pontos em [−10, 10]"""
    return UniformGrid(start=-10.0, spacing=0.1, count=201)


def rect_signal(center: float, grid: UniformGrid) -> SampledSignal:
    """
    Amostra rect(t − center) com meio-máximo nas bordas:
    1 para |t − center| < 1/2, 1/2 em |t − center| = 1/2, 0 fora.
    """
    dist = np.abs(grid.points() - center)
    values = np.where(dist < 0.5, 1.0, 0.0)
    values[np.abs(dist - 0.5) <= EDGE_ATOL] = 0.5
    return SampledSignal(grid=grid, values=values)


def rect_transform_analytic(omega):
    """
    Transformada de rect(t − 1) para a=0, b=−1:
        f̃(ω) = (1/√(2π)) e^{−iω} sin(ω/2)/(ω/2)
    Aceita escalar ou array.
    """
    w = np.asarray(omega, dtype=float)
    half = w / 2
    small = np.abs(w) < SINC_SERIES_CUTOFF
    safe = np.where(small, 1.0, half)
    sinc = np.where(small, 1 - w**2 / 24, np.sin(safe) / safe)
    result = INV_SQRT_TWO_PI * np.exp(-1j * w) * sinc
    if result.ndim == 0:
        return complex(result)
    return result


def require_analytic_convention(conv: TransformConvention) -> None:
    if conv.a != 0 or conv.b != -1:
        raise UnsupportedConvention(
            f"a forma fechada do rect só vale para a=0, b=-1 (recebeu a={conv.a}, b={conv.b})"
        )


def fig1_signal(grid: UniformGrid) -> SampledSignal:
    """f(t) = sin(t) + 0.1 e^{−2it}"""
    t = grid.points()
    return SampledSignal(grid=grid, values=np.sin(t) + 0.1 * np.exp(-2j * t))


def sample_test_signal(spec: TestSignalSpec, grid: UniformGrid) -> SampledSignal:
    if spec.kind == "rect_shifted":
        return rect_signal(spec.center, grid)
    return fig1_signal(grid)
