import math

import numpy as np
import pytest

from app.models import SampledSignal, TransformConvention, UniformGrid

A_VALUES = [-1.0, 0.0, 1.0]
B_VALUES = [-2 * math.pi, -1.0, 1.0, 2 * math.pi]
ORACLE_SIZES = [2, 3, 4, 16, 201, 256, 257]


@pytest.fixture
def rng():
    return np.random.default_rng(20150526)


@pytest.fixture
def default_conv():
    return TransformConvention(a=0.0, b=-1.0)


def random_complex(rng, n, scale=1.0):
    return scale * (rng.standard_normal(n) + 1j * rng.standard_normal(n))


def random_convention(rng):
    return TransformConvention(a=rng.choice(A_VALUES), b=rng.choice(B_VALUES))


def random_aligned_signal(rng, n):
    """Sinal aleatório com origem t′₁ = l·τ′ (l inteiro) e τ′ de sinal qualquer"""
    spacing = rng.uniform(0.05, 2.0) * rng.choice([-1.0, 1.0])
    offset = int(rng.integers(-2 * n, 2 * n + 1))
    grid = UniformGrid(start=offset * spacing, spacing=spacing, count=n)
    return SampledSignal(grid=grid, values=random_complex(rng, n))
