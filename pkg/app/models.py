from enum import Enum
from typing import Annotated, Any, Literal

import numpy as np
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    FiniteFloat,
    field_validator,
    model_validator,
)


def _complex_array(value: Any) -> np.ndarray:
    arr = np.array(value, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise ValueError(f"esperava sequência 1-D, recebeu shape {arr.shape}")
    arr.setflags(write=False)
    return arr


# Acima disso inteiros de deslocamento saem de int64 e viram int Python (dtype=object)
INT64_SAFE = 2**62


def fits_int64(steps: int, count: int) -> bool:
    """(k−1) + steps e N·m cabem em int64 para todo k e toda volta m"""
    return abs(int(steps)) + 2 * count < INT64_SAFE


def _int_array(value: Any) -> np.ndarray:
    arr = np.asarray(value)
    if arr.dtype != object:
        arr = arr.astype(np.int64, copy=False)
    arr = arr.reshape(-1)
    arr.setflags(write=False)
    return arr


ComplexArray = Annotated[np.ndarray, BeforeValidator(_complex_array)]
IntArray = Annotated[np.ndarray, BeforeValidator(_int_array)]


class TransformConvention(BaseModel):
    """Constantes (a, b) que escolhem a convenção da transformada"""

    model_config = ConfigDict(frozen=True)

    a: FiniteFloat = 0.0
    b: FiniteFloat = -1.0

    @field_validator("b")
    @classmethod
    def _b_nonzero(cls, v: float) -> float:
        if v == 0:
            raise ValueError("b deve ser diferente de zero")
        return v

    def __repr__(self):
        return f"<TransformConvention a={self.a} b={self.b}>"


class UniformGrid(BaseModel):
    """
    Eixo uniforme (tempo ou frequência) guardado como (início, espaçamento, N).
    Índices são 1-based: point(j) = start + spacing·(j−1).
    """

    model_config = ConfigDict(frozen=True)

    start: FiniteFloat
    spacing: FiniteFloat
    count: int = Field(ge=1)

    @field_validator("spacing")
    @classmethod
    def _spacing_nonzero(cls, v: float) -> float:
        if v == 0:
            raise ValueError("spacing deve ser diferente de zero")
        return v

    def point(self, j: int) -> float:
        if not 1 <= j <= self.count:
            raise IndexError(f"índice {j} fora de 1..{self.count}")
        return self.start + self.spacing * (j - 1)

    def points(self) -> np.ndarray:
        return self.start + self.spacing * np.arange(self.count)

    @property
    def end(self) -> float:
        return self.point(self.count)

    def __repr__(self):
        return f"<UniformGrid start={self.start} spacing={self.spacing} count={self.count}>"


class _Sampled(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: UniformGrid
    values: ComplexArray

    @model_validator(mode="after")
    def _length_matches_grid(self):
        if self.values.size != self.grid.count:
            raise ValueError(
                f"{self.values.size} valores para uma grade de {self.grid.count} pontos"
            )
        return self


class SampledSignal(_Sampled):
    """Amostras complexas sobre uma grade de tempo"""


class Spectrum(_Sampled):
    """Valores da transformada sobre uma grade de frequência, com a convenção usada"""

    convention: TransformConvention


class GridShift(BaseModel):
    """
    Reindexação da grade natural para uma grade deslocada de `steps` passos.
    Para cada saída k (1-based):
        (permutation[k] − 1) − N·wrap_counts[k] = (k − 1) + steps
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    steps: int
    wrap_counts: IntArray
    permutation: IntArray

    @model_validator(mode="after")
    def _defining_relation(self):
        n = self.permutation.size
        if self.wrap_counts.size != n:
            raise ValueError("wrap_counts e permutation com tamanhos diferentes")
        if not np.array_equal(np.sort(self.permutation), np.arange(1, n + 1)):
            raise ValueError("permutation não é uma bijeção em 1..N")
        k = np.arange(n)
        permutation, wrap_counts = self.permutation, self.wrap_counts
        if wrap_counts.dtype == object or not fits_int64(self.steps, n):
            k = k.astype(object)
            permutation = permutation.astype(object)
            wrap_counts = wrap_counts.astype(object)
        lhs = (permutation - 1) - n * wrap_counts
        if not np.all(lhs == k + self.steps):
            raise ValueError("relação de deslocamento violada")
        return self

    @property
    def count(self) -> int:
        return self.permutation.size


class BenchMethod(str, Enum):
    RIEMANN_FFT = "riemann_fft"
    BARE_FFT = "bare_fft"
    RIEMANN_NAIVE = "riemann_naive"


class BenchRecord(BaseModel):
    """Uma linha do benchmark: mediana do tempo de parede"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2)
    method: BenchMethod
    seconds: FiniteFloat = Field(ge=0)
    repetitions: int = Field(ge=3)


class TestSignalSpec(BaseModel):
    """Sinais de demonstração: rect deslocado ou sin(t) + 0.1e^{−2it}"""

    __test__ = False  # não é classe de teste do pytest

    model_config = ConfigDict(frozen=True)

    kind: Literal["rect_shifted", "fig1_composite"]
    center: FiniteFloat = 1.0


# Linhas dos arquivos CSV
class SignalFileRow(BaseModel):
    t: FiniteFloat
    re: FiniteFloat
    im: FiniteFloat


class SpectrumFileRow(BaseModel):
    omega: FiniteFloat
    re: FiniteFloat
    im: FiniteFloat
