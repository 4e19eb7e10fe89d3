"""
Leitura e escrita dos arquivos CSV de sinal (t,re,im) e espectro (omega,re,im).

Reais são escritos com 17 dígitos significativos, o que reproduz um double
exatamente na releitura.
"""
import logging
from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import BaseModel, ValidationError

from .exceptions import CsvIoError, ParseError, TooShort
from .grids import infer_grid
from .models import (
    SampledSignal,
    SignalFileRow,
    Spectrum,
    SpectrumFileRow,
    TransformConvention,
    UniformGrid,
)

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"
SIGNAL_COLUMNS = list(SignalFileRow.model_fields)
SPECTRUM_COLUMNS = list(SpectrumFileRow.model_fields)


def _read_rows(path: str | Path, row_model: type[BaseModel]) -> tuple[np.ndarray, np.ndarray]:
    """Devolve (eixo, valores complexos) validando cabeçalho e cada linha"""
    columns = list(row_model.model_fields)
    try:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
            skip_blank_lines=False,
        )
    except FileNotFoundError as e:
        raise CsvIoError(f"arquivo não encontrado: {path}") from e
    except OSError as e:
        raise CsvIoError(f"erro ao ler {path}: {e}") from e
    except pd.errors.EmptyDataError as e:
        raise ParseError("arquivo vazio, esperava cabeçalho " + ",".join(columns), line=1) from e
    except pd.errors.ParserError as e:
        raise ParseError(str(e).strip(), line=_line_from_parser_error(e)) from e

    header = [c.strip() for c in frame.columns]
    if header != columns:
        raise ParseError(f"cabeçalho {','.join(header)!r}, esperava {','.join(columns)!r}", line=1)
    frame.columns = header

    # linhas em branco saem, mas o índice guarda a posição física (linha = índice + 2)
    blank = frame.map(lambda v: not isinstance(v, str) or not v.strip()).all(axis=1)
    frame = frame[~blank]

    if len(frame) < 2:
        raise TooShort(f"{path}: são necessárias pelo menos 2 linhas, encontrou {len(frame)}")

    try:
        numbers = frame.to_numpy(dtype=float)
    except ValueError:
        numbers = None
    if numbers is None or not np.all(np.isfinite(numbers)):
        _raise_first_bad_row(frame, row_model)

    axis, re, im = numbers.T
    return axis, re + 1j * im


def _raise_first_bad_row(frame: pd.DataFrame, row_model: type[BaseModel]) -> None:
    for position, row in zip(frame.index, frame.to_dict(orient="records")):
        try:
            row_model.model_validate({
                k: v.strip() if isinstance(v, str) else v for k, v in row.items()
            })
        except ValidationError as e:
            problem = e.errors()[0]
            field = problem["loc"][0] if problem["loc"] else "?"
            # +2: cabeçalho é a linha 1
            raise ParseError(f"campo {field}: {problem['msg']}", line=int(position) + 2) from e
    raise ParseError("valor não numérico", line=1)


def _line_from_parser_error(error: Exception) -> int:
    words = str(error).replace(",", " ").split()
    for before, word in zip(words, words[1:]):
        if before == "line" and word.isdigit():
            return int(word)
    return 1


def _write_frame(frame: pd.DataFrame, path: str | Path) -> None:
    try:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as e:
        raise CsvIoError(f"erro ao escrever {path}: {e}") from e
    logger.info("escrito %s (%d linhas)", path, len(frame))


def read_signal_csv(path: str | Path) -> SampledSignal:
    t, values = _read_rows(path, SignalFileRow)
    return SampledSignal(grid=infer_grid(t), values=values)


def read_spectrum_csv(path: str | Path, conv: TransformConvention) -> Spectrum:
    omega, values = _read_rows(path, SpectrumFileRow)
    return Spectrum(grid=infer_grid(omega), values=values, convention=conv)


def _axis_frame(grid: UniformGrid, values: np.ndarray, columns: list[str]) -> pd.DataFrame:
    axis_name, re_name, im_name = columns
    return pd.DataFrame({
        axis_name: grid.points(),
        re_name: values.real,
        im_name: values.imag,
    })


def write_signal_csv(signal: SampledSignal, path: str | Path) -> None:
    _write_frame(_axis_frame(signal.grid, signal.values, SIGNAL_COLUMNS), path)


def write_spectrum_csv(spectrum: Spectrum, path: str | Path) -> None:
    _write_frame(_axis_frame(spectrum.grid, spectrum.values, SPECTRUM_COLUMNS), path)


def write_frame_csv(frame: pd.DataFrame, path: str | Path) -> None:
    """Escreve tabelas auxiliares (benchmark, magnitudes da DFT) no mesmo formato"""
    _write_frame(frame, path)
