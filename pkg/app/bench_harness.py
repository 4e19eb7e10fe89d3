"""
Benchmark de complexidade: caminho FFT da soma de Riemann vs FFT pura vs soma direta.

A carga é rect(t − 1) com n pontos igualmente espaçados em [−10, 10]. Cada
(tamanho, método) tem uma execução de aquecimento descartada e depois
`repetitions` execuções cronometradas; guardamos a mediana.
"""
import logging
import statistics
import time
from typing import Callable, Iterable, Sequence

import numpy as np
import pandas as pd
from threadpoolctl import threadpool_limits

from . import dft_core
from .analytic_refs import rect_signal
from .config import settings
from .conventions import DEFAULT_CONVENTION, forward_prefactor
from .exceptions import BenchConfigError, MissingPair, OracleMismatch, SizeTooLarge
from .grids import centered_steps, natural_frequency_grid
from .models import BenchMethod, BenchRecord, SampledSignal, UniformGrid
from .riemann_transform import forward_fft, forward_naive

logger = logging.getLogger(__name__)

RECORD_COLUMNS = ["n", "method", "seconds", "repetitions"]
RATIO_COLUMNS = ["n", "ratio"]


def bench_workload(n: int) -> SampledSignal:
    grid = UniformGrid(start=-10.0, spacing=20.0 / (n - 1), count=n)
    return rect_signal(1.0, grid)


def _make_runner(method: BenchMethod, signal: SampledSignal) -> Callable[[], np.ndarray]:
    conv = DEFAULT_CONVENTION
    natural = natural_frequency_grid(signal.grid, conv)
    omega_start = centered_steps(signal.grid.count) * natural.spacing

    if method is BenchMethod.RIEMANN_FFT:
        return lambda: forward_fft(signal, omega_start, conv).values
    if method is BenchMethod.BARE_FFT:
        return lambda: dft_core.fft(signal.values)

    omegas = omega_start + natural.points()
    return lambda: forward_naive(signal, omegas, conv)


def _median_seconds(run: Callable[[], object], repetitions: int) -> float:
    run()  # aquecimento
    samples = []
    for _ in range(repetitions):
        started = time.perf_counter()
        run()
        samples.append(time.perf_counter() - started)
    return statistics.median(samples)


def _check_oracle(signal: SampledSignal, fast: np.ndarray, naive: np.ndarray) -> None:
    scale = np.sum(np.abs(signal.values)) * forward_prefactor(DEFAULT_CONVENTION) * abs(signal.grid.spacing)
    deviation = float(np.max(np.abs(fast - naive)))
    if deviation > settings.ORACLE_RTOL * scale:
        raise OracleMismatch(
            f"n={signal.grid.count}: desvio {deviation:.3e} acima de {settings.ORACLE_RTOL * scale:.3e}"
        )


def run_bench(
    sizes: Sequence[int],
    methods: Iterable[BenchMethod],
    repetitions: int | None = None,
    naive_cap: int | None = None,
) -> list[BenchRecord]:
    repetitions = settings.BENCH_REPETITIONS if repetitions is None else repetitions
    naive_cap = settings.NAIVE_SIZE_CAP if naive_cap is None else naive_cap
    methods = [BenchMethod(m) for m in methods]

    if repetitions < 3:
        raise BenchConfigError(f"repetitions deve ser >= 3, recebeu {repetitions}")
    if any(n < 2 for n in sizes):
        raise BenchConfigError(f"todos os tamanhos devem ser >= 2: {list(sizes)}")
    if BenchMethod.RIEMANN_NAIVE in methods:
        too_large = [n for n in sizes if n > naive_cap]
        if too_large:
            raise SizeTooLarge(f"riemann_naive limitado a n <= {naive_cap}: {too_large}")

    records = []
    # tempos só valem com execução sequencial
    with threadpool_limits(limits=1):
        for n in sizes:
            signal = bench_workload(n)
            outputs = {}
            for method in methods:
                run = _make_runner(method, signal)
                seconds = _median_seconds(run, repetitions)
                outputs[method] = run()
                records.append(
                    BenchRecord(n=n, method=method, seconds=seconds, repetitions=repetitions)
                )
                logger.info("n=%d %s: %.6fs", n, method.value, seconds)

            if BenchMethod.RIEMANN_FFT in outputs and BenchMethod.RIEMANN_NAIVE in outputs:
                _check_oracle(
                    signal,
                    outputs[BenchMethod.RIEMANN_FFT],
                    outputs[BenchMethod.RIEMANN_NAIVE],
                )

    return records


def ratio_table(records: Sequence[BenchRecord]) -> list[tuple[int, float]]:
    """riemann_fft / bare_fft por tamanho, para os tamanhos que têm algum dos dois"""
    fft_like = {BenchMethod.RIEMANN_FFT, BenchMethod.BARE_FFT}
    by_size: dict[int, dict[BenchMethod, float]] = {}
    for record in records:
        if record.method in fft_like:
            by_size.setdefault(record.n, {})[record.method] = record.seconds

    ratios = []
    for n in sorted(by_size):
        timings = by_size[n]
        missing = fft_like - timings.keys()
        if missing:
            names = ", ".join(sorted(m.value for m in missing))
            raise MissingPair(f"n={n} sem {names}")
        bare = timings[BenchMethod.BARE_FFT]
        ratio = timings[BenchMethod.RIEMANN_FFT] / bare if bare > 0 else float("inf")
        ratios.append((n, ratio))
    return ratios


def _seconds_for(records: Sequence[BenchRecord], method: BenchMethod) -> dict[int, float]:
    return {r.n: r.seconds for r in records if r.method is method}


def growth_ratio(records: Sequence[BenchRecord], method: BenchMethod, n_small: int, n_large: int) -> float:
    """seconds(n_large) / seconds(n_small) para um método"""
    timings = _seconds_for(records, BenchMethod(method))
    return timings[n_large] / timings[n_small]


def growth_exponent(records: Sequence[BenchRecord], method: BenchMethod) -> float:
    """Inclinação de log(seconds) vs log(n) por mínimos quadrados"""
    timings = _seconds_for(records, BenchMethod(method))
    sizes = sorted(n for n, s in timings.items() if s > 0)
    if len(sizes) < 2:
        raise BenchConfigError("são necessários pelo menos 2 tamanhos com tempo > 0")
    slope, _ = np.polyfit(np.log(sizes), np.log([timings[n] for n in sizes]), 1)
    return float(slope)


def records_frame(records: Sequence[BenchRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        [(r.n, r.method.value, r.seconds, r.repetitions) for r in records],
        columns=RECORD_COLUMNS,
    )


def ratios_frame(ratios: Sequence[tuple[int, float]]) -> pd.DataFrame:
    return pd.DataFrame(list(ratios), columns=RATIO_COLUMNS)
