import argparse
import logging
from pathlib import Path

from ..bench_harness import (
    growth_exponent,
    ratio_table,
    ratios_frame,
    records_frame,
    run_bench,
)
from ..config import settings
from ..io_csv import write_frame_csv
from ..models import BenchMethod

logger = logging.getLogger(__name__)


def _size_list(text: str) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de tamanhos inválida: {text!r}")
    if not sizes:
        raise argparse.ArgumentTypeError("lista de tamanhos vazia")
    return sizes


def register(subparsers) -> None:
    bench = subparsers.add_parser("bench", help="mede a escala dos métodos")
    bench.add_argument("--sizes", type=_size_list, default=None,
                       help="tamanhos separados por vírgula (padrão 2^12..2^17)")
    bench.add_argument("--odd-sizes", action="store_true",
                       help="inclui tamanhos ímpares para exercitar N arbitrário")
    bench.add_argument("--reps", type=int, default=None, help="repetições por medida (>= 3)")
    bench.add_argument("--include-naive", action="store_true",
                       help=f"mede também a soma direta (n <= {settings.NAIVE_SIZE_CAP})")
    bench.add_argument("--out", type=Path, required=True, help="CSV n,method,seconds,repetitions")
    bench.set_defaults(handler=run)


def ratios_path(out: Path) -> Path:
    return out.with_name(f"{out.stem}_ratios.csv")


def run(args: argparse.Namespace) -> int:
    sizes = list(args.sizes or settings.BENCH_SIZES)
    if args.odd_sizes:
        sizes += [n for n in settings.BENCH_ODD_SIZES if n not in sizes]

    fft_methods = [BenchMethod.RIEMANN_FFT, BenchMethod.BARE_FFT]
    with_naive = []
    if args.include_naive:
        with_naive = [n for n in sizes if n <= settings.NAIVE_SIZE_CAP]
        skipped = [n for n in sizes if n > settings.NAIVE_SIZE_CAP]
        if skipped:
            logger.info("soma direta ignorada para n=%s", skipped)
    fft_only = [n for n in sizes if n not in with_naive]

    # juntos, para o harness conferir FFT contra a soma direta
    records = []
    if with_naive:
        records += run_bench(with_naive, fft_methods + [BenchMethod.RIEMANN_NAIVE], args.reps)
    if fft_only:
        records += run_bench(fft_only, fft_methods, args.reps)
    records.sort(key=lambda r: r.n)

    ratios = ratio_table(records)
    write_frame_csv(records_frame(records), args.out)
    write_frame_csv(ratios_frame(ratios), ratios_path(args.out))

    for method in {r.method for r in records}:
        if len({r.n for r in records if r.method is method}) >= 2:
            logger.info("expoente de crescimento %s: %.2f", method.value, growth_exponent(records, method))
    return 0
