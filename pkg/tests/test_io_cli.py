import numpy as np
import pandas as pd
import pytest
from numpy.testing import assert_allclose

from app.exceptions import CsvIoError, NonUniformGrid, ParseError, TooShort
from app.io_csv import (
    read_signal_csv,
    read_spectrum_csv,
    write_signal_csv,
    write_spectrum_csv,
)
from app.models import SampledSignal, Spectrum, UniformGrid
from main import cli_main
from tests.conftest import random_complex


def write_text(path, text):
    path.write_text(text, encoding="utf-8")
    return path


# leitura/escrita

def test_read_signal_csv(tmp_path):
    path = write_text(tmp_path / "sig.csv", "t,re,im\n0,1,0\n1,0,0\n2,1,0\n")
    signal = read_signal_csv(path)
    assert (signal.grid.start, signal.grid.spacing, signal.grid.count) == (0, 1, 3)
    assert_allclose(signal.values, [1, 0, 1])


def test_read_signal_csv_skips_blank_lines(tmp_path):
    path = write_text(tmp_path / "sig.csv", "t,re,im\n0,1,0\n\n1,0,0\n2,1,0\n\n")
    signal = read_signal_csv(path)
    assert signal.grid.count == 3
    assert_allclose(signal.values, [1, 0, 1])


def test_read_signal_csv_non_uniform(tmp_path):
    path = write_text(tmp_path / "sig.csv", "t,re,im\n0,1,0\n1,0,0\n2.5,1,0\n")
    with pytest.raises(NonUniformGrid):
        read_signal_csv(path)


def test_read_signal_csv_header_only(tmp_path):
    path = write_text(tmp_path / "sig.csv", "t,re,im\n")
    with pytest.raises(TooShort):
        read_signal_csv(path)


@pytest.mark.parametrize("text, line", [
    ("t,re,im\n0,1,0\n1,abc,0\n2,1,0\n", 3),
    ("t,re,im\n0,1,0\n\n1,abc,0\n2,1,0\n", 4),
    ("t,re,im\n0,1,0\n1,0,0\n\n\n2,1\n", 6),
    ("t,re,im\n0,1,0\n1,0,0\n2,1\n", 4),
    ("t,re,im\n0,1,0\n1,0,0\n2,1,0,7\n", 4),
    ("time,re,im\n0,1,0\n1,0,0\n", 1),
    ("", 1),
])
def test_read_signal_csv_parse_errors(tmp_path, text, line):
    path = write_text(tmp_path / "sig.csv", text)
    with pytest.raises(ParseError) as info:
        read_signal_csv(path)
    assert info.value.line == line


def test_read_missing_file(tmp_path):
    with pytest.raises(CsvIoError):
        read_signal_csv(tmp_path / "nope.csv")


def test_write_spectrum_csv_single_bin(tmp_path, default_conv):
    spectrum = Spectrum(grid=UniformGrid(start=0, spacing=1, count=1), values=[1], convention=default_conv)
    path = tmp_path / "spec.csv"
    write_spectrum_csv(spectrum, path)
    assert path.read_text() == "omega,re,im\n0,1,0\n"


def test_write_then_read_is_bit_exact(tmp_path, rng, default_conv):
    grid = UniformGrid(start=-3, spacing=0.5, count=13)
    spectrum = Spectrum(grid=grid, values=random_complex(rng, 13), convention=default_conv)
    path = tmp_path / "spec.csv"
    write_spectrum_csv(spectrum, path)
    again = read_spectrum_csv(path, default_conv)
    assert np.array_equal(again.values, spectrum.values)
    frame = pd.read_csv(path, float_precision="round_trip")
    assert np.array_equal(frame["omega"].to_numpy(), grid.points())


def test_writers_are_deterministic(tmp_path, rng):
    signal = SampledSignal(grid=UniformGrid(start=0, spacing=0.1, count=20), values=random_complex(rng, 20))
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    write_signal_csv(signal, first)
    write_signal_csv(signal, second)
    assert first.read_bytes() == second.read_bytes()


# CLI

@pytest.fixture
def signal_file(tmp_path, rng):
    grid = UniformGrid(start=-8.0, spacing=0.5, count=33)
    signal = SampledSignal(grid=grid, values=random_complex(rng, 33))
    path = tmp_path / "sig.csv"
    write_signal_csv(signal, path)
    return path, signal


def test_cli_forward_then_inverse(tmp_path, signal_file):
    path, signal = signal_file
    spec_path, back_path = tmp_path / "spec.csv", tmp_path / "back.csv"

    assert cli_main(["forward", "--in", str(path), "--out", str(spec_path)]) == 0
    assert cli_main(["inverse", "--in", str(spec_path), "--out", str(back_path), "--t-start", "-8"]) == 0

    back = read_signal_csv(back_path)
    assert_allclose(back.values, signal.values, rtol=0, atol=1e-9)
    assert_allclose(back.grid.points(), signal.grid.points(), atol=1e-9)


def test_cli_forward_center_nyquist(tmp_path, signal_file):
    path, _ = signal_file
    out = tmp_path / "spec.csv"
    assert cli_main(["forward", "--in", str(path), "--out", str(out), "--center-nyquist"]) == 0
    omegas = pd.read_csv(out)["omega"].to_numpy()
    W = 2 * np.pi / (0.5 * 33)
    assert omegas[0] == pytest.approx(-16 * W)
    assert omegas[16] == pytest.approx(0, abs=1e-12)


@pytest.mark.parametrize("conv_args", [[], ["--a", "1", "--b", "6.283185307179586"], ["--b", "2"]])
def test_cli_compare_passes(signal_file, capsys, conv_args):
    path, _ = signal_file
    assert cli_main(["compare", "--in", str(path), *conv_args]) == 0
    assert "desvio máximo" in capsys.readouterr().out


def test_cli_off_lattice_start(tmp_path, signal_file, capsys):
    path, _ = signal_file
    code = cli_main(["forward", "--in", str(path), "--out", str(tmp_path / "x.csv"), "--omega-start", "0.1234"])
    assert code == 1
    err = capsys.readouterr().err.strip()
    assert err.startswith("erro: OffGridStart")
    assert len(err.splitlines()) == 1


def test_cli_module_errors_exit_1(tmp_path, capsys):
    path = write_text(tmp_path / "sig.csv", "t,re,im\n0,1,0\n1,0,0\n2.5,1,0\n")
    assert cli_main(["compare", "--in", str(path)]) == 1
    assert "NonUniformGrid" in capsys.readouterr().err
    assert cli_main(["compare", "--in", str(path), "--b", "0"]) == 1


@pytest.mark.parametrize("argv", [[], ["transmogrify"], ["forward", "--out", "x.csv"], ["demo", "fig9", "--out", "p"]])
def test_cli_usage_errors_exit_2(argv):
    assert cli_main(argv) == 2


def test_cli_demo_fig2(tmp_path):
    prefix = str(tmp_path / "fig2")
    assert cli_main(["demo", "fig2", "--out", prefix]) == 0

    signal = pd.read_csv(f"{prefix}_signal.csv")
    spectrum = pd.read_csv(f"{prefix}_spectrum.csv")
    analytic = pd.read_csv(f"{prefix}_analytic.csv")
    assert len(signal) == len(spectrum) == len(analytic) == 201
    assert np.array_equal(spectrum["omega"], analytic["omega"])

    band = spectrum["omega"].abs() <= 2
    delta = np.hypot(spectrum["re"] - analytic["re"], spectrum["im"] - analytic["im"])
    assert delta[band].max() <= 1e-2


def test_cli_demo_fig2_refuses_other_conventions(tmp_path, capsys):
    assert cli_main(["demo", "fig2", "--out", str(tmp_path / "p"), "--b", "1"]) == 1
    assert "UnsupportedConvention" in capsys.readouterr().err


def test_cli_demo_fig1(tmp_path):
    prefix = str(tmp_path / "fig1")
    assert cli_main(["demo", "fig1", "--out", prefix]) == 0
    dft = pd.read_csv(f"{prefix}_dft.csv")
    assert list(dft.columns) == ["k", "magnitude"]
    assert len(dft) == 201
    assert dft["k"].iloc[0] == 1
    assert len(pd.read_csv(f"{prefix}_spectrum.csv")) == 201


def test_cli_bench(tmp_path):
    out = tmp_path / "bench.csv"
    code = cli_main(["bench", "--sizes", "64,128", "--reps", "3", "--include-naive", "--out", str(out)])
    assert code == 0
    records = pd.read_csv(out)
    assert list(records.columns) == ["n", "method", "seconds", "repetitions"]
    assert set(records["method"]) == {"riemann_fft", "bare_fft", "riemann_naive"}
    ratios = pd.read_csv(tmp_path / "bench_ratios.csv")
    assert list(ratios["n"]) == [64, 128]


def test_cli_bench_rejects_bad_sizes():
    assert cli_main(["bench", "--sizes", "64,x", "--out", "b.csv"]) == 2
