"""
Par DFT na convenção usada pelas transformadas de Riemann:

    X_k = Σ_j x_j e^{−2πi(j−1)(k−1)/N}
    x_j = (1/N) Σ_k X_k e^{+2πi(j−1)(k−1)/N}

`dft_naive`/`idft_naive` são o oráculo O(N²); `fft`/`ifft` usam numpy.fft,
que aceita N arbitrário (pocketfft, com Bluestein para fatores primos grandes)
e já segue essa convenção de sinal e normalização.
"""
import numpy as np
import numpy.typing as npt

ComplexSeq = npt.NDArray[np.complex128]


def _as_complex_seq(x) -> ComplexSeq:
    arr = np.asarray(x, dtype=np.complex128).reshape(-1)
    if arr.size < 1:
        raise ValueError("sequência vazia")
    if not np.all(np.isfinite(arr)):
        raise ValueError("sequência com valores não finitos")
    return arr


def _twiddle_matrix(n: int, sign: int) -> np.ndarray:
    # ângulo avaliado direto a partir de (j·k mod N), sem potências acumuladas
    idx = np.arange(n)
    exponent = np.outer(idx, idx) % n
    return np.exp(sign * 2j * np.pi * exponent / n)


def dft_naive(x) -> ComplexSeq:
    """DFT pela soma direta (forma matricial), O(N²)"""
    arr = _as_complex_seq(x)
    return _twiddle_matrix(arr.size, -1) @ arr


def idft_naive(X) -> ComplexSeq:
    """DFT inversa pela soma direta, O(N²)"""
    arr = _as_complex_seq(X)
    return (_twiddle_matrix(arr.size, +1) @ arr) / arr.size


def fft(x) -> ComplexSeq:
    return np.fft.fft(_as_complex_seq(x))


def ifft(X) -> ComplexSeq:
    return np.fft.ifft(_as_complex_seq(X))
