"""Finite-dimensional time-frequency primitives.

All signals live in C^d and phase space is the d x d cyclic grid with cell
measure 1/d, so every continuous identity (Moyal, trace formulas, entropy
bounds) holds exactly up to floating round-off.  Grid index (m, n) maps to
the continuous point z = (m/sqrt(d), n/sqrt(d)); both axes wrap modulo d.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import eval_hermite


@dataclass(frozen=True)
class PhaseGrid:
    """The d x d discretized phase space with cell measure 1/d."""

    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension must be positive, got {self.d}")

    @property
    def cell_measure(self) -> float:
        return 1.0 / self.d

    @property
    def cell_side(self) -> float:
        return 1.0 / np.sqrt(self.d)

    @property
    def total_measure(self) -> float:
        # d^2 cells of measure 1/d each
        return float(self.d)

    def signed_indices(self) -> np.ndarray:
        """Indices 0..d-1 remapped to the centered range [-d/2, d/2)."""
        k = np.arange(self.d)
        return np.where(k < self.d - k, k, k - self.d)

    def coords(self) -> tuple[np.ndarray, np.ndarray]:
        """Centered continuous coordinates of the cells, shape (d, d) each."""
        c = self.signed_indices() / np.sqrt(self.d)
        return np.meshgrid(c, c, indexing="ij")


def _check_signal(f: np.ndarray, d: int | None = None) -> np.ndarray:
    f = np.asarray(f)
    if f.ndim != 1:
        raise ValueError(f"signal must be 1-d, got shape {f.shape}")
    if d is not None and len(f) != d:
        raise ValueError(f"dimension mismatch: signal has length {len(f)}, expected {d}")
    return f


def tf_shift(f: np.ndarray, z: tuple[int, int]) -> np.ndarray:
    """Apply the time-frequency shift pi(z) for z = (m, n).

    pi(m, n) f(x) = exp(2 pi i x n / d) * f(x - m mod d).  Unitary, so the
    norm is preserved exactly up to round-off.
    """
    f = _check_signal(f)
    d = len(f)
    m, n = z
    x = np.arange(d)
    return np.exp(2j * np.pi * x * (n % d) / d) * np.roll(f, m % d)


def stft(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Short-time Fourier transform of f with window g.

    V[m, n] = sum_x f(x) conj(g(x - m)) exp(-2 pi i x n / d), i.e. row m is
    the length-d DFT of x -> f(x) conj(g(x - m)).  Satisfies the Moyal
    identity (1/d) sum |V|^2 = |f|^2 |g|^2.
    """
    f = _check_signal(f)
    g = _check_signal(g, len(f))
    d = len(f)
    # rows: all cyclic lags of the window at once
    idx = (np.arange(d)[None, :] - np.arange(d)[:, None]) % d
    prod = f[None, :] * np.conj(g[idx])
    return np.fft.fft(prod, axis=1)


def spectrogram(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """|V_g f|^2 as a real non-negative grid function."""
    V = stft(f, g)
    return (V * np.conj(V)).real


def grid_integrate(F: np.ndarray) -> complex | float:
    """Phase-space integral of a grid function: cell_measure * sum."""
    F = np.asarray(F)
    if F.ndim != 2 or F.shape[0] != F.shape[1]:
        raise ValueError(f"grid function must be square 2-d, got shape {F.shape}")
    val = F.sum() / F.shape[0]
    return float(val) if np.isrealobj(F) else complex(val)


def grid_convolve(F: np.ndarray, G: np.ndarray) -> np.ndarray:
    """Cyclic convolution of grid functions with cell-measure weighting.

    (F * G)(z) = (1/d) sum_{z'} F(z') G(z - z'), computed by 2-d FFT.
    """
    F = np.asarray(F)
    G = np.asarray(G)
    if F.shape != G.shape:
        raise ValueError(f"shape mismatch: {F.shape} vs {G.shape}")
    d = F.shape[0]
    out = np.fft.ifft2(np.fft.fft2(F) * np.fft.fft2(G)) / d
    if np.isrealobj(F) and np.isrealobj(G):
        out = out.real
    return out


def grid_reflect(F: np.ndarray) -> np.ndarray:
    """F(-z) on the cyclic grid: index v maps to (d - v) mod d on both axes."""
    F = np.asarray(F)
    return np.roll(np.flip(F, axis=(0, 1)), 1, axis=(0, 1))


def gaussian_window(d: int) -> np.ndarray:
    """Unit-norm periodized Gaussian 2^{1/4} exp(-pi x^2), x = (j - d/2)/sqrt(d)."""
    if d < 4:
        raise ValueError(f"need d >= 4, got {d}")
    x = (np.arange(d) - d / 2) / np.sqrt(d)
    g = np.zeros(d)
    for k in range(-3, 4):
        g += 2 ** 0.25 * np.exp(-np.pi * (x + k * np.sqrt(d)) ** 2)
    g = g.astype(complex)
    return g / np.linalg.norm(g)


def hermite(d: int, n: int) -> np.ndarray:
    """Sampled Hermite function of order n, re-orthonormalized.

    Samples H_n(sqrt(2 pi) x) exp(-pi x^2) on the centered grid, then
    Gram-Schmidts against orders 0..n-1 so the family is exactly
    orthonormal in C^d.
    """
    if not 0 <= n < d:
        raise ValueError(f"order must satisfy 0 <= n < d, got n={n}, d={d}")
    return _hermite_family(d, n)[:, n]


def _hermite_family(d: int, n_max: int) -> np.ndarray:
    """Columns 0..n_max of sampled, Gram-Schmidted Hermite functions."""
    if d < 4:
        raise ValueError(f"need d >= 4, got {d}")
    x = (np.arange(d) - d / 2) / np.sqrt(d)
    cols = np.empty((d, n_max + 1), dtype=complex)
    for k in range(n_max + 1):
        h = eval_hermite(k, np.sqrt(2 * np.pi) * x) * np.exp(-np.pi * x**2)
        cols[:, k] = h
    # QR gives exactly the Gram-Schmidt orthonormalization of the columns
    q, r = np.linalg.qr(cols)
    # fix signs so each function matches the raw sample's orientation
    signs = np.sign(np.diag(r).real)
    signs[signs == 0] = 1.0
    return q * signs[None, :]
