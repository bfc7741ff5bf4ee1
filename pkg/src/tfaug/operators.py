"""Operator algebra: tensor products, data operators, operator convolutions,
Cohen's class, total correlation and spectral decomposition.

Operators are dense d x d complex matrices.  The two convolutions are

    F (x) S  -> operator:  (1/d) sum_z F(z) pi(z) S pi(z)^*
    S (x) T  -> function:  z -> tr(S pi(z) PTP pi(z)^*)

with P the parity f(x) -> f(-x mod d).  Both are evaluated with FFT-based
O(d^2 log d) / O(d^3) routines; the direct summation definitions are kept
as oracles in the test suite.
"""

from dataclasses import dataclass, field

import numpy as np

from .tf_core import tf_shift


@dataclass(frozen=True)
class HermitianOperator:
    """A d x d Hermitian matrix, symmetrized on construction."""

    matrix: np.ndarray
    hermiticity_defect: float = field(init=False)

    def __post_init__(self):
        A = np.asarray(self.matrix, dtype=complex)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"operator must be square, got shape {A.shape}")
        defect = float(np.max(np.abs(A - A.conj().T))) if A.size else 0.0
        scale = float(np.max(np.abs(A))) if A.size else 0.0
        if defect > 1e-10 * max(scale, 1.0):
            raise ValueError(f"matrix is not Hermitian: defect {defect:.3e}")
        sym = 0.5 * (A + A.conj().T)
        sym.setflags(write=False)
        object.__setattr__(self, "matrix", sym)
        object.__setattr__(self, "hermiticity_defect", defect)

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues sorted descending with orthonormal eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    clamp_tolerance: float

    def reconstruct(self) -> np.ndarray:
        V = self.eigenvectors
        return (V * self.eigenvalues[None, :]) @ V.conj().T


def tensor_product(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Rank-one operator f (x) g: h -> <h, g> f, i.e. the matrix f g^*."""
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    if f.shape != g.shape or f.ndim != 1:
        raise ValueError(f"need equal-length vectors, got {f.shape} and {g.shape}")
    return np.outer(f, g.conj())


def data_operator(dataset) -> HermitianOperator:
    """S = sum_i f_i (x) f_i for a normalized dataset (trace 1)."""
    X = dataset.as_matrix()  # (N, d)
    norms_sq = float(np.sum(np.abs(X) ** 2))
    if abs(norms_sq - 1.0) > 1e-8:
        raise ValueError(
            f"dataset is not normalized: sum of squared norms is {norms_sq:.6g}"
        )
    return HermitianOperator(X.T @ X.conj())


def spectral_decompose(A: HermitianOperator, clamp_tolerance: float = 1e-10) -> SpectralDecomposition:
    """Eigendecomposition with descending eigenvalues and deterministic phases.

    Eigenvalues in [-clamp_tolerance * ||A||, 0) are clamped to zero; each
    eigenvector is phase-rotated so its largest-modulus component is real
    and positive, which makes results reproducible across runs.
    """
    M = A.matrix
    w, V = np.linalg.eigh(M)
    order = np.argsort(w, kind="stable")[::-1]
    w = w[order]
    V = V[:, order]
    scale = max(float(np.max(np.abs(w))), 1.0) if w.size else 1.0
    clamp = clamp_tolerance * scale
    w = np.where((w < 0) & (w >= -clamp), 0.0, w)
    for k in range(V.shape[1]):
        j = int(np.argmax(np.abs(V[:, k])))
        phase = V[j, k] / abs(V[j, k])
        V[:, k] = V[:, k] / phase
    return SpectralDecomposition(w, V, clamp_tolerance)


def operator_shift(S: np.ndarray | HermitianOperator, z: tuple[int, int]) -> np.ndarray:
    """alpha_z(S) = pi(z) S pi(z)^*; unitary conjugation, spectrum invariant."""
    M = S.matrix if isinstance(S, HermitianOperator) else np.asarray(S, dtype=complex)
    d = M.shape[0]
    m, n = z[0] % d, z[1] % d
    x = np.arange(d)
    phase = np.exp(2j * np.pi * x * n / d)
    shifted = np.roll(M, (m, m), axis=(0, 1))
    return phase[:, None] * shifted * phase.conj()[None, :]


def _as_matrix(S) -> np.ndarray:
    return S.matrix if isinstance(S, HermitianOperator) else np.asarray(S, dtype=complex)


def parity(f: np.ndarray) -> np.ndarray:
    """P f(x) = f(-x mod d)."""
    return np.roll(np.asarray(f)[::-1], 1)


def operator_parity(S) -> np.ndarray:
    """S-check = P S P, reflecting both indices through the origin."""
    M = _as_matrix(S)
    return np.roll(np.flip(M, axis=(0, 1)), 1, axis=(0, 1))


def fn_op_convolve(F: np.ndarray, S) -> HermitianOperator:
    """Convolution of a real grid function with an operator.

    F (x) S = (1/d) sum_{m,n} F(m,n) alpha_{(m,n)}(S).  Positive for F >= 0
    and S positive; tr(F (x) S) = grid_integrate(F) tr(S).

    Grouping the frequency sum per time lag m gives
    (F (x) S)[x, y] = (1/d) sum_m W_m(x - y) S[x - m, y - m] with W_m the
    inverse DFT of row m of F, an O(d^3) evaluation.
    """
    F = np.asarray(F)
    M = _as_matrix(S)
    d = M.shape[0]
    if F.shape != (d, d):
        raise ValueError(f"grid shape {F.shape} does not match operator size {d}")
    if not np.isrealobj(F):
        raise ValueError("grid function must be real")
    W = np.fft.ifft(F, axis=1) * d  # W[m, t] = sum_n F[m, n] exp(2 pi i n t / d)
    diff = (np.arange(d)[:, None] - np.arange(d)[None, :]) % d  # (x - y) mod d
    out = np.zeros((d, d), dtype=complex)
    for m in range(d):
        out += W[m][diff] * np.roll(M, (m, m), axis=(0, 1))
    out /= d
    return HermitianOperator(out)


def op_op_convolve(S, T) -> np.ndarray:
    """Convolution of two operators, yielding a grid function.

    (S (x) T)(z) = tr(S alpha_z(T-check)).  Real for Hermitian inputs,
    non-negative for positive inputs, and integrates to tr(S) tr(T).
    Evaluated per generalized diagonal via FFT cross-correlations.
    """
    A = _as_matrix(S)
    B = operator_parity(T)
    d = A.shape[0]
    if B.shape[0] != d:
        raise ValueError(f"dimension mismatch: {d} vs {B.shape[0]}")
    # tr(A alpha_{(m,n)}(B)) = sum_u e^{2 pi i n u / d} C[u, m] with
    # C[u, m] = sum_x A[x, x+u] B[x+u-m, x-m]: a lag-m cross-correlation of
    # the u-th generalized diagonals of A and B.
    rows = np.arange(d)
    DA = np.empty((d, d), dtype=complex)  # DA[u, x] = A[x, x+u]
    DB = np.empty((d, d), dtype=complex)  # DB[u, t] = B[t+u, t]
    for u in range(d):
        DA[u] = A[rows, (rows + u) % d]
        DB[u] = B[(rows + u) % d, rows]
    C = np.fft.ifft(
        np.fft.fft(DA, axis=1) * np.conj(np.fft.fft(np.conj(DB), axis=1)), axis=1
    )
    # out[m, n] = sum_u C[u, m] e^{2 pi i n u / d}
    out = np.fft.ifft(C, axis=0).T * d
    if _is_hermitian(A) and _is_hermitian(B):
        out = np.ascontiguousarray(out.real)
    return out


def _is_hermitian(M: np.ndarray) -> bool:
    scale = max(float(np.max(np.abs(M))), 1e-300)
    return float(np.max(np.abs(M - M.conj().T))) < 1e-10 * scale


def total_correlation(S, rank_cut: float = 1e-10) -> np.ndarray:
    """Total correlation function S-tilde = S (x) S-check.

    For a data operator, S-tilde(z) = sum_{i,j} |V_{f_i} f_j (z)|^2.  The
    spectral decomposition of S is truncated at rank_cut times the largest
    eigenvalue and the truncated operator is convolved with its own parity
    reflection; the O(N^2) double-STFT sum is the test oracle.

    Non-negative, integrates to tr(S)^2 = 1, and S-tilde(0) = tr(S^2).
    """
    A = S if isinstance(S, HermitianOperator) else HermitianOperator(S)
    dec = spectral_decompose(A)
    w = dec.eigenvalues
    if w.size and w[-1] < -dec.clamp_tolerance * max(abs(w[0]), 1.0):
        raise ValueError(f"operator is not positive: min eigenvalue {w[-1]:.3e}")
    if rank_cut > 0 and w.size:
        keep = w >= rank_cut * w[0]
        V = dec.eigenvectors[:, keep]
        M = (V * w[keep][None, :]) @ V.conj().T
    else:
        M = A.matrix
    out = op_op_convolve(M, operator_parity(M))
    return np.maximum(out.real, 0.0)


def cohen_class(S, f: np.ndarray) -> np.ndarray:
    """Cohen's class distribution Q_S(f) = S-check (x) (f (x) f).

    For S = g (x) g this is the spectrogram |V_g f|^2; for a data operator
    it equals sum_i |V_{f_i} f|^2.  Integrates to tr(S) ||f||^2.
    """
    Sc = operator_parity(S)
    out = op_op_convolve(Sc, tensor_product(f, f))
    return np.maximum(np.asarray(out).real, 0.0)


def conv_layer_identity(f: np.ndarray, g: np.ndarray, m: np.ndarray):
    """First-convolutional-layer identity, both routes.

    lhs: cyclic grid convolution of the spectrogram |V_g f|^2 with kernel m.
    rhs: the operator route [m (x) (f (x) f)] (x) (g-check (x) g-check).
    Returns (lhs, rhs, max abs difference); the agreement of the two routes
    is itself the correctness oracle.
    """
    from .tf_core import grid_convolve, spectrogram

    F0 = spectrogram(f, g)
    lhs = grid_convolve(F0, np.asarray(m, dtype=float))
    gc = parity(g)
    inner = fn_op_convolve(np.asarray(m, dtype=float), tensor_product(f, f))
    rhs = np.asarray(op_op_convolve(inner, tensor_product(gc, gc))).real
    return lhs, rhs, float(np.max(np.abs(lhs - rhs)))
