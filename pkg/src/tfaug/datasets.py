"""Generators for the signal families used in the experiments.

Every generator is a deterministic function of its parameters and seed, and
returns a DataSet whose squared norms sum to one.
"""

from dataclasses import dataclass

import numpy as np
from scipy.signal.windows import barthann

from .operators import HermitianOperator, tensor_product
from .tf_core import gaussian_window, tf_shift


@dataclass(frozen=True)
class DataSet:
    """A list of equal-length signals with the provenance of its generator."""

    signals: tuple
    seed: int | None = None
    label: str = ""

    def __post_init__(self):
        if len(self.signals) == 0:
            raise ValueError("dataset must be nonempty")
        sigs = tuple(np.asarray(s, dtype=complex) for s in self.signals)
        d = len(sigs[0])
        for s in sigs:
            if s.ndim != 1 or len(s) != d:
                raise ValueError("all signals must share one dimension")
        object.__setattr__(self, "signals", sigs)

    @property
    def d(self) -> int:
        return len(self.signals[0])

    def __len__(self) -> int:
        return len(self.signals)

    def as_matrix(self) -> np.ndarray:
        """Signals stacked as rows, shape (N, d)."""
        return np.stack(self.signals)

    def total_energy(self) -> float:
        return float(sum(np.sum(np.abs(s) ** 2) for s in self.signals))


def normalize_dataset(dataset: DataSet) -> DataSet:
    """Globally rescale so the squared norms sum to one."""
    total = dataset.total_energy()
    if total <= 0:
        raise ValueError("cannot normalize an all-zero dataset")
    scale = total**-0.5
    return DataSet(
        tuple(scale * s for s in dataset.signals), dataset.seed, dataset.label
    )


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def gen_chirps(
    N: int,
    d: int = 280,
    seed: int = 0,
    rate_range: tuple[float, float] = (0.0, 20.0),
    freq_mean: float = 50.0,
    freq_band: tuple[float, float] = (30.0, 65.0),
    freq_std: float = 10.0,
) -> DataSet:
    """Time-localized analytic chirps under rotated Bartlett-Hanning envelopes.

    The d samples are read as one second at d Hz; base frequencies are
    normal around freq_mean, redrawn until they land in freq_band, and the
    sweep rate is uniform in rate_range (Hz per second).
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    lo, hi = rate_range
    if hi < lo:
        raise ValueError(f"invalid rate_range {rate_range}")
    rng = _rng(seed)
    t = np.arange(d) / d
    env = barthann(d, sym=False)
    signals = []
    for _ in range(N):
        f0 = rng.normal(freq_mean, freq_std)
        while not freq_band[0] <= f0 <= freq_band[1]:
            f0 = rng.normal(freq_mean, freq_std)
        rate = rng.uniform(lo, hi)
        shift = rng.integers(0, d)
        chirp = np.exp(2j * np.pi * (f0 * t + 0.5 * rate * t**2))
        signals.append(chirp * np.roll(env, shift))
    ds = DataSet(tuple(signals), seed, f"chirps(N={N},d={d})")
    return normalize_dataset(ds)


def gen_hermite_pair_state(t: float, g: np.ndarray, h: np.ndarray) -> HermitianOperator:
    """Interpolated two-state operator (1-t) g(x)g + t h(x)h, trace one."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    for v in (g, h):
        if abs(np.linalg.norm(v) - 1.0) > 1e-8:
            raise ValueError("g and h must be unit vectors")
    return HermitianOperator((1 - t) * tensor_product(g, g) + t * tensor_product(h, h))


def _near_origin_cells(d: int, spread: float) -> np.ndarray:
    """Grid cells whose centered phase coordinates lie within radius spread."""
    k = np.arange(d)
    signed = np.where(k < d - k, k, k - d) / np.sqrt(d)
    mm, nn = np.meshgrid(signed, signed, indexing="ij")
    sel = mm**2 + nn**2 <= spread**2
    return np.argwhere(sel)


def gen_local_components(
    N: int,
    d: int = 128,
    noise_energy: float = 0.0,
    spread: float = 0.5,
    seed: int = 0,
    window: np.ndarray | None = None,
    random_coeffs: bool = False,
) -> DataSet:
    """Signals f_i = c_i pi(z_i) g + noise, with the noise orthogonal to the
    shifted window and carrying a fixed energy fraction.

    spread is either a radius in phase units (cells around the origin) or an
    explicit sequence of (m, n) index pairs.  With random_coeffs the local
    component's phase is randomized; its energy share stays 1 - noise_energy.
    """
    if not 0.0 <= noise_energy < 1.0:
        raise ValueError(f"noise_energy must lie in [0, 1), got {noise_energy}")
    rng = _rng(seed)
    g = gaussian_window(d) if window is None else np.asarray(window, dtype=complex)
    if np.isscalar(spread):
        cells = _near_origin_cells(d, float(spread))
    else:
        cells = np.asarray(spread, dtype=int).reshape(-1, 2)
    if len(cells) == 0:
        raise ValueError("spread selects no grid cells")
    signals = []
    for _ in range(N):
        z = tuple(cells[rng.integers(0, len(cells))])
        atom = tf_shift(g, z)
        c = (1 - noise_energy) ** 0.5
        if random_coeffs:
            c *= np.exp(2j * np.pi * rng.uniform())
        f = c * atom
        if noise_energy > 0:
            noise = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            noise -= np.vdot(atom, noise) * atom / np.vdot(atom, atom)
            noise *= (noise_energy**0.5) / np.linalg.norm(noise)
            f = f + noise
        signals.append(f)
    ds = DataSet(tuple(signals), seed, f"local_components(N={N},d={d},noise={noise_energy})")
    return normalize_dataset(ds)


def default_tf_weight(z: np.ndarray) -> np.ndarray:
    """Radial weight sin(2 pi r) / (1 + r)^2 on phase-space distance r."""
    r = np.abs(z)
    return np.sin(2 * np.pi * r) * (1 + r) ** -2.0


def gen_random_tf_weighted(
    N: int,
    d: int = 128,
    seed: int = 0,
    weight_fn=default_tf_weight,
    max_radius: float = 4.0,
) -> DataSet:
    """Random lattice combinations with a common time-frequency weight.

    Each signal is sum_l c_l w(l) pi(l) g over the integer lattice (spacing
    one phase unit) within max_radius of the origin, with uniform random
    complex coefficients c_l.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    rng = _rng(seed)
    g = gaussian_window(d)
    sqd = np.sqrt(d)
    half = int(max_radius)
    lattice = []
    for a in range(-half, half + 1):
        for b in range(-half, half + 1):
            if a * a + b * b <= max_radius**2:
                lattice.append((a, b))
    atoms = []
    weights = []
    for a, b in lattice:
        z_idx = (int(round(a * sqd)) % d, int(round(b * sqd)) % d)
        atoms.append(tf_shift(g, z_idx))
        weights.append(float(weight_fn(np.hypot(a, b))))
    atoms = np.stack(atoms)
    weights = np.asarray(weights)
    coeffs = rng.uniform(size=(N, len(lattice))) * np.exp(
        2j * np.pi * rng.uniform(size=(N, len(lattice)))
    )
    signals = (coeffs * weights[None, :]) @ atoms
    ds = DataSet(tuple(signals), seed, f"tf_weighted(N={N},d={d})")
    return normalize_dataset(ds)


def gen_gaussian_combos(
    N: int,
    d: int = 128,
    M_rect: tuple[float, float] = (2.1875, 0.3125),
    n_atoms: int = 3,
    seed: int = 0,
) -> DataSet:
    """Random combinations of time-frequency shifted Gaussians from a small
    rectangle M (phase units, centered at the origin).

    Atom positions are drawn from the integer lattice intersected with M;
    coefficients are uniform random complex numbers.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    w, h = M_rect
    rng = _rng(seed)
    g = gaussian_window(d)
    sqd = np.sqrt(d)
    lattice = [
        (a, b)
        for a in range(-int(w / 2), int(w / 2) + 1)
        for b in range(-int(h / 2), int(h / 2) + 1)
    ]
    if not lattice:
        raise ValueError(f"no lattice points inside rectangle {M_rect}")
    atoms = np.stack(
        [
            tf_shift(g, (int(round(a * sqd)) % d, int(round(b * sqd)) % d))
            for a, b in lattice
        ]
    )
    signals = []
    for _ in range(N):
        picks = rng.integers(0, len(lattice), size=n_atoms)
        c = rng.uniform(size=n_atoms) * np.exp(2j * np.pi * rng.uniform(size=n_atoms))
        signals.append(c @ atoms[picks])
    ds = DataSet(tuple(signals), seed, f"gaussian_combos(N={N},d={d})")
    return normalize_dataset(ds)
