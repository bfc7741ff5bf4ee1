"""Phase-space domains and data augmentation by time-frequency shifts.

A Domain is a boolean cell mask on the torus grid.  Augmenting a dataset
over a domain Omega averages the operator-shifted data operator over the
cells of Omega; dividing by the measure |Omega| gives a trace-one operator
again.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .datasets import DataSet
from .operators import (
    HermitianOperator,
    fn_op_convolve,
    spectral_decompose,
)
from .tf_core import PhaseGrid, tf_shift


@dataclass(frozen=True)
class Domain:
    """Boolean mask on the phase grid with measure and discrete perimeter."""

    mask: np.ndarray
    descriptor: dict = field(default_factory=dict)

    def __post_init__(self):
        mask = np.asarray(self.mask, dtype=bool)
        if mask.ndim != 2 or mask.shape[0] != mask.shape[1]:
            raise ValueError(f"mask must be square 2-d, got shape {mask.shape}")
        mask.setflags(write=False)
        object.__setattr__(self, "mask", mask)

    @property
    def d(self) -> int:
        return self.mask.shape[0]

    @property
    def n_cells(self) -> int:
        return int(self.mask.sum())

    @property
    def measure(self) -> float:
        """|Omega| = (number of cells) * cell measure."""
        return self.n_cells / self.d

    @property
    def perimeter(self) -> float:
        """Boundary edges (4-neighborhood, cyclic) times the cell side."""
        m = self.mask
        edges = 0
        for axis in (0, 1):
            edges += int(np.sum(m != np.roll(m, 1, axis=axis)))
        return edges / math.sqrt(self.d)

    def cells(self) -> np.ndarray:
        """Indices (m, n) of the cells in the domain, shape (n_cells, 2)."""
        return np.argwhere(self.mask)

    def indicator(self) -> np.ndarray:
        """chi_Omega as a real grid function."""
        return self.mask.astype(float)

    def to_json_dict(self) -> dict:
        return {"d": self.d, **self.descriptor}


def make_rect_domain(
    grid: PhaseGrid | int,
    width: float,
    height: float,
    center: tuple[float, float] = (0.0, 0.0),
) -> Domain:
    """Axis-aligned rectangle in phase units, cyclically embedded.

    Selects the cells whose centers lie in the closed rectangle of the given
    width (time axis) and height (frequency axis) around center.
    """
    grid = grid if isinstance(grid, PhaseGrid) else PhaseGrid(grid)
    d = grid.d
    if width <= 0 or height <= 0:
        raise ValueError("width and height must be positive")
    side = math.sqrt(d)
    if width > side or height > side:
        raise ValueError(
            f"rectangle {width} x {height} exceeds the torus side {side:.4g}"
        )
    c = grid.signed_indices() / side

    def _axis_mask(extent, center_coord):
        delta = (c - center_coord + side / 2) % side - side / 2
        return np.abs(delta) <= extent / 2 + 1e-12

    tm = _axis_mask(width, center[0])
    fm = _axis_mask(height, center[1])
    mask = tm[:, None] & fm[None, :]
    return Domain(
        mask,
        {"shape": "rect", "width": width, "height": height, "center": list(center)},
    )


def make_cells_domain(grid: PhaseGrid | int, cells) -> Domain:
    """Domain from an explicit list of (m, n) cell indices."""
    grid = grid if isinstance(grid, PhaseGrid) else PhaseGrid(grid)
    mask = np.zeros((grid.d, grid.d), dtype=bool)
    for m, n in cells:
        mask[m % grid.d, n % grid.d] = True
    kept = [[int(m), int(n)] for m, n in np.argwhere(mask)]
    return Domain(mask, {"shape": "cells", "cells": kept})


def full_domain(grid: PhaseGrid | int) -> Domain:
    grid = grid if isinstance(grid, PhaseGrid) else PhaseGrid(grid)
    return Domain(np.ones((grid.d, grid.d), dtype=bool), {"shape": "full"})


def scale_domain(domain: Domain, factor: float) -> Domain:
    """Rescale a rectangle domain's side lengths by factor."""
    desc = domain.descriptor
    if desc.get("shape") != "rect":
        raise ValueError("only rectangle domains can be scaled")
    return make_rect_domain(
        PhaseGrid(domain.d),
        desc["width"] * factor,
        desc["height"] * factor,
        tuple(desc.get("center", (0.0, 0.0))),
    )


def mixed_state_localization(domain: Domain, S) -> HermitianOperator:
    """chi_Omega (x) S: the operator of the Omega-augmented dataset.

    Positive with trace |Omega| and eigenvalues in [0, 1] for positive
    trace-one S.
    """
    if domain.n_cells == 0:
        raise ValueError("domain is empty")
    return fn_op_convolve(domain.indicator(), S)


def finite_rank_approx(domain: Domain, S):
    """Rank-ceil(|Omega|) projection approximant of chi_Omega (x) S.

    Returns (T_Omega, A_Omega, trace-norm error).  T_Omega projects onto the
    top A_Omega eigenvectors; the trace-norm error of chi_Omega (x) S minus
    T_Omega is sum_{k <= A}(1 - lambda_k) + sum_{k > A} lambda_k.
    """
    loc = mixed_state_localization(domain, S)
    dec = spectral_decompose(loc)
    A_omega = int(math.ceil(domain.measure - 1e-12))
    w = dec.eigenvalues
    V = dec.eigenvectors[:, :A_omega]
    T = HermitianOperator(V @ V.conj().T)
    err = float(np.sum(1.0 - w[:A_omega]) + np.sum(w[A_omega:]))
    return T, A_omega, err


def augment_dataset(domain: Domain, dataset: DataSet, max_signals: int = 200_000) -> DataSet:
    """Materialize the Omega-augmented dataset on the grid.

    D_Omega = {(|Omega| d)^{-1/2} pi(mu) f_i : mu a cell of Omega}.  Its data
    operator equals mixed_state_localization(Omega, S) / |Omega|.
    """
    cells = domain.cells()
    if len(cells) == 0:
        raise ValueError("domain is empty")
    n_out = len(cells) * len(dataset)
    if n_out > max_signals:
        raise ValueError(
            f"augmentation would produce {n_out} signals (cap {max_signals})"
        )
    scale = (domain.measure * domain.d) ** -0.5
    signals = [
        scale * tf_shift(f, (int(m), int(n)))
        for f in dataset.signals
        for m, n in cells
    ]
    return DataSet(
        tuple(signals),
        dataset.seed,
        f"augmented({dataset.label}, cells={len(cells)})",
    )
