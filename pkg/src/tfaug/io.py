"""Signal-set and domain serialization.

Binary format: little-endian, magic "QHA1", u32 d, u32 N, then N*d
complex samples as (f64 real, f64 imag) pairs.  CSV alternative: one
signal per row with 2d interleaved re,im columns and a header row
"# d=<d> n=<N>".  Round trips are bit exact.
"""

import json
import struct
from pathlib import Path

import numpy as np

from .augmentation import Domain, make_cells_domain, make_rect_domain
from .datasets import DataSet
from .tf_core import PhaseGrid

MAGIC = b"QHA1"


def write_signals_binary(path, dataset: DataSet) -> None:
    X = dataset.as_matrix().astype(np.complex128)
    N, d = X.shape
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<II", d, N))
        interleaved = np.empty((N, 2 * d))
        interleaved[:, 0::2] = X.real
        interleaved[:, 1::2] = X.imag
        fh.write(interleaved.astype("<f8").tobytes())


def read_signals_binary(path) -> DataSet:
    raw = Path(path).read_bytes()
    if len(raw) < 12 or raw[:4] != MAGIC:
        raise ValueError(f"{path}: not a signal file (bad magic)")
    d, N = struct.unpack("<II", raw[4:12])
    expect = 12 + N * d * 16
    if len(raw) != expect:
        raise ValueError(f"{path}: truncated, expected {expect} bytes, got {len(raw)}")
    flat = np.frombuffer(raw[12:], dtype="<f8").reshape(N, 2 * d)
    X = flat[:, 0::2] + 1j * flat[:, 1::2]
    return DataSet(tuple(X), label=f"file({Path(path).name})")


def write_signals_csv(path, dataset: DataSet) -> None:
    X = dataset.as_matrix()
    N, d = X.shape
    with open(path, "w", newline="") as fh:
        fh.write(f"# d={d} n={N}\n")
        for row in X:
            cells = []
            for v in row:
                cells.append(repr(float(v.real)))
                cells.append(repr(float(v.imag)))
            fh.write(",".join(cells) + "\n")


def read_signals_csv(path) -> DataSet:
    lines = Path(path).read_text().splitlines()
    if not lines or not lines[0].startswith("#"):
        raise ValueError(f"{path}: missing '# d=... n=...' header")
    header = dict(tok.split("=") for tok in lines[0].lstrip("# ").split())
    d, N = int(header["d"]), int(header["n"])
    rows = [ln for ln in lines[1:] if ln.strip()]
    if len(rows) != N:
        raise ValueError(f"{path}: header says {N} signals, found {len(rows)} rows")
    signals = []
    for ln in rows:
        vals = np.array([float(tok) for tok in ln.split(",")])
        if len(vals) != 2 * d:
            raise ValueError(f"{path}: row has {len(vals)} columns, expected {2 * d}")
        signals.append(vals[0::2] + 1j * vals[1::2])
    return DataSet(tuple(signals), label=f"file({Path(path).name})")


def write_signals(path, dataset: DataSet) -> None:
    """Dispatch on extension: .csv is text, anything else binary."""
    if str(path).endswith(".csv"):
        write_signals_csv(path, dataset)
    else:
        write_signals_binary(path, dataset)


def read_signals(path) -> DataSet:
    if str(path).endswith(".csv"):
        return read_signals_csv(path)
    return read_signals_binary(path)


def domain_to_json(domain: Domain) -> str:
    return json.dumps(domain.to_json_dict(), sort_keys=True)


def domain_from_json(text: str) -> Domain:
    spec = json.loads(text)
    d = spec["d"]
    shape = spec.get("shape", "rect")
    if shape == "rect":
        return make_rect_domain(
            PhaseGrid(d),
            spec["width"],
            spec["height"],
            tuple(spec.get("center", (0.0, 0.0))),
        )
    if shape == "full":
        from .augmentation import full_domain

        return full_domain(d)
    if shape == "cells":
        return make_cells_domain(PhaseGrid(d), spec["cells"])
    raise ValueError(f"unknown domain shape {shape!r}")
