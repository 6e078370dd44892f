"""Binary and CSV serialization of matrices and signals.

Binary matrix layout (little-endian)::

    magic    8 bytes   b"DLCTMAT1"
    role     uint8     Role value
    scheme   uint8     0 = ordinary, 1 = centered
    N        uint64
    entries  N*N complex, each (real, imag) float64, row-major, ascending index order
"""

from __future__ import annotations

import csv
import struct
from pathlib import Path
from typing import TextIO

import numpy as np

from .core import SignalVector
from .errors import FormatError
from .operators import Grid, OperatorMatrix, Role, Scheme

MAGIC = b"DLCTMAT1"
_HEADER = struct.Struct("<8sBBQ")
_SCHEME_CODES = {Scheme.ORDINARY: 0, Scheme.CENTERED: 1}
_SCHEMES = {v: k for k, v in _SCHEME_CODES.items()}


def fmt(x: float) -> str:
    """17 significant digits, enough to round-trip a double."""
    return format(float(x), ".17g")


def dump_matrix(m: OperatorMatrix, path: str | Path) -> None:
    header = _HEADER.pack(MAGIC, int(m.role), _SCHEME_CODES[m.grid.scheme], m.grid.n_samples)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(np.ascontiguousarray(m.entries, dtype="<c16").tobytes())


def load_matrix(path: str | Path) -> OperatorMatrix:
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < _HEADER.size:
        raise FormatError(f"{path}: file too short for a matrix header")
    magic, role, scheme, N = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}")
    try:
        role = Role(role)
        scheme = _SCHEMES[scheme]
    except (ValueError, KeyError):
        raise FormatError(f"{path}: unknown role {role} or scheme {scheme}") from None
    body = raw[_HEADER.size :]
    if len(body) != 16 * N * N:
        raise FormatError(f"{path}: expected {16 * N * N} bytes of entries, found {len(body)}")
    entries = np.frombuffer(body, dtype="<c16").reshape(N, N)
    return OperatorMatrix(entries, role, Grid(int(N), scheme))


def export_matrix_csv(m: OperatorMatrix, path: str | Path) -> None:
    """One CSV row per matrix row; each entry written as a ``re,im`` pair."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        for row in m.entries:
            writer.writerow([v for z in row for v in (fmt(z.real), fmt(z.imag))])


def write_signal_csv(target: str | Path | TextIO, x: SignalVector) -> None:
    """Write ``index,re,im`` rows to a path or an open text stream."""
    if not isinstance(target, (str, Path)):
        _write_signal_rows(target, x)
        return
    with open(target, "w", newline="") as fh:
        _write_signal_rows(fh, x)


def _write_signal_rows(fh: TextIO, x: SignalVector) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["index", "re", "im"])
    for idx, z in zip(x.grid.indices, x.samples):
        writer.writerow([fmt(idx), fmt(z.real), fmt(z.imag)])


def read_signal_csv(path: str | Path, scheme: Scheme | str | None = None) -> SignalVector:
    """Read an ``index,re,im`` CSV.

    The scheme is inferred from the indices (half-integers mean centered)
    unless given; the indices must match the grid exactly.
    """
    indices, values = [], []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().lower() == "index":
                continue
            if len(row) != 3:
                raise FormatError(f"{path}: expected 3 columns, got {len(row)}")
            try:
                indices.append(float(row[0]))
                values.append(complex(float(row[1]), float(row[2])))
            except ValueError as exc:
                raise FormatError(f"{path}: {exc}") from None
    if len(values) < 2:
        raise FormatError(f"{path}: need at least 2 samples")
    idx = np.array(indices)
    if scheme is None:
        scheme = Scheme.CENTERED if np.any(idx != np.round(idx)) else Scheme.ORDINARY
    g = Grid(len(values), Scheme(scheme))
    if not np.array_equal(idx, g.indices):
        raise FormatError(f"{path}: indices do not match a {g.scheme.value} grid of size {g.n_samples}")
    return SignalVector(np.array(values), g)
