"""Approximation, concatenation and reversibility experiments.

Each experiment returns a list of row dicts; :func:`write_rows` turns them
into deterministic CSV.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from .core import DlctMatrix, SignalVector, apply, dlct_matrix
from .errors import ParameterError
from .operators import Grid, Scheme
from .oracle import OracleCache, QuadratureConfig, continuous_lct, get_signal, percent_mse, sample
from .params import LctParams, compose, from_abcd, invert, to_abcd

TRANSFORMS: dict[str, LctParams] = {
    "T1": LctParams(-3.0, -2.0, -1.0),
    "T2": LctParams(-0.8, 3.0, 1.0),
    "T3": LctParams(-1.8, -1.75, -1.3),
    "T4": LctParams(0.3, -1.6, -0.9),
}
SIGNAL_IDS = ("F1", "F2", "F3", "F4")
SIZES = (256, 1024)
CONCAT_PAIRS = (("T1", "T2"), ("T3", "T4"), ("T3", "T1"), ("T3", "T2"))
INVERSE_PAIRS = ("T1", "T3")
FIGURE_PAIRS = (("F1", "T1"), ("F2", "T2"), ("F3", "T3"), ("F4", "T4"))


def get_transform(name: str) -> LctParams:
    try:
        return TRANSFORMS[name.upper()]
    except KeyError:
        raise ParameterError(f"unknown transform {name!r}; expected one of T1..T4") from None


@dataclass
class ExperimentSpec:
    signals: Sequence[str] = SIGNAL_IDS
    transforms: Sequence[str] = tuple(TRANSFORMS)
    sizes: Sequence[int] = SIZES
    schemes: Sequence[str] = (Scheme.ORDINARY.value, Scheme.CENTERED.value)
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    cache_dir: str | Path | None = None

    def __post_init__(self) -> None:
        for s in self.signals:
            get_signal(s)
        for t in self.transforms:
            get_transform(t)
        self.schemes = [Scheme(s).value for s in self.schemes]
        self.sizes = [int(n) for n in self.sizes]


class MatrixStore:
    """Builds each ``(params, grid)`` DLCT matrix once per run."""

    def __init__(self):
        self._store: dict[tuple, DlctMatrix] = {}

    def get(self, p: LctParams, g: Grid) -> DlctMatrix:
        key = (p.as_tuple(), g)
        if key not in self._store:
            self._store[key] = dlct_matrix(g, p)
        return self._store[key]


def _oracle(spec: ExperimentSpec, signal: str, p: LctParams, g: Grid) -> SignalVector:
    if spec.cache_dir is not None:
        return OracleCache(spec.cache_dir).get_or_compute(signal, p, g, spec.quadrature)
    return continuous_lct(p, get_signal(signal), g, spec.quadrature)


def table1(spec: ExperimentSpec, store: MatrixStore | None = None) -> list[dict]:
    """Percentage MSE of the DLCT against the quadrature reference."""
    store = store or MatrixStore()
    rows = []
    for scheme in spec.schemes:
        for N in spec.sizes:
            g = Grid(N, Scheme(scheme))
            for t in spec.transforms:
                C = store.get(get_transform(t), g)
                for s in spec.signals:
                    out = apply(C, sample(get_signal(s), g))
                    ref = _oracle(spec, s, get_transform(t), g)
                    rows.append(
                        {"signal": s, "transform": t, "N": N, "scheme": scheme,
                         "mse_percent": percent_mse(out, ref)}
                    )
    return sort_rows(rows, ("signal", "transform", "N", "scheme"))


def concatenated_params(first: str, second: str) -> LctParams:
    """Parameters of applying ``first`` then ``second`` (``L12 = L2 L1``)."""
    return from_abcd(compose(to_abcd(get_transform(first)), to_abcd(get_transform(second))))


def inverse_params(name: str) -> LctParams:
    return from_abcd(invert(to_abcd(get_transform(name))))


def table2(spec: ExperimentSpec, store: MatrixStore | None = None) -> list[dict]:
    """Concatenation and reversibility errors, ordinary scheme.

    For a pair ``Ti-Tj`` the row compares ``C_Tj C_Ti x`` with ``C_{L12} x``;
    for ``Ti-Ti^-1`` it compares ``C_{Ti^-1} C_Ti x`` with ``x``.
    """
    store = store or MatrixStore()
    rows = []
    for N in spec.sizes:
        g = Grid(N, Scheme.ORDINARY)
        for s in spec.signals:
            x = sample(get_signal(s), g)
            for first, second in CONCAT_PAIRS:
                two_step = apply(store.get(get_transform(second), g),
                                 apply(store.get(get_transform(first), g), x))
                direct = apply(store.get(concatenated_params(first, second), g), x)
                rows.append({"signal": s, "pair": f"{first}-{second}", "N": N,
                             "mse_percent": percent_mse(two_step, direct)})
            for t in INVERSE_PAIRS:
                back = apply(store.get(inverse_params(t), g), apply(store.get(get_transform(t), g), x))
                rows.append({"signal": s, "pair": f"{t}-{t}^-1", "N": N,
                             "mse_percent": percent_mse(back, x)})
    return sort_rows(rows, ("signal", "pair", "N"))


def figure_data(spec: ExperimentSpec, pairs: Iterable[tuple[str, str]] = FIGURE_PAIRS,
                store: MatrixStore | None = None) -> list[dict]:
    """Per-sample DLCT and reference values for plotting."""
    store = store or MatrixStore()
    rows = []
    for scheme in spec.schemes:
        for N in spec.sizes:
            g = Grid(N, Scheme(scheme))
            for s, t in pairs:
                p = get_transform(t)
                out = apply(store.get(p, g), sample(get_signal(s), g))
                ref = _oracle(spec, s, p, g)
                for idx, u, z, r in zip(g.indices, g.coordinates, out.samples, ref.samples):
                    rows.append({"signal": s, "transform": t, "N": N, "scheme": scheme,
                                 "index": idx, "u": u, "dlct_re": z.real, "dlct_im": z.imag,
                                 "oracle_re": r.real, "oracle_im": r.imag})
    return rows


def sort_rows(rows: list[dict], keys: Sequence[str]) -> list[dict]:
    return sorted(rows, key=lambda r: tuple(r[k] for k in keys))


def _cell(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_rows(rows: list[dict], path: str | Path | None = None, columns: Sequence[str] | None = None) -> str:
    """Render rows as CSV (17 significant digits); also write to ``path`` if given."""
    if columns is None:
        columns = list(rows[0]) if rows else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[c]) for c in columns])
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text)
    return text
