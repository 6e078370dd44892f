"""Iwasawa factor matrices and the discrete LCT matrix ``C_L = Q_q M_M F^a``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridMismatchError, ParameterError
from .operators import (
    Grid,
    OperatorMatrix,
    Role,
    d_matrix,
    dft_matrix,
    hermitian_expm,
    u_diagonal,
)
from .params import IwasawaFactors, LctParams, iwasawa, positive_scale_factors


@dataclass(frozen=True, eq=False)
class SignalVector:
    samples: np.ndarray
    grid: Grid

    def __post_init__(self) -> None:
        samples = np.array(self.samples, dtype=complex).reshape(-1)
        if samples.shape[0] != self.grid.n_samples:
            raise GridMismatchError(
                f"signal has {samples.shape[0]} samples, grid has {self.grid.n_samples}"
            )
        samples.flags.writeable = False
        object.__setattr__(self, "samples", samples)

    @property
    def energy(self) -> float:
        return float(np.sum(np.abs(self.samples) ** 2))


@dataclass(frozen=True, eq=False)
class DlctMatrix:
    """A DLCT matrix with the parameters and Iwasawa factors it was built from.

    ``factors`` are the factors actually used, i.e. with a positive scaling
    factor (see :func:`dlct.params.positive_scale_factors`).
    """

    matrix: OperatorMatrix
    params: LctParams
    factors: IwasawaFactors

    @property
    def grid(self) -> Grid:
        return self.matrix.grid

    @property
    def entries(self) -> np.ndarray:
        return self.matrix.entries


class OperatorSet:
    """The ``U``/``D`` pair and derived generators for one grid, built once."""

    def __init__(self, g: Grid):
        self.grid = g
        self.F = dft_matrix(g)
        self.u = u_diagonal(g)
        self.D = d_matrix(g, self.F).entries
        self._frt_gen = None
        self._scaling_gen = None

    @property
    def frt_generator(self) -> np.ndarray:
        """``(U^2 + D^2) / 2``"""
        if self._frt_gen is None:
            H = self.D @ self.D
            H[np.diag_indices_from(H)] += self.u**2
            self._frt_gen = H / 2
        return self._frt_gen

    @property
    def scaling_generator(self) -> np.ndarray:
        """``(UD + DU) / 2``"""
        if self._scaling_gen is None:
            UD = self.u[:, None] * self.D
            self._scaling_gen = (UD + self.D * self.u[None, :]) / 2
        return self._scaling_gen


_OPERATOR_CACHE: dict[Grid, OperatorSet] = {}


def operators(g: Grid) -> OperatorSet:
    ops = _OPERATOR_CACHE.get(g)
    if ops is None:
        if len(_OPERATOR_CACHE) > 8:
            _OPERATOR_CACHE.clear()
        ops = _OPERATOR_CACHE[g] = OperatorSet(g)
    return ops


def clear_operator_cache() -> None:
    _OPERATOR_CACHE.clear()


def chirp_mult_matrix(g: Grid, q: float) -> OperatorMatrix:
    """``exp(-2j*pi*q * U^2 / 2)``; diagonal, entry n is ``exp(-1j*pi*q*U_nn^2)``."""
    u = u_diagonal(g)
    Q = hermitian_expm(np.diag(u**2), -1j * math.pi * q)
    return OperatorMatrix(Q, Role.CHIRP_MULT, g)


def scaling_matrix(g: Grid, M: float) -> OperatorMatrix:
    """``exp(-2j*pi*ln(M) * (UD + DU) / 2)`` for ``M > 0``."""
    if not M > 0:
        raise ParameterError(f"scaling factor must be positive, got {M!r}")
    if M == 1:
        return OperatorMatrix(np.eye(g.n_samples), Role.SCALING, g)
    S = hermitian_expm(operators(g).scaling_generator, -2j * math.pi * math.log(M))
    return OperatorMatrix(S, Role.SCALING, g)


def frt_lc_matrix(g: Grid, a: float) -> OperatorMatrix:
    """``exp(-1j*a*pi^2 * (U^2 + D^2) / 2)``."""
    if a == 0:
        return OperatorMatrix(np.eye(g.n_samples), Role.FRT_LC, g)
    Fa = hermitian_expm(operators(g).frt_generator, -1j * a * math.pi**2)
    return OperatorMatrix(Fa, Role.FRT_LC, g)


def dlct_matrix(g: Grid, p: LctParams) -> DlctMatrix:
    """Build ``C_L = Q_q M_M F^a_lc`` with the factors from :func:`iwasawa`.

    A negative scaling factor is absorbed into the FRT order (``a -> a -+ 2``)
    before building the matrices, so the scaling exponent always has a real
    logarithm.
    """
    factors = positive_scale_factors(iwasawa(p))
    Fa = frt_lc_matrix(g, factors.frt_order_a).entries
    M = scaling_matrix(g, factors.scale_M).entries
    q_diag = np.diag(chirp_mult_matrix(g, factors.chirp_q).entries)
    C = q_diag[:, None] * (M @ Fa)
    return DlctMatrix(OperatorMatrix(C, Role.DLCT, g), p, factors)


def apply(m: DlctMatrix | OperatorMatrix, x: SignalVector) -> SignalVector:
    """Matrix-vector product ``m @ x`` on matching grids."""
    matrix = m.matrix if isinstance(m, DlctMatrix) else m
    if matrix.grid != x.grid:
        raise GridMismatchError(f"matrix grid {matrix.grid} does not match signal grid {x.grid}")
    return SignalVector(matrix.entries @ x.samples, x.grid)
