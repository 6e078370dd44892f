"""Sample grids, the unitary DFT, and the dual coordinate/differentiation matrices.

All matrices are stored with rows and columns in ascending grid-index order
(not FFT order).  Sample ``k`` of a signal sits at coordinate
``indices[k] * spacing`` with ``spacing = 1/sqrt(N)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotHermitianError, ParameterError


class Scheme(str, enum.Enum):
    ORDINARY = "ordinary"
    CENTERED = "centered"


class Role(enum.IntEnum):
    DFT = 0
    U = 1
    D = 2
    CHIRP_MULT = 3
    SCALING = 4
    FRT_LC = 5
    DLCT = 6


@dataclass(frozen=True)
class Grid:
    n_samples: int
    scheme: Scheme = Scheme.ORDINARY

    def __post_init__(self) -> None:
        if isinstance(self.n_samples, bool) or int(self.n_samples) != self.n_samples:
            raise ParameterError(f"N must be an integer, got {self.n_samples!r}")
        if self.n_samples < 2:
            raise ParameterError(f"N must be at least 2, got {self.n_samples}")
        object.__setattr__(self, "n_samples", int(self.n_samples))
        object.__setattr__(self, "scheme", Scheme(self.scheme))

    @property
    def spacing(self) -> float:
        return 1.0 / math.sqrt(self.n_samples)

    @property
    def indices(self) -> np.ndarray:
        N = self.n_samples
        if N % 2 == 0:
            idx = np.arange(-N // 2, N // 2, dtype=float)
            shift = 0.5
        else:
            idx = np.arange(-(N - 1) // 2, (N - 1) // 2 + 1, dtype=float)
            shift = -0.5
        if self.scheme is Scheme.CENTERED:
            idx = idx + shift
        return idx

    @property
    def coordinates(self) -> np.ndarray:
        return self.indices * self.spacing


def make_grid(N: int, scheme: Scheme | str = Scheme.ORDINARY) -> Grid:
    return Grid(N, Scheme(scheme))


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    entries: np.ndarray
    role: Role
    grid: Grid

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=complex)
        N = self.grid.n_samples
        if entries.shape != (N, N):
            raise ParameterError(f"expected a {N}x{N} matrix, got shape {entries.shape}")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "role", Role(self.role))

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            return self.entries @ other.entries
        return self.entries @ other


def _max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def dft_matrix(g: Grid) -> OperatorMatrix:
    """Unitary DFT, ``F[m, n] = exp(-2j*pi*m*n/N) / sqrt(N)`` over the grid indices.

    For the centered scheme ``m`` and ``n`` are half integers; the matrix is
    still unitary since index differences remain nonzero integers below N.
    """
    N = g.n_samples
    n = g.indices
    # products of grid indices are multiples of 1/4, so the reduction is exact
    phase = np.mod(np.outer(n, n), N)
    F = np.exp(-2j * np.pi * phase / N) / math.sqrt(N)
    return OperatorMatrix(F, Role.DFT, g)


def u_diagonal(g: Grid) -> np.ndarray:
    N = g.n_samples
    return math.sqrt(N) / math.pi * np.sin(np.pi * g.indices / N)


def u_matrix(g: Grid) -> OperatorMatrix:
    """Discrete coordinate multiplication: ``diag(sqrt(N)/pi * sin(pi*n/N))``.

    This is the sampled form of ``sin(pi*h*u)/(pi*h)`` rather than plain ``u``,
    which keeps it the exact DFT dual of the half-step central difference.
    """
    return OperatorMatrix(np.diag(u_diagonal(g)).astype(complex), Role.U, g)


def d_matrix(g: Grid, F: OperatorMatrix | None = None) -> OperatorMatrix:
    """Discrete differentiation ``D = F^-1 U F``."""
    if F is None:
        F = dft_matrix(g)
    Fe = F.entries
    D = Fe.conj().T @ (u_diagonal(g)[:, None] * Fe)
    return OperatorMatrix(D, Role.D, g)


def parity_matrix(g: Grid) -> np.ndarray:
    """Signal reversal ``x[n] -> x[-n]``.

    Indices whose mirror image is off the grid (``-N/2`` for the ordinary
    even grid, the lowest index for the centered odd grid) map to themselves.
    """
    idx = g.indices
    N = g.n_samples
    lookup = {v: k for k, v in enumerate(idx)}
    P = np.zeros((N, N))
    for k, v in enumerate(idx):
        P[lookup.get(-v, k), k] = 1.0
    return P


def is_hermitian(H: np.ndarray, tol: float = 1e-10) -> bool:
    H = np.asarray(H)
    scale = max(1.0, _max_abs(H))
    return _max_abs(H - H.conj().T) <= tol * scale


def hermitian_expm(H, scale: complex, tol: float = 1e-10) -> np.ndarray:
    """Compute ``exp(scale * H)`` for Hermitian ``H``.

    Uses ``H = V diag(w) V^H`` so that ``exp(scale*H) = V diag(exp(scale*w)) V^H``;
    with purely imaginary ``scale`` the result is unitary to working precision.
    Diagonal ``H`` is exponentiated elementwise.

    Parameters
    ----------
    H : array_like or OperatorMatrix
        Square Hermitian matrix.  The Hermiticity check is relative to
        ``max(1, max|H|)``.
    scale : complex
        Scalar multiplying ``H`` in the exponent, typically ``-1j * c``.
    tol : float
        Tolerance of the Hermiticity check.

    Raises
    ------
    NotHermitianError
        If ``H`` is not Hermitian within ``tol``.
    """
    if isinstance(H, OperatorMatrix):
        H = H.entries
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ParameterError(f"expected a square matrix, got shape {H.shape}")
    if not is_hermitian(H, tol):
        raise NotHermitianError(
            f"generator is not Hermitian (max |H - H^H| = {_max_abs(H - H.conj().T):.3e})"
        )
    diag = np.diag(H)
    if not np.any(H - np.diag(diag)):
        return np.diag(np.exp(scale * diag.real))
    w, V = np.linalg.eigh((H + H.conj().T) / 2)
    return (V * np.exp(scale * w)) @ V.conj().T
