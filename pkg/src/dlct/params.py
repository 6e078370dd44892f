"""Parameter algebra for one-dimensional linear canonical transforms.

An LCT is identified either by the triplet ``(alpha, beta, gamma)`` or by a
real 2x2 matrix ``[[A, B], [C, D]]`` with unit determinant.  Composition of
transforms is matrix multiplication of the 2x2 matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

DET_TOL = 1e-9


def _check_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise ParameterError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class LctParams:
    """The triplet ``(alpha, beta, gamma)``; ``beta`` must be nonzero."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        _check_finite(alpha=self.alpha, beta=self.beta, gamma=self.gamma)
        if self.beta == 0:
            raise ParameterError("beta must be nonzero")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class AbcdMatrix:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        _check_finite(a=self.a, b=self.b, c=self.c, d=self.d)
        if abs(self.det - 1.0) > self.det_tolerance:
            raise ParameterError(f"determinant must be 1 (got {self.det!r})")

    @property
    def det_tolerance(self) -> float:
        """``DET_TOL`` scaled by the size of the products in ``ad - bc``.

        Equals ``DET_TOL`` whenever ``|ad|`` and ``|bc|`` are at most 1, which
        covers all moderate parameter sets; large entries lose absolute
        precision in the subtraction and get a proportional allowance.
        """
        return DET_TOL * max(1.0, abs(self.a * self.d), abs(self.b * self.c))

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def to_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=float)

    @classmethod
    def from_array(cls, m) -> AbcdMatrix:
        m = np.asarray(m, dtype=float)
        if m.shape != (2, 2):
            raise ParameterError(f"expected a 2x2 matrix, got shape {m.shape}")
        return cls(float(m[0, 0]), float(m[0, 1]), float(m[1, 0]), float(m[1, 1]))


IDENTITY = AbcdMatrix(1.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class IwasawaFactors:
    """Chirp rate, scaling factor and FRT order of ``C_L = Q_q M_M F^a``."""

    frt_order_a: float
    scale_M: float
    chirp_q: float

    def __post_init__(self) -> None:
        _check_finite(a=self.frt_order_a, M=self.scale_M, q=self.chirp_q)
        if self.scale_M == 0:
            raise ParameterError("scale_M must be nonzero")

    def factor_matrices(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Return the chirp, scaling and FRT 2x2 matrices, in product order."""
        theta = math.pi * self.frt_order_a / 2
        c, s = math.cos(theta), math.sin(theta)
        chirp = np.array([[1.0, 0.0], [-self.chirp_q, 1.0]])
        scale = np.array([[self.scale_M, 0.0], [0.0, 1.0 / self.scale_M]])
        frt = np.array([[c, s], [-s, c]])
        return chirp, scale, frt

    def product(self) -> np.ndarray:
        chirp, scale, frt = self.factor_matrices()
        return chirp @ scale @ frt


def to_abcd(p: LctParams) -> AbcdMatrix:
    al, be, ga = p.as_tuple()
    return AbcdMatrix(ga / be, 1.0 / be, -be + al * ga / be, al / be)


def from_abcd(m: AbcdMatrix) -> LctParams:
    if m.b == 0:
        raise ParameterError("B = 0: transform has no finite (alpha, beta, gamma) form")
    return LctParams(alpha=m.d / m.b, beta=1.0 / m.b, gamma=m.a / m.b)


def compose(first: AbcdMatrix, second: AbcdMatrix) -> AbcdMatrix:
    """Matrix of applying ``first`` and then ``second``, i.e. ``second @ first``."""
    return AbcdMatrix.from_array(second.to_array() @ first.to_array())


def invert(m: AbcdMatrix) -> AbcdMatrix:
    return AbcdMatrix(m.d, -m.b, -m.c, m.a)


def arccot(x: float) -> float:
    """Inverse cotangent on the branch ``(-pi/2, pi/2]``, with ``arccot(0) = pi/2``."""
    if x == 0:
        return math.pi / 2
    return math.atan(1.0 / x)


def iwasawa(p: LctParams) -> IwasawaFactors:
    """Factor an LCT into FRT, then scaling, then chirp multiplication.

    Uses the sign split on ``gamma`` for the scaling factor together with
    the ``(-pi/2, pi/2]`` inverse-cotangent branch, so ``a`` lies in
    ``(-1, 1]``.  That pairing is what makes the three factor matrices
    multiply back to ``to_abcd(p)``; the scaling factor can come out
    negative when ``beta`` and ``gamma`` have opposite signs.
    """
    al, be, ga = p.as_tuple()
    root = math.sqrt(1.0 + ga * ga)
    M = root / be if ga >= 0 else -root / be
    q = ga * be * be / (1.0 + ga * ga) - al
    a = 2.0 / math.pi * arccot(ga)
    return IwasawaFactors(frt_order_a=a, scale_M=M, chirp_q=q)


def positive_scale_factors(f: IwasawaFactors) -> IwasawaFactors:
    """Equivalent factorization with ``M > 0`` and ``a`` in ``(-2, 2)``.

    Shifting the FRT order by 2 negates the rotation matrix, which absorbs a
    negative scaling factor exactly at the 2x2 level.  The shift direction
    keeps ``sin(pi a / 2)`` with the sign of ``beta``, which is the branch
    matching the principal square root of ``beta`` in the integral kernel.
    """
    if f.scale_M > 0:
        return f
    a = f.frt_order_a - 2.0 if f.frt_order_a > 0 else f.frt_order_a + 2.0
    return IwasawaFactors(frt_order_a=a, scale_M=-f.scale_M, chirp_q=f.chirp_q)


def special_scaling(M: float) -> AbcdMatrix:
    if M == 0:
        raise ParameterError("scaling factor M must be nonzero")
    return AbcdMatrix(M, 0.0, 0.0, 1.0 / M)


def special_frt(a: float) -> AbcdMatrix:
    theta = math.pi * a / 2
    return AbcdMatrix(math.cos(theta), math.sin(theta), -math.sin(theta), math.cos(theta))


def special_chirp_mult(q: float) -> AbcdMatrix:
    return AbcdMatrix(1.0, 0.0, -q, 1.0)
