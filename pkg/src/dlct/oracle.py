"""Brute-force quadrature of the continuous LCT and the analytic test signals.

The continuous transform is

    C_L f(u) = sqrt(beta) exp(-i pi/4) * integral exp[i pi (alpha u^2 - 2 beta u u' + gamma u'^2)] f(u') du'

evaluated on the output grid with a composite Simpson (or trapezoid) rule
over ``[-L, L]``, ``L = padding * sqrt(N) / 2``.
"""

from __future__ import annotations

import cmath
import enum
import hashlib
import json
import math
from collections.abc import Callable
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .core import SignalVector
from .errors import GridMismatchError, ParameterError, QuadratureError
from .io import read_signal_csv, write_signal_csv
from .operators import Grid
from .params import LctParams


class SignalId(str, enum.Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    CUSTOM = "custom"


def tri(u):
    return np.maximum(0.0, 1.0 - np.abs(u))


def rect(u):
    """Unit rectangle with value 1/2 on the edges ``|u| = 1/2``."""
    au = np.abs(u)
    return np.where(au < 0.5, 1.0, np.where(au == 0.5, 0.5, 0.0))


def chirped_pulse(u):
    u = np.asarray(u, dtype=float)
    return np.exp(-np.pi * u**2 - 1j * np.pi * u**2)


def trapezoid_pulse(u):
    return 1.5 * tri(np.asarray(u, dtype=float) / 3) - 0.5 * tri(u)


def damped_sine(u):
    u = np.asarray(u, dtype=float)
    return np.exp(-2 * np.abs(u)) * np.sin(3 * np.pi * u)


@dataclass(frozen=True)
class AnalyticSignal:
    id: SignalId
    evaluator: Callable[[np.ndarray], np.ndarray]

    def __call__(self, u) -> np.ndarray:
        return np.asarray(self.evaluator(np.asarray(u, dtype=float)), dtype=complex)


SIGNALS = {
    SignalId.F1: AnalyticSignal(SignalId.F1, chirped_pulse),
    SignalId.F2: AnalyticSignal(SignalId.F2, trapezoid_pulse),
    SignalId.F3: AnalyticSignal(SignalId.F3, rect),
    SignalId.F4: AnalyticSignal(SignalId.F4, damped_sine),
}


def get_signal(name: str | SignalId) -> AnalyticSignal:
    try:
        return SIGNALS[SignalId(name)]
    except (ValueError, KeyError):
        raise ParameterError(f"unknown signal {name!r}; expected one of F1..F4") from None


def custom_signal(evaluator: Callable[[np.ndarray], np.ndarray]) -> AnalyticSignal:
    return AnalyticSignal(SignalId.CUSTOM, evaluator)


class Rule(str, enum.Enum):
    TRAPEZOID = "trapezoid"
    SIMPSON = "simpson"


@dataclass(frozen=True)
class QuadratureConfig:
    oversampling: int = 16
    padding: float = 3.0
    rule: Rule = Rule.SIMPSON

    def __post_init__(self) -> None:
        if int(self.oversampling) != self.oversampling or self.oversampling < 1:
            raise ParameterError(f"oversampling must be a positive integer, got {self.oversampling!r}")
        if not (math.isfinite(self.padding) and self.padding >= 1):
            raise ParameterError(f"padding must be >= 1, got {self.padding!r}")
        object.__setattr__(self, "oversampling", int(self.oversampling))
        object.__setattr__(self, "padding", float(self.padding))
        object.__setattr__(self, "rule", Rule(self.rule))

    def digest(self) -> str:
        blob = json.dumps({**asdict(self), "rule": self.rule.value}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def phase_increment(p: LctParams, g: Grid, cfg: QuadratureConfig) -> float:
    """Quadratic-phase step per substep, ``pi (|gamma| + 2|beta| u_max) delta``.

    ``u_max`` is the largest output coordinate magnitude and ``delta`` the
    integration substep ``h / oversampling``.
    """
    u_max = float(np.max(np.abs(g.coordinates)))
    delta = g.spacing / cfg.oversampling
    return math.pi * (abs(p.gamma) + 2 * abs(p.beta) * u_max) * delta


def _nodes_and_weights(g: Grid, cfg: QuadratureConfig) -> tuple[np.ndarray, np.ndarray]:
    half = cfg.padding * math.sqrt(g.n_samples) / 2
    intervals = int(round(2 * half * cfg.oversampling / g.spacing))
    if cfg.rule is Rule.SIMPSON and intervals % 2:
        intervals += 1
    x = np.linspace(-half, half, intervals + 1)
    step = x[1] - x[0]
    w = np.ones(intervals + 1)
    if cfg.rule is Rule.SIMPSON:
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w *= step / 3
    else:
        w[0] = w[-1] = 0.5
        w *= step
    return x, w


def continuous_lct(
    p: LctParams,
    f: AnalyticSignal,
    g: Grid,
    cfg: QuadratureConfig = QuadratureConfig(),
    chunk: int = 32,
) -> SignalVector:
    """Samples of the continuous LCT of ``f`` at the grid coordinates.

    ``sqrt(beta)`` takes the principal branch, so ``beta < 0`` contributes a
    factor ``1j * sqrt(|beta|)``.

    Raises
    ------
    QuadratureError
        If the phase-resolution guard fails or the integrand is not finite.
    """
    inc = phase_increment(p, g, cfg)
    if inc > math.pi / 4:
        raise QuadratureError(
            f"phase step {inc:.3f} rad exceeds pi/4; increase oversampling above {cfg.oversampling}"
        )
    al, be, ga = p.as_tuple()
    x, w = _nodes_and_weights(g, cfg)
    integrand = f(x) * np.exp(1j * np.pi * ga * x**2) * w
    if not np.all(np.isfinite(integrand)):
        raise QuadratureError("integrand is not finite on the integration grid")

    u = g.coordinates
    out = np.empty(u.shape, dtype=complex)
    for start in range(0, u.size, chunk):
        stop = start + chunk
        kernel = np.exp(-2j * np.pi * be * np.outer(u[start:stop], x))
        out[start:stop] = kernel @ integrand
    prefactor = cmath.sqrt(be) * cmath.exp(-1j * math.pi / 4)
    out *= prefactor * np.exp(1j * np.pi * al * u**2)
    return SignalVector(out, g)


def sample(f: AnalyticSignal, g: Grid) -> SignalVector:
    return SignalVector(f(g.coordinates), g)


def percent_mse(x: SignalVector, ref: SignalVector) -> float:
    """``100 * sum|x - ref|^2 / sum|ref|^2``."""
    if x.grid != ref.grid:
        raise GridMismatchError("signals are on different grids")
    ref_energy = ref.energy
    if ref_energy == 0:
        raise ParameterError("reference signal has zero energy")
    return 100.0 * float(np.sum(np.abs(x.samples - ref.samples) ** 2)) / ref_energy


class OracleCache:
    """Directory of oracle outputs stored as signal CSV files.

    Files are keyed by signal id, parameters, N, scheme and the quadrature
    configuration digest.
    """

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def key(self, signal: str, p: LctParams, g: Grid, cfg: QuadratureConfig) -> str:
        blob = json.dumps(
            [signal, [repr(v) for v in p.as_tuple()], g.n_samples, g.scheme.value, cfg.digest()]
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:24]

    def path(self, signal: str, p: LctParams, g: Grid, cfg: QuadratureConfig) -> Path:
        return self.directory / f"{signal}_{g.n_samples}_{g.scheme.value}_{self.key(signal, p, g, cfg)}.csv"

    def get_or_compute(self, signal: str, p: LctParams, g: Grid, cfg: QuadratureConfig) -> SignalVector:
        signal = SignalId(signal).value
        path = self.path(signal, p, g, cfg)
        if path.exists():
            return read_signal_csv(path, g.scheme)
        result = continuous_lct(p, get_signal(signal), g, cfg)
        self.directory.mkdir(parents=True, exist_ok=True)
        write_signal_csv(path, result)
        return result
