"""Discrete linear canonical transform built from hyperdifferential operators."""

from .core import (
    DlctMatrix,
    SignalVector,
    apply,
    chirp_mult_matrix,
    clear_operator_cache,
    dlct_matrix,
    frt_lc_matrix,
    scaling_matrix,
)
from .errors import (
    DlctError,
    FormatError,
    GridMismatchError,
    NotHermitianError,
    ParameterError,
    QuadratureError,
)
from .operators import (
    Grid,
    OperatorMatrix,
    Role,
    Scheme,
    d_matrix,
    dft_matrix,
    hermitian_expm,
    make_grid,
    parity_matrix,
    u_matrix,
)
from .oracle import (
    AnalyticSignal,
    QuadratureConfig,
    Rule,
    continuous_lct,
    get_signal,
    percent_mse,
    sample,
)
from .params import (
    AbcdMatrix,
    IwasawaFactors,
    LctParams,
    compose,
    from_abcd,
    invert,
    iwasawa,
    special_chirp_mult,
    special_frt,
    special_scaling,
    to_abcd,
)

__version__ = "0.1.0"
