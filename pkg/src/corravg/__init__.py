"""Correlation averages of balanced arithmetic functions.

Deviation, Selberg integral and modified Selberg integral, computed by fast
and brute-force routes, together with the spectral identities and
Gallagher-type bounds that link them.
"""

from corravg.errors import (
    CorravgError,
    ExponentDomainError,
    FitError,
    FunctionFormatError,
    InvalidArgument,
    OutOfRange,
)
from corravg.arith import SampledFunction, from_values, generate, load, save
from corravg.kernels import (
    KernelKind,
    cesaro_sq_weight,
    cesaro_weight,
    correlation_weight,
    fejer_sum,
    reduce_frequency,
    u_hat,
    unit_step,
)
from corravg.correlation import (
    CorrelationTable,
    correlate,
    correlations,
    deviation,
    near_diag_table,
)
from corravg.selberg import (
    IntegralResult,
    cesaro_identity_gap,
    cesaro_window_sum,
    modified_selberg_integral,
    selberg_integral,
    window_sum,
)
from corravg.spectral import (
    IdentityReport,
    KernelCoeffs,
    band_energy,
    kernel_coeffs,
    main_term,
    verify_identity,
)
from corravg.bounds import (
    ExponentFit,
    ExponentParams,
    GallagherReport,
    TheoremReport,
    exponent_params,
    fit_exponent,
    gallagher_check,
    proof_exponents,
    theorem_lengths,
    theorem_report,
)

__version__ = "0.1.0"
