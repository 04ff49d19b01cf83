"""corrkit: aperiodic correlation of complex sequence pairs.

Generators for Chu and Rudin-Shapiro families, demerit factors and the
pair criterion, closed-form Chu autocorrelation, generalized quadratic
Gauss sums with an exact reciprocity decomposition, and convergence
studies tying it all together.
"""

from .closedform import (
    ChuAdfBreakdown,
    chu_acf_magnitude,
    chu_acf_magnitudes,
    chu_adf_closed,
    sine_ratio_partial_sums,
)
from .errors import (
    CorrkitError,
    DegenerateSequence,
    FormatError,
    InvalidArgument,
    InvalidShift,
    InvalidSpec,
    LengthMismatch,
)
from .gauss import (
    GaussSumDecomposition,
    correlation_gauss_identity,
    cot_correction,
    decompose_gauss_sum,
    erfc_diag,
    erfc_factor,
    erfc_factor_conj,
    gauss_magnitude_estimate,
    gauss_sum_direct,
)
from .generators import ChuSpec, balanced_chu_pair, chu, chu_phases, conjugate_chu_pair, rudin_shapiro_pair
from .seqcore import (
    CorrelationProfile,
    DemeritReport,
    Sequence,
    adf,
    cdf,
    crosscorrelation_fft,
    crosscorrelation_naive,
    golay_defect,
    psc,
)

__version__ = "0.1.0"
