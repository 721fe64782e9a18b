"""cesaro-lab: generalized Cesaro averaging operators on sequence spaces.

Finite-prefix implementations of the weighted-average operators C_t, the
norms of the sequence spaces they act on (lp, ces_p, d_p, weighted lp/c0,
and the even/odd splice space), eigenvector and operator-norm certificates,
exact rational oracles, and a CLI verification suite.
"""

from .config import ConfigError, SuiteConfig, Tolerances, default_spaces, load_config
from .kernels import BACKEND
from .operators import (
    OperatorSpec,
    apply_cesaro,
    apply_cesaro_truncated,
    apply_diagonal,
    apply_diagonal_truncated,
    apply_operator,
    apply_resolvent_partial,
    apply_shift,
    cesaro_matrix,
    convolve,
    eigenvector,
    matrix_to_csv,
)
from .report import CheckReport, emit
from .seqs import (
    canonical,
    ell1_not_d1_witness,
    geometric,
    make_sequence,
    make_weight,
    ones,
    squares_witness,
    xi,
)
from .spaces import (
    NormValue,
    SpaceSpec,
    ces_sup_norm,
    cesp_norm,
    distribution_function,
    dp_norm,
    lp_norm,
    majorant,
    space_norm,
    weighted_c0_norm,
    weighted_lp_norm,
    xpq_norm,
)
from .spectral import (
    EigenCertificate,
    NormBoundCertificate,
    cesinf_nondensity_check,
    compactness_decay,
    eigen_certificate,
    finite_section_eigenvalues,
    multiplier_norm_check,
    norm_lower_bound,
    resolvent_norm_check,
    shift_norm_check,
)
from .suite import run_suite

__version__ = "0.1.0"
