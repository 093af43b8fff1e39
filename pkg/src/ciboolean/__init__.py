"""Exact correlation-immunity analysis of (n, m) Boolean functions."""
from .bfcore import (
    GeneralizedAnf,
    GeneralizedFunction,
    MultiOutputFunction,
    Permutation,
    component_combination,
    from_generalized,
    generalized_anf,
    is_symmetric,
    permute_variables,
    to_generalized,
)
from .ci import (
    METHODS,
    CiOrder,
    CiVerdict,
    DistributionCounts,
    PermutationLimitError,
    ci_check,
    ci_check_definition,
    ci_check_fourier_component,
    ci_check_fourier_generalized,
    ci_check_walsh_component,
    ci_check_walsh_generalized,
    ci_order,
    conditional_distribution,
    op_count,
)
from .cyclotomic import CycloInt, root_power
from .kernels import BACKEND_NAME
from .spectra import (
    SpectralReport,
    assoc_poly_eval,
    dft_point,
    fast_walsh_all,
    walsh_component,
    walsh_generalized,
)

__version__ = "0.1.0"
