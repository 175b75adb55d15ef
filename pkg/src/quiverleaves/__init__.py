"""Root combinatorics of quiver moment-map reductions.

Simple dimension vectors, canonical decompositions, smoothness and
symplectic leaves of N(lambda, alpha), with McKay quivers of finite
subgroups of SL(2, C) built in.  All arithmetic is exact.
"""

from .cyclotomic import CycNumber, Parameter
from .mckay import CParam, GammaData, cm_dim_vector, frame, gamma_data, lambda_of_c, lambda_prime
from .quiver import (
    DimensionMismatch,
    Quiver,
    QuiverError,
    ReflectionUndefined,
    double,
    p_value,
    reflect,
    ringel_form,
    support_connected,
    sym_form,
)
from .repcheck import Representation, check_preprojective, moment_map, symplectic_form
from .roots import RootClass, classify_root, in_fundamental_region, positive_roots_upto, r_lambda_positive
from .sigma import (
    Decomposition,
    NotRepresentable,
    UniquenessViolation,
    alpha_norm,
    canonical_decomposition,
    decompositions,
    in_sigma_lambda,
    sigma_lambda_upto,
)
from .strata import RepType, Stratum, is_smooth, leaves, variety_dimension

__version__ = "0.1.0"
