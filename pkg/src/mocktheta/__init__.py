"""Numerical toolkit for Appell-Lerch sums, indefinite theta series and mock theta functions."""

__version__ = "0.1.0"

from .numerics import (DEFAULT_TOL, DomainError, MockThetaError, PoleProximityError, QuadratureError,
                       TauPoint, TruncationError, integrate_real_line, integrate_vertical_ray,
                       sum_with_tail_bound)
from .qseries import QSeries, euler_product, identity_ids, mock_series, qpochhammer, run_identity
from .classical import dedekind_eta, jacobi_theta, theta_char, theta_index_component, unary_g
from .lerch import completed_mu, correction_R, lerch_mu, mordell_h, period_integral_h, period_integral_R
from .indefinite import IndefThetaSpec, LatticeForm, classify_cone, indefinite_theta_ab, indefinite_theta_z
from .jacobi import (JacobiFormSpec, block_f, completed_block_f, correction_R_ml,
                     decompose_meromorphic_simple, theta_decompose_holomorphic)
from .families import FAMILY_IDS, eval_F, eval_G, eval_H, eval_series, family

__all__ = [
    "DEFAULT_TOL", "DomainError", "MockThetaError", "PoleProximityError", "QuadratureError", "TauPoint",
    "TruncationError", "integrate_real_line", "integrate_vertical_ray", "sum_with_tail_bound",
    "QSeries", "euler_product", "identity_ids", "mock_series", "qpochhammer", "run_identity",
    "dedekind_eta", "jacobi_theta", "theta_char", "theta_index_component", "unary_g",
    "completed_mu", "correction_R", "lerch_mu", "mordell_h", "period_integral_h", "period_integral_R",
    "IndefThetaSpec", "LatticeForm", "classify_cone", "indefinite_theta_ab", "indefinite_theta_z",
    "JacobiFormSpec", "block_f", "completed_block_f", "correction_R_ml", "decompose_meromorphic_simple",
    "theta_decompose_holomorphic",
    "FAMILY_IDS", "eval_F", "eval_G", "eval_H", "eval_series", "family",
]
