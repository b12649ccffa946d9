"""Sneddon-Bessel series over the zeros of J_nu: direct summation, closed forms
and numerical checks of the identities that connect them."""

from .closedform import S1_closed, S_closed, d_coeff, delta1, delta2, delta2_poly, phi_rec
from .errors import SneddonError
from .fnkernel import phi
from .kstheory import ResolventPoint, ks1_rhs, ks1r_rhs, ks1re_rhs, ks_rhs, ksee_rhs, resolvent_taylor_match
from .partialfrac import EntireFnSpec, double_bessel_numbers, pf_lhs, pf_rhs
from .report import VerificationReport, emit_report, load_report, verify_grid
from .series import Resolvent, SeriesParams, SumResult, sum_resolvent, sum_S, sum_S1, sum_xi
from .sonin import TransformSpec, t_transform
from .zeros import ZeroTable, bessel_zeros

__version__ = "0.1.0"
