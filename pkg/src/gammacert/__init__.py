"""Exact and high-precision Taylor coefficients of the Gamma function.

At integers and half-integers, ``Gamma^(n)(q)`` is computed exactly in the
ring Q[gamma, ln 2, sqrt(pi), zeta(3), zeta(5), ...]; elsewhere it is computed
numerically at a chosen precision. :mod:`gammacert.verify` checks the
reflection-formula coefficient identities that tie these values to powers
of pi.
"""
from .constants import ConstExpr, Monomial, NotPureInPi, PiVector, as_pi_vector, evaluate, from_zeta
from .exact import HalfInteger, PoleError, bernoulli, binomial, euler_number, factorial
from .gamma import GammaTaylor, gamma_value, polygamma, taylor, taylor_via_recursion
from .numeric import NumericTaylor, PrecisionError, gamma_taylor_numeric
from .series import OrderMismatch, Series
from .verify import (
    CertificateReport,
    Theorem2Report,
    c_via_cauchy,
    c_via_pi,
    reflection_coeffs_numeric,
    rq_coefficients,
    verify_theorem1,
    verify_theorem2,
    xi_product_coeffs,
)

__version__ = "0.1.0"
