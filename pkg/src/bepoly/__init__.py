"""Exact-arithmetic toolkit for convolution sums of Bernoulli and Euler polynomials."""

from .arith import Rational, binom_rational, format_rational, harmonic, parse_rational, rising_reciprocal_sum
from .catalog import CATALOG, build_identity, m_bracket
from .errors import (
    BepolyError, DivisionByZeroPolynomial, DSLError, IndexOutOfDomain, LengthError, NonIntegerIndex,
    ParseError, PoleError, UnboundIndex, UnknownIdentity,
)
from .poly import AffineForm, MultiPoly, binom_poly
from .ratfun import RatFun, limit_at
from .sequences import (
    SequenceCache, a_poly, a_poly_star, bernoulli_number, bernoulli_poly, dual_sequence, euler_at_zero,
    euler_number, euler_poly,
)
from .verify import IdentityReport, verify_identity, verify_lemma_2_2, verify_lemma_3_1, verify_range

__version__ = "0.1.0"
