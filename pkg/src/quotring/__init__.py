"""Euclidean residue rings of number rings and modular pseudo-Hermite normal forms."""

from .echelon import (
    CrtSplit, howell_normalize, is_strong_echelon_shape, split_strong_echelon, strong_echelon,
    triangularize,
)
from .errors import (
    BoundTooSmallError, InvalidRingError, NotCoprimeError, NotIntegralError, QuotringError,
    RankDeficientError, SamplingBudgetExhausted, SingularMatrixError, ZeroIdealError,
)
from .ideals import FracIdeal, Ideal, idempotent_split
from .numring import FieldElement, NumberRing, RingElement, integers, preset, quadratic_ring
from .pseudo import (
    PseudoHNF, PseudoMatrix, demodularize, find_modulus, modular_det, pseudo_hnf, reduce_mod,
    span_zlattice,
)
from .quotient import QuotientRing, quotient_ring
from .residue import ResidueRingZ, int_xgcd
from .split import ZSplit, rational_quotient_map, zsplit

__version__ = "0.1.0"
