"""Exact computations around induced additive actions on projective varieties.

Local algebras are given by structure constants over Q, S-pairs pair such an
algebra with a generating subspace of its maximal ideal, and the Hirzebruch
surface modules build the monomial and derivation-based S-pairs of an ample
divisor.
"""

from .algebra import AlgebraTable, LocalView, hilbert_samuel, is_gorenstein, local_view, socle
from .errors import AddactError
from .hirzebruch import HDivisor, is_ample, normalized_spair, sections, twisted_spair
from .isomorphy import decide_monomial_2gen, fingerprint, verify_certificate
from .monomial import MonomialQuotient, quotient_from_generators
from .spair import SPair, parametrize_orbit, validate

__all__ = [
    "AddactError",
    "AlgebraTable",
    "HDivisor",
    "LocalView",
    "MonomialQuotient",
    "SPair",
    "decide_monomial_2gen",
    "fingerprint",
    "hilbert_samuel",
    "is_ample",
    "is_gorenstein",
    "local_view",
    "normalized_spair",
    "parametrize_orbit",
    "quotient_from_generators",
    "sections",
    "socle",
    "twisted_spair",
    "validate",
    "verify_certificate",
]

__version__ = "0.1.0"
