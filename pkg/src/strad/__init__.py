"""Exact computations for string algebras: strings, string modules, the
radical filtration, almost split sequences and the A(n, m) depth theorem."""

from .fields import QQ, PrimeField, parse_field
from .quiver import Presentation, build_a_nm, is_string_algebra, parse_presentation
from .strings import StringWord, enumerate_strings, find_bands, parse_string
from .repmod import Representation, RepMorphism, hom_space, string_module
from .radical import IndecomposableIndex, RadicalTable
from .artheory import (
    ARSequence,
    almost_split_certify,
    ar_quiver,
    ar_sequence_ending_at,
    ar_sequence_starting_at,
    is_sectional,
    tau,
    tau_inverse,
)
from .verify import build_sectional_chain, verify_lemma_s2p1, verify_main_theorem

__version__ = "0.1.0"
