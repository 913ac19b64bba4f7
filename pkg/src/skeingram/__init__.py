"""Exact Kauffman-bracket skein computations over Q(zeta_24p).

Cyclotomic arithmetic, the skein module of the solid torus, the
normalized surgery invariant and Gram-matrix rank certificates for the
torus vector space.
"""

from .cyclotomic import CycNumber, RootOfUnity, conjugate, embed_root, invert, to_complex
from .gram import (
    GramReport,
    TheoremViolation,
    det_bareiss,
    det_by_reduction,
    det_sequence,
    pairing,
    singularity_scan,
    truncated_matrix,
)
from .skein import (
    ConventionError,
    ParameterError,
    SkeinElement,
    TheoryParams,
    hopf_pairing,
    kirby_color,
    make_params,
    twist,
    unknot_eval,
)
from .surgery import (
    SurgeryPresentation,
    TorusElement,
    UnsupportedFamilyError,
    hopf_link_presentation,
    lens_invariant,
    signature,
    wrt_invariant,
)

__all__ = [
    "CycNumber",
    "RootOfUnity",
    "conjugate",
    "embed_root",
    "invert",
    "to_complex",
    "GramReport",
    "TheoremViolation",
    "det_bareiss",
    "det_by_reduction",
    "det_sequence",
    "pairing",
    "singularity_scan",
    "truncated_matrix",
    "ConventionError",
    "ParameterError",
    "SkeinElement",
    "TheoryParams",
    "hopf_pairing",
    "kirby_color",
    "make_params",
    "twist",
    "unknot_eval",
    "SurgeryPresentation",
    "TorusElement",
    "UnsupportedFamilyError",
    "hopf_link_presentation",
    "lens_invariant",
    "signature",
    "wrt_invariant",
]

__version__ = "0.1.0"
