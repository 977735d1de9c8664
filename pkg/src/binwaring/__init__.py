"""Waring ranks and decompositions of binary forms in exact arithmetic."""

from .algebra import (
    BinaryForm,
    ComplexScalar,
    DiffOp,
    LinearForm,
    UniPoly,
    elementary_symmetric,
    expand_power,
    from_roots,
    is_squarefree,
    squarefree_part,
)
from .apolarity import (
    ApolarPair,
    PerpComponent,
    apolar_generators,
    apply,
    decomposition_from_apolar,
    monomial_perp,
    perp_component,
)
from .decomposition import WaringDecomposition, WaringTerm, verify_decomposition
from .errors import InputError, InvariantViolation, WaringError
from .parse import parse_form
from .realroots import (
    descartes_positive_bound,
    extract_rational_roots,
    gap_certificate,
    is_totally_real_distinct,
    sign_variations,
    sturm_count_distinct,
)
from .waring import (
    LowerBoundCertificate,
    RankResult,
    complex_rank,
    construct_real_apolar,
    monomial_complex_decomposition,
    monomial_complex_rank,
    monomial_real_decomposition,
    monomial_real_rank,
    real_lower_bound_certificate,
    real_rank_bounds,
)

__version__ = "0.1.0"
