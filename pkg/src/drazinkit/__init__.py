"""Exact Drazin inverses and their closed-form representations."""
from .additive import (
    ADDITIVE_FORMULAS,
    AntiTriangularParts,
    ClineSplit,
    HypothesisReport,
    SeqQuad,
    additive_cor_pqp,
    additive_cor_q2,
    additive_pq_zero,
    additive_thm_pqq,
    anti_triangular_drazin,
    anti_triangular_parts,
    check_hypotheses,
    cline,
    cline_split,
    seq_quad,
)
from .block import (
    BLOCK_FORMULAS,
    BlockInstance,
    applicability_report,
    block_abc,
    block_bcb,
    block_bdc,
    block_cab,
    check_block_hypotheses,
)
from .core import DrazinResult, drazin, drazin_index, drazin_oracle, eigenprojection, satisfies_drazin_axioms
from .errors import (
    DrazinError,
    GenerationExhausted,
    HypothesisViolated,
    InvariantViolation,
    SeriesNotValidated,
    ShapeError,
    SingularMatrixError,
)
from .generate import CASES, GenSpec, Instance, generate, generate_batch, nonvacuity_stats
from .matrix import Matrix, block, identity, zeros
from .scalar import Scalar, format_scalar, parse_scalar

__version__ = "0.1.0"
