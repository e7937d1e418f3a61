"""Exact Drazin/group-inverse computation over the Gaussian rationals,
plus verification of the side-condition transfer identities."""

from .errors import (
    ConditionsViolatedError,
    GenerationExhaustedError,
    IdentityFalsifiedError,
    InternalInvariantError,
    InternalInvertibilityError,
    NoGroupInverseError,
    ParseError,
    ShapeError,
    SingularMatrixError,
)
from .scalars import GaussianRational, parse_rational
from .matrices import (
    Matrix,
    block_diag,
    inverse,
    null_space_basis,
    one_inverse,
    rank,
    rref,
    solve,
)
from .drazin import (
    DrazinData,
    commutant_basis,
    drazin,
    group_inverse,
    index_of,
    is_nilpotent,
    nilpotency_index,
    oracle_drazin,
    random_commutant_element,
)
from .transfer import (
    ConditionReport,
    Quadruple,
    TransferOutcome,
    check_conditions,
    check_strong_conditions,
    check_triple_conditions,
    jacobson_drazin,
    jacobson_inverse,
    lifted_triple,
    power_instance,
    transfer_drazin,
    transfer_gdrazin,
    transfer_group,
)

__version__ = "0.1.0"
