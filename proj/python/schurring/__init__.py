"""Schur rings over elementary abelian groups of order q^2 built from line partitions."""

from ._core import (
    DivisionByZero,
    Error,
    Field,
    ParseError,
    Partition,
    PreconditionError,
    SizingError,
    VerificationFailure,
    bell_number,
    census,
    criterion,
    cross_validate,
    fixing_map_checks,
    partitions,
    preserving_group_order,
    run,
    schurian_test,
    structure_constants,
    verify_schur_ring,
)

__all__ = [
    "DivisionByZero",
    "Error",
    "Field",
    "ParseError",
    "Partition",
    "PreconditionError",
    "SizingError",
    "VerificationFailure",
    "bell_number",
    "census",
    "criterion",
    "cross_validate",
    "fixing_map_checks",
    "partitions",
    "preserving_group_order",
    "run",
    "schurian_test",
    "structure_constants",
    "verify_schur_ring",
]

__version__ = "0.1.0"
