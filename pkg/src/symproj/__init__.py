"""Symmetry projectors and symmetry-constrained variational functionals for
qubit-encoded electronic-structure Hamiltonians, with an exact statevector
backend at desk scale."""

from .pauli import (
    DEFAULT_CUTOFF,
    DimensionError,
    PauliSum,
    PauliWord,
    commutator,
    sum_multiply,
    term_count,
    unique_union_count,
    word_multiply,
)

__all__ = [
    "DEFAULT_CUTOFF",
    "DimensionError",
    "PauliSum",
    "PauliWord",
    "commutator",
    "sum_multiply",
    "term_count",
    "unique_union_count",
    "word_multiply",
]

__version__ = "0.1.0"
