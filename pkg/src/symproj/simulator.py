"""Dense statevector backend: exact diagonalization, expectations, variances.

Basis-state indexing is little-endian throughout: qubit 0 is the least
significant bit of the amplitude index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .pauli import DimensionError, PauliSum, PauliWord

DIAG_QUBIT_CAP = 14

# popcount lookup; registers are capped well below 2**16 basis states per mask chunk
_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


def _parity(indices: np.ndarray, mask: int) -> np.ndarray:
    """Parity of popcount(indices & mask), vectorized for arbitrary width."""
    acc = np.zeros_like(indices)
    shift = 0
    while mask >> shift:
        acc += _POP16[(indices >> shift) & ((mask >> shift) & 0xFFFF)]
        shift += 16
    return acc & 1


class NonHermitianError(ValueError):
    """Raised when an operation requires a Hermitian operator."""


@dataclass
class StateVector:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (2**self.n_qubits,):
            raise ValueError("amplitude vector has wrong length")

    @classmethod
    def computational(cls, n_qubits: int, index: int = 0) -> "StateVector":
        amps = np.zeros(2**n_qubits, dtype=complex)
        amps[index] = 1.0
        return cls(n_qubits, amps)

    @classmethod
    def random(cls, n_qubits: int, rng: np.random.Generator) -> "StateVector":
        v = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
        return cls(n_qubits, v / np.linalg.norm(v))

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(self.n_qubits, self.amplitudes / n)

    def inner(self, other: "StateVector") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def _word_action(word: PauliWord, dim: int) -> Tuple[np.ndarray, np.ndarray]:
    """Column action of a word: W|b> = phases[b] |b ^ x_mask>."""
    idx = np.arange(dim, dtype=np.int64)
    # per-qubit rule: Z|b> = (-1)^b |b>, Y|b> = i(-1)^b |1-b>, X|b> = |1-b>
    phases = np.where(_parity(idx, word.z_mask), -1.0, 1.0).astype(complex)
    phases *= 1j ** ((word.x_mask & word.z_mask).bit_count())
    return idx ^ word.x_mask, phases


def apply(op: PauliSum, state: StateVector) -> StateVector:
    """Linear action term by term; the result is generally unnormalized."""
    if op.n_qubits != state.n_qubits:
        raise DimensionError("operator and state act on different registers")
    dim = 2**state.n_qubits
    out = np.zeros(dim, dtype=complex)
    for word, coeff in op:
        targets, phases = _word_action(word, dim)
        out[targets] += coeff * phases * state.amplitudes
    return StateVector(state.n_qubits, out)


def dense_matrix(op: PauliSum) -> np.ndarray:
    """Dense matrix of a PauliSum (little-endian ordering)."""
    dim = 2**op.n_qubits
    mat = np.zeros((dim, dim), dtype=complex)
    cols = np.arange(dim, dtype=np.int64)
    for word, coeff in op:
        targets, phases = _word_action(word, dim)
        mat[targets, cols] += coeff * phases
    return mat


def expectation(op: PauliSum, state: StateVector, imag_tol: float = 1e-10) -> float:
    """<s|op|s> for Hermitian op and normalized s."""
    if not op.is_hermitian():
        raise NonHermitianError("expectation requires a Hermitian operator")
    val = state.inner(apply(op, state))
    if abs(val.imag) > imag_tol:
        raise NonHermitianError(f"imaginary residue {val.imag:.3e} exceeds tolerance")
    return val.real


def variance(op: PauliSum, state: StateVector) -> float:
    """<op^2> - <op>^2, clamped to zero within -1e-12."""
    if not op.is_hermitian():
        raise NonHermitianError("variance requires a Hermitian operator")
    branch = apply(op, state)
    mean = state.inner(branch)
    var = branch.inner(branch).real - abs(mean) ** 2
    if var < -1e-12:
        raise NonHermitianError(f"variance {var:.3e} below tolerance; state not normalized?")
    return max(var, 0.0)


def exact_diagonalize(op: PauliSum, cap: int = DIAG_QUBIT_CAP) -> Tuple[np.ndarray, np.ndarray]:
    """Full spectrum, eigenvalues ascending; columns of the second array are
    the matching eigenvectors."""
    if op.n_qubits > cap:
        raise ValueError(f"register of {op.n_qubits} qubits exceeds the cap of {cap}")
    if not op.is_hermitian():
        raise NonHermitianError("exact_diagonalize requires a Hermitian operator")
    vals, vecs = np.linalg.eigh(dense_matrix(op))
    return vals, vecs


def sector_ground_energy(h: PauliSum, projector_op: PauliSum,
                         membership_tol: float = 1e-8) -> float:
    """Minimum eigenvalue of h restricted to the image of an exact projector.

    Degenerate eigenspaces of h are re-diagonalized inside the projector image
    so that sector membership is decided per invariant subspace, not per
    arbitrary eigenvector choice.
    """
    if h.n_qubits != projector_op.n_qubits:
        raise DimensionError("Hamiltonian and projector registers differ")
    vals, vecs = exact_diagonalize(h)
    pmat = dense_matrix(projector_op)
    best = None
    i = 0
    dim = len(vals)
    while i < dim:
        j = i
        while j + 1 < dim and abs(vals[j + 1] - vals[i]) < 1e-9:
            j += 1
        block = vecs[:, i : j + 1]
        # weight of the projector inside this (possibly degenerate) eigenspace
        overlap = block.conj().T @ pmat @ block
        w = np.linalg.eigvalsh(overlap)
        if w[-1] > 1.0 - membership_tol:
            best = vals[i] if best is None else min(best, vals[i])
        i = j + 1
    if best is None:
        raise ValueError("projector image contains no eigenvector of h (empty sector)")
    return float(best)
