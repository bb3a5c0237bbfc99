"""Shared oracles: dense matrices built from literal 2x2 Paulis via np.kron,
independent of the package's own phase bookkeeping."""

from __future__ import annotations

import numpy as np
import pytest

from symproj.pauli import PauliSum, PauliWord

I2 = np.eye(2, dtype=complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)

_SINGLE = {"I": I2, "X": X2, "Y": Y2, "Z": Z2}


def word_letters(word: PauliWord) -> list:
    letters = []
    for q in range(word.n_qubits):
        bit = 1 << q
        xs, zs = bool(word.x_mask & bit), bool(word.z_mask & bit)
        letters.append("Y" if xs and zs else "X" if xs else "Z" if zs else "I")
    return letters


def dense_word(word: PauliWord) -> np.ndarray:
    """Tensor product with qubit 0 least significant (little-endian)."""
    mat = np.eye(1, dtype=complex)
    for letter in word_letters(word):
        mat = np.kron(_SINGLE[letter], mat)
    return mat


def dense_sum(op: PauliSum) -> np.ndarray:
    dim = 2**op.n_qubits
    mat = np.zeros((dim, dim), dtype=complex)
    for word, coeff in op:
        mat += coeff * dense_word(word)
    return mat


def random_word(rng: np.random.Generator, n_qubits: int) -> PauliWord:
    x = int(rng.integers(0, 1 << n_qubits))
    z = int(rng.integers(0, 1 << n_qubits))
    return PauliWord(n_qubits, x, z)


def random_sum(rng: np.random.Generator, n_qubits: int, n_terms: int) -> PauliSum:
    terms = {}
    for _ in range(n_terms):
        w = random_word(rng, n_qubits)
        terms[w] = complex(rng.normal(), rng.normal())
    return PauliSum(n_qubits, terms)


def random_hermitian_sum(rng: np.random.Generator, n_qubits: int, n_terms: int) -> PauliSum:
    terms = {}
    for _ in range(n_terms):
        w = random_word(rng, n_qubits)
        terms[w] = complex(rng.normal())
    return PauliSum(n_qubits, terms)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
