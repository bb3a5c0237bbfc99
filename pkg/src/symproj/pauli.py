"""Exact symbolic algebra over tensor products of Pauli operators.

Words are stored in the symplectic bit convention: qubit q carries X iff bit q
of ``x_mask`` is set, Z iff bit q of ``z_mask`` is set, Y iff both, identity iff
neither.  Words are canonical (phase-free) hash keys; phases produced by
multiplication are tracked separately so that sums stay well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Tuple

# Reporting cutoff used for term counts (Table-style reports) and a tighter
# threshold for intermediate arithmetic so float dust never inflates counts.
DEFAULT_CUTOFF = 1e-9
ARITHMETIC_EPS = 1e-12

_PHASES = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


class DimensionError(ValueError):
    """Raised when operands act on different qubit registers."""


@dataclass(frozen=True)
class PauliWord:
    """A single tensor product of Pauli operators on ``n_qubits`` qubits."""

    n_qubits: int
    x_mask: int = 0
    z_mask: int = 0

    def __post_init__(self):
        if self.n_qubits < 0:
            raise ValueError("n_qubits must be nonnegative")
        full = (1 << self.n_qubits) - 1
        if self.x_mask & ~full or self.z_mask & ~full:
            raise ValueError("mask bits set beyond n_qubits")

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliWord":
        return cls(n_qubits, 0, 0)

    @classmethod
    def from_label(cls, label: str, n_qubits: int) -> "PauliWord":
        """Parse the canonical text form, e.g. ``"X3 Z1 Y0"`` or ``"I"``."""
        label = label.strip()
        x = z = 0
        if label and label != "I":
            for token in label.split():
                kind, idx = token[0].upper(), int(token[1:])
                if idx >= n_qubits or idx < 0:
                    raise ValueError(f"qubit {idx} outside register of {n_qubits}")
                bit = 1 << idx
                if (x | z) & bit:
                    raise ValueError(f"qubit {idx} assigned twice in {label!r}")
                if kind == "X":
                    x |= bit
                elif kind == "Y":
                    x |= bit
                    z |= bit
                elif kind == "Z":
                    z |= bit
                else:
                    raise ValueError(f"bad Pauli letter in token {token!r}")
        return cls(n_qubits, x, z)

    @classmethod
    def from_ops(cls, ops: Iterable[Tuple[int, str]], n_qubits: int) -> "PauliWord":
        return cls.from_label(" ".join(f"{p}{q}" for q, p in ops) or "I", n_qubits)

    def label(self) -> str:
        """Canonical text form: space-separated, descending qubit index."""
        parts = []
        for q in range(self.n_qubits - 1, -1, -1):
            bit = 1 << q
            xs, zs = bool(self.x_mask & bit), bool(self.z_mask & bit)
            if xs and zs:
                parts.append(f"Y{q}")
            elif xs:
                parts.append(f"X{q}")
            elif zs:
                parts.append(f"Z{q}")
        return " ".join(parts) if parts else "I"

    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def weight(self) -> int:
        return (self.x_mask | self.z_mask).bit_count()

    def support(self) -> Tuple[int, ...]:
        m = self.x_mask | self.z_mask
        return tuple(q for q in range(self.n_qubits) if m & (1 << q))

    def commutes_with(self, other: "PauliWord") -> bool:
        """Symplectic overlap parity: words either commute or anticommute."""
        _check_dims(self.n_qubits, other.n_qubits)
        anti = (self.x_mask & other.z_mask).bit_count() + (self.z_mask & other.x_mask).bit_count()
        return anti % 2 == 0

    def __repr__(self):
        return f"PauliWord({self.n_qubits}, '{self.label()}')"


def _check_dims(a: int, b: int):
    if a != b:
        raise DimensionError(f"qubit count mismatch: {a} != {b}")


def word_multiply(a: PauliWord, b: PauliWord) -> Tuple[PauliWord, complex]:
    """Product of two words: ``a * b = phase * c`` with phase in {1, i, -1, -i}.

    Uses the symplectic bit rule throughout; no matrices.  Writing each word as
    i^{|x&z|} X^x Z^z, the i-exponent of the product is
    ``p_a + p_b + 2*|z_a & x_b| - p_ab  (mod 4)``.
    """
    _check_dims(a.n_qubits, b.n_qubits)
    x = a.x_mask ^ b.x_mask
    z = a.z_mask ^ b.z_mask
    exp = (
        (a.x_mask & a.z_mask).bit_count()
        + (b.x_mask & b.z_mask).bit_count()
        + 2 * (a.z_mask & b.x_mask).bit_count()
        - (x & z).bit_count()
    ) % 4
    return PauliWord(a.n_qubits, x, z), _PHASES[exp]


class PauliSum:
    """Complex-weighted linear combination of Pauli words.

    Immutable by convention: all arithmetic returns new instances, so values
    can be shared freely across threads.
    """

    __slots__ = ("n_qubits", "terms")

    def __init__(self, n_qubits: int, terms: Mapping[PauliWord, complex] | None = None,
                 prune: float = ARITHMETIC_EPS):
        self.n_qubits = n_qubits
        clean: Dict[PauliWord, complex] = {}
        if terms:
            for word, coeff in terms.items():
                if word.n_qubits != n_qubits:
                    raise DimensionError("all words must share n_qubits")
                c = complex(coeff)
                if abs(c) > prune:
                    clean[word] = c
        self.terms = clean

    @classmethod
    def zero(cls, n_qubits: int) -> "PauliSum":
        return cls(n_qubits)

    @classmethod
    def identity(cls, n_qubits: int, coeff: complex = 1.0) -> "PauliSum":
        return cls(n_qubits, {PauliWord.identity(n_qubits): coeff})

    @classmethod
    def from_word(cls, word: PauliWord, coeff: complex = 1.0) -> "PauliSum":
        return cls(word.n_qubits, {word: coeff})

    @classmethod
    def from_label(cls, label: str, n_qubits: int, coeff: complex = 1.0) -> "PauliSum":
        return cls.from_word(PauliWord.from_label(label, n_qubits), coeff)

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[PauliWord, complex]]:
        return iter(self.terms.items())

    def coefficient(self, word: PauliWord) -> complex:
        return self.terms.get(word, 0.0 + 0.0j)

    def is_zero(self, tol: float = ARITHMETIC_EPS) -> bool:
        return all(abs(c) <= tol for c in self.terms.values())

    def norm(self) -> float:
        """Two-norm of the coefficient vector."""
        return sum(abs(c) ** 2 for c in self.terms.values()) ** 0.5

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        """Syntactic Hermiticity: every coefficient real (words are Hermitian)."""
        return all(abs(c.imag) <= tol for c in self.terms.values())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "PauliSum") -> "PauliSum":
        _check_dims(self.n_qubits, other.n_qubits)
        out = dict(self.terms)
        for word, c in other.terms.items():
            out[word] = out.get(word, 0.0) + c
        return PauliSum(self.n_qubits, out)

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + (other * -1.0)

    def __mul__(self, scalar: complex) -> "PauliSum":
        if isinstance(scalar, PauliSum):
            return sum_multiply(self, scalar)
        return PauliSum(self.n_qubits, {w: c * scalar for w, c in self.terms.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "PauliSum") -> "PauliSum":
        return sum_multiply(self, other)

    def dagger(self) -> "PauliSum":
        return PauliSum(self.n_qubits, {w: c.conjugate() for w, c in self.terms.items()})

    def pruned(self, threshold: float) -> "PauliSum":
        return PauliSum(self.n_qubits, self.terms, prune=threshold)

    def real_part(self) -> "PauliSum":
        """Hermitian part (A + A†)/2, as a coefficient-wise real projection."""
        return PauliSum(self.n_qubits, {w: complex(c.real) for w, c in self.terms.items()})

    def words(self, cutoff: float = DEFAULT_CUTOFF) -> set:
        return {w for w, c in self.terms.items() if abs(c) > cutoff}

    def __repr__(self):
        if not self.terms:
            return "PauliSum(0)"
        parts = []
        for word in sorted(self.terms, key=lambda w: (w.weight(), w.label()))[:8]:
            parts.append(f"({self.terms[word]:.6g})*{word.label()}")
        more = "" if len(self.terms) <= 8 else f" + {len(self.terms) - 8} more"
        return " + ".join(parts) + more


def sum_multiply(a: PauliSum, b: PauliSum, prune: float = ARITHMETIC_EPS) -> PauliSum:
    """Distributive product with phase bookkeeping and like-term merging."""
    _check_dims(a.n_qubits, b.n_qubits)
    if prune < 0:
        raise ValueError("prune threshold must be nonnegative")
    out: Dict[PauliWord, complex] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            word, phase = word_multiply(wa, wb)
            out[word] = out.get(word, 0.0) + ca * cb * phase
    return PauliSum(a.n_qubits, out, prune=prune)


def commutator(a: PauliSum, b: PauliSum, prune: float = ARITHMETIC_EPS) -> PauliSum:
    """ab - ba, skipping word pairs that commute at the symplectic level."""
    _check_dims(a.n_qubits, b.n_qubits)
    out: Dict[PauliWord, complex] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            if wa.commutes_with(wb):
                continue
            # For anticommuting words ab = -ba, so ab - ba = 2 ab.
            word, phase = word_multiply(wa, wb)
            out[word] = out.get(word, 0.0) + 2.0 * ca * cb * phase
    return PauliSum(a.n_qubits, out, prune=prune)


def term_count(a: PauliSum, cutoff: float = DEFAULT_CUTOFF) -> int:
    """Number of words with |coefficient| > cutoff (identity counts)."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    return sum(1 for c in a.terms.values() if abs(c) > cutoff)


def unique_union_count(a: PauliSum, b: PauliSum, cutoff: float = DEFAULT_CUTOFF) -> int:
    """Cardinality of the union of the surviving word sets of a and b."""
    _check_dims(a.n_qubits, b.n_qubits)
    return len(a.words(cutoff) | b.words(cutoff))
