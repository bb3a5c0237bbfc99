"""Iso-spectral fermion-to-qubit transformations and stationary-qubit reduction.

Every encoding here is a linear storage rule over GF(2): qubit k stores the
mod-2 sum of mode occupations in a set S(k).  Jordan-Wigner stores each mode
directly, parity stores running prefixes, Bravyi-Kitaev stores Fenwick-tree
segments.  All ladder-operator formulas are derived from three index sets per
qubit:

  update set U(k):  qubits whose stored value flips when mode k flips
  flip set   F(k):  qubits (other than k) needed to read occupation n_k
  parity set P(k):  qubits whose product gives the parity of modes < k

with the remainder set R(k) = P(k) - F(k).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .fermion import FermionOperator
from .pauli import ARITHMETIC_EPS, PauliSum, PauliWord, sum_multiply


class EncodingKind(str, Enum):
    JW = "jw"
    PARITY = "parity"
    BK = "bk"


def _fenwick_storage(n: int) -> np.ndarray:
    """Fenwick-tree storage matrix: beta[j, i] = 1 iff qubit j stores mode i.

    Standard recursive segmentation with the last node as root, so the last
    qubit always stores the total occupation parity.
    """
    beta = np.zeros((n, n), dtype=np.int8)
    parent: List[int | None] = [None] * n

    def build(left: int, right: int, par: int):
        if left >= right:
            return
        pivot = (left + right) >> 1
        parent[pivot] = par
        build(left, pivot, pivot)
        build(pivot + 1, right, par)

    if n:
        build(0, n - 1, n - 1)
        for j in range(n):
            beta[j, j] = 1
            k = parent[j]
            while k is not None:
                beta[k, j] = 1
                k = parent[k]
    return beta


def _storage_matrix(kind: EncodingKind, n: int) -> np.ndarray:
    if kind == EncodingKind.JW:
        return np.eye(n, dtype=np.int8)
    if kind == EncodingKind.PARITY:
        return np.tril(np.ones((n, n), dtype=np.int8))
    return _fenwick_storage(n)


def _gf2_inverse(beta: np.ndarray) -> np.ndarray:
    n = beta.shape[0]
    aug = np.concatenate([beta.astype(np.int8) % 2, np.eye(n, dtype=np.int8)], axis=1)
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r, col])
        if pivot != col:
            aug[[col, pivot]] = aug[[pivot, col]]
        for r in range(n):
            if r != col and aug[r, col]:
                aug[r] ^= aug[col]
    return aug[:, n:]


@dataclass(frozen=True)
class IndexSets:
    """Per-qubit flip/update/parity sets for one encoding instance."""

    flip: Tuple[frozenset, ...]
    update: Tuple[frozenset, ...]
    parity: Tuple[frozenset, ...]

    def flip_closed(self, k: int) -> frozenset:
        """The underlined flip set F(k) union {k}."""
        return self.flip[k] | {k}

    def remainder(self, k: int) -> frozenset:
        return self.parity[k] - self.flip[k]


@dataclass(frozen=True)
class Encoding:
    kind: EncodingKind
    n_qubits: int

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")

    def index_sets(self) -> IndexSets:
        return _index_sets_cached(self.kind, self.n_qubits)


_INDEX_CACHE: Dict[Tuple[EncodingKind, int], IndexSets] = {}


def _index_sets_cached(kind: EncodingKind, n: int) -> IndexSets:
    key = (kind, n)
    if key not in _INDEX_CACHE:
        beta = _storage_matrix(kind, n)
        inv = _gf2_inverse(beta)
        flip, update, parity = [], [], []
        for k in range(n):
            flip.append(frozenset(int(i) for i in np.flatnonzero(inv[k]) if i != k))
            update.append(frozenset(int(j) for j in np.flatnonzero(beta[:, k]) if j != k))
            prefix = inv[:k].sum(axis=0) % 2
            parity.append(frozenset(int(i) for i in np.flatnonzero(prefix)))
        _INDEX_CACHE[key] = IndexSets(tuple(flip), tuple(update), tuple(parity))
    return _INDEX_CACHE[key]


def _mask(qubits, n: int) -> int:
    m = 0
    for q in qubits:
        m |= 1 << q
    return m


def z_word(qubits, n: int) -> PauliWord:
    return PauliWord(n, 0, _mask(qubits, n))


def _ladder(enc: Encoding, mode: int, dagger: bool) -> PauliSum:
    """Pauli form of a single creation/annihilation operator.

    a+_k = X_U(k) (X_k Z_P(k) - i Y_k Z_R(k)) / 2 and a_k is its adjoint.
    """
    n = enc.n_qubits
    sets = enc.index_sets()
    u = _mask(sets.update[mode], n)
    p = _mask(sets.parity[mode], n)
    r = _mask(sets.remainder(mode), n)
    bit = 1 << mode
    real_word = PauliWord(n, u | bit, p)
    imag_word = PauliWord(n, u | bit, r | bit)
    sign = -0.5j if dagger else 0.5j
    return PauliSum(n, {real_word: 0.5, imag_word: sign})


def encode_operator(op: FermionOperator, enc: Encoding,
                    prune: float = ARITHMETIC_EPS) -> PauliSum:
    """Encode a second-quantized operator; result is pruned at the arithmetic
    threshold so Hermitian inputs come out syntactically Hermitian."""
    if op.n_spin_orbitals != enc.n_qubits:
        raise ValueError(
            f"operator has {op.n_spin_orbitals} modes, encoding {enc.n_qubits} qubits")
    n = enc.n_qubits
    total: Dict[PauliWord, complex] = {}
    for coeff, string in op.terms:
        acc = PauliSum.identity(n, coeff)
        for mode, dagger in string:
            acc = sum_multiply(acc, _ladder(enc, mode, dagger), prune=0.0)
        for word, c in acc:
            total[word] = total.get(word, 0.0) + c
    return PauliSum(n, total, prune=prune)


# -- closed-form qubit expressions (independent oracles) -------------------


class UnsupportedClosedForm(ValueError):
    pass


def closed_form(symbol: str, enc: Encoding) -> PauliSum:
    """Closed-form qubit expression for N, Sz or S+, built from index sets.

    These are assembled directly from flip/update/parity sets rather than by
    running the encoder, so they can serve as an independent cross-check.
    The S+ form for BK assumes each even qubit's tree parent is its odd
    neighbor, which holds for power-of-two register sizes.
    """
    n = enc.n_qubits
    sets = enc.index_sets()
    if symbol == "N":
        terms: Dict[PauliWord, complex] = {PauliWord.identity(n): n / 2.0}
        for k in range(n):
            w = z_word(sets.flip_closed(k), n)
            terms[w] = terms.get(w, 0.0) - 0.5
        return PauliSum(n, terms)
    if n % 2:
        raise UnsupportedClosedForm("spin symbols need alpha/beta pairs")
    if symbol == "Sz":
        terms = {}
        for p in range(n // 2):
            for mode, sign in ((2 * p, -0.25), (2 * p + 1, 0.25)):
                w = z_word(sets.flip_closed(mode), n)
                terms[w] = terms.get(w, 0.0) + sign
        return PauliSum(n, terms)
    if symbol == "Splus":
        out = PauliSum.zero(n)
        for p in range(n // 2):
            a, b = 2 * p, 2 * p + 1
            lower = PauliSum(n, {PauliWord(n, 1 << a, 0): 0.25,
                                 PauliWord(n, 1 << a, 1 << a): -0.25j})
            if enc.kind == EncodingKind.JW:
                raising = PauliSum(n, {PauliWord(n, 1 << b, 0): 1.0,
                                       PauliWord(n, 1 << b, 1 << b): 1.0j})
                out = out + sum_multiply(lower, raising)
            elif enc.kind == EncodingKind.PARITY:
                # 1/4 (x_a z_{a-1} - i y_a)(z_a - z_{a+1})
                zprev = (1 << (a - 1)) if a else 0
                pair = PauliSum(n, {PauliWord(n, 1 << a, zprev): 0.25,
                                    PauliWord(n, 1 << a, 1 << a): -0.25j})
                diff = PauliSum(n, {PauliWord(n, 0, 1 << a): 1.0,
                                    PauliWord(n, 0, 1 << b): -1.0})
                out = out + sum_multiply(pair, diff)
            else:
                if b not in sets.update[a]:
                    raise UnsupportedClosedForm(
                        "BK S+ closed form needs parent(2p) = 2p+1; "
                        "use a power-of-two register")
                zset = sets.flip_closed(b) - {a}
                gate = PauliSum(n, {PauliWord.identity(n): 1.0,
                                    z_word(zset, n): -1.0})
                out = out + sum_multiply(lower, gate)
        return out
    raise UnsupportedClosedForm(f"no closed form for symbol {symbol!r}")


# -- stationary-qubit reduction ---------------------------------------------


class StationarityError(ValueError):
    """A listed qubit is acted on by X or Y in some term."""


@dataclass(frozen=True)
class ReductionRecord:
    removed: Tuple[Tuple[int, int], ...]  # (original qubit, chosen eigenvalue)
    old_to_new: Tuple[int, ...]  # -1 for removed qubits

    def describe(self) -> str:
        inner = ", ".join(f"q{q}->{v:+d}" for q, v in self.removed)
        return f"reduced[{inner}]"


def detect_stationary_qubits(op: PauliSum) -> List[int]:
    """Qubits on which every term acts as z or identity."""
    x_union = 0
    for word, _ in op:
        x_union |= word.x_mask
    return [q for q in range(op.n_qubits) if not (x_union >> q) & 1]


def reduce_stationary_qubits(op: PauliSum, assignment: Sequence[Tuple[int, int]]
                             ) -> Tuple[PauliSum, ReductionRecord]:
    """Substitute z -> +-1 on stationary qubits and compact the register.

    The result's spectrum is the restriction of op's spectrum to the chosen
    symmetry sector.
    """
    n = op.n_qubits
    removed = dict(assignment)
    for q, v in removed.items():
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} outside register")
        if v not in (1, -1):
            raise ValueError("eigenvalue must be +1 or -1")
    old_to_new: List[int] = []
    kept = 0
    for q in range(n):
        if q in removed:
            old_to_new.append(-1)
        else:
            old_to_new.append(kept)
            kept += 1
    removed_mask = _mask(removed, n)
    terms: Dict[PauliWord, complex] = {}
    for word, coeff in op:
        if word.x_mask & removed_mask:
            bad = next(q for q in removed if (word.x_mask >> q) & 1)
            raise StationarityError(
                f"qubit {bad} is not stationary: term {word.label()} acts with X/Y")
        sign = 1
        new_x = new_z = 0
        for q in range(n):
            bit = 1 << q
            if q in removed:
                if word.z_mask & bit:
                    sign *= removed[q]
            else:
                nbit = 1 << old_to_new[q]
                if word.x_mask & bit:
                    new_x |= nbit
                if word.z_mask & bit:
                    new_z |= nbit
        w = PauliWord(kept, new_x, new_z)
        terms[w] = terms.get(w, 0.0) + sign * coeff
    record = ReductionRecord(tuple(sorted(removed.items())), tuple(old_to_new))
    return PauliSum(kept, terms), record


def sector_assignments(n_removed: int):
    """All 2^k eigenvalue assignments, for sector scans."""
    from itertools import product

    return list(product((1, -1), repeat=n_removed))


def recommend_sector(h: PauliSum, qubits: Sequence[int]) -> List[Tuple[int, int]]:
    """Pick the eigenvalue assignment whose reduced Hamiltonian contains the
    global ground state.  Dense diagonalization per sector; desk scale only."""
    from . import simulator

    best = None
    for values in sector_assignments(len(qubits)):
        assignment = list(zip(qubits, values))
        reduced, _ = reduce_stationary_qubits(h, assignment)
        ground = simulator.exact_diagonalize(reduced)[0][0]
        if best is None or ground < best[0] - 1e-12:
            best = (ground, assignment)
    return best[1]
