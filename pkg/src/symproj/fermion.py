"""Second-quantized operators prior to qubit encoding.

Spin-orbital convention: interleaved (alpha, beta, alpha, beta, ...); spatial
orbital p maps to spin orbitals 2p (alpha) and 2p+1 (beta).  Operator strings
keep their given order; simplification happens after encoding, in Pauli space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

LadderString = Tuple[Tuple[int, bool], ...]  # (orbital index, dagger flag)


@dataclass(frozen=True)
class MolecularIntegrals:
    """Spatial-orbital integral tensors in physicists' convention.

    ``g[p, q, r, s]`` multiplies a+_p a+_q a_s a_r; the spatial-to-spin-orbital
    expansion is applied when the Hamiltonian is built.
    """

    h: np.ndarray
    g: np.ndarray
    core_energy: float = 0.0
    orbital_irreps: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        n = self.h.shape[0]
        if self.h.shape != (n, n) or self.g.shape != (n, n, n, n):
            raise ValueError("integral tensors dimensionally inconsistent")
        if not np.allclose(self.h, self.h.conj().T, atol=1e-10):
            raise ValueError("one-electron integrals are not Hermitian")
        if self.orbital_irreps is not None and len(self.orbital_irreps) != n:
            raise ValueError("need one irrep label per spatial orbital")

    @property
    def n_spatial(self) -> int:
        return self.h.shape[0]

    @property
    def n_spin_orbitals(self) -> int:
        return 2 * self.h.shape[0]


@dataclass
class FermionOperator:
    """Linear combination of products of creation/annihilation operators."""

    n_spin_orbitals: int
    terms: List[Tuple[complex, LadderString]] = field(default_factory=list)

    def __post_init__(self):
        for _, string in self.terms:
            for orb, _ in string:
                if not 0 <= orb < self.n_spin_orbitals:
                    raise ValueError(f"orbital {orb} outside {self.n_spin_orbitals} spin orbitals")

    @classmethod
    def zero(cls, n: int) -> "FermionOperator":
        return cls(n, [])

    @classmethod
    def identity(cls, n: int, coeff: complex = 1.0) -> "FermionOperator":
        return cls(n, [(coeff, ())])

    def add_term(self, coeff: complex, string: Sequence[Tuple[int, bool]]):
        if abs(coeff) != 0.0:
            self.terms.append((complex(coeff), tuple(string)))

    def __add__(self, other: "FermionOperator") -> "FermionOperator":
        if self.n_spin_orbitals != other.n_spin_orbitals:
            raise ValueError("spin-orbital counts differ")
        return FermionOperator(self.n_spin_orbitals, self.terms + other.terms)

    def __mul__(self, scalar: complex) -> "FermionOperator":
        if isinstance(scalar, FermionOperator):
            return self.multiply(scalar)
        return FermionOperator(self.n_spin_orbitals,
                               [(c * scalar, s) for c, s in self.terms])

    __rmul__ = __mul__

    def multiply(self, other: "FermionOperator") -> "FermionOperator":
        """Operator product by string concatenation (no normal ordering)."""
        if self.n_spin_orbitals != other.n_spin_orbitals:
            raise ValueError("spin-orbital counts differ")
        out = FermionOperator.zero(self.n_spin_orbitals)
        for ca, sa in self.terms:
            for cb, sb in other.terms:
                out.add_term(ca * cb, sa + sb)
        return out

    def dagger(self) -> "FermionOperator":
        out = FermionOperator.zero(self.n_spin_orbitals)
        for c, s in self.terms:
            out.add_term(c.conjugate(), tuple((orb, not dag) for orb, dag in reversed(s)))
        return out

    def relabel_modes(self, permutation: Sequence[int]) -> "FermionOperator":
        """Rename spin orbitals: mode i becomes permutation[i].

        A pure relabeling, so spectra are preserved.  Used to realize encoding
        conventions (e.g. alpha-major mode order) without touching the
        interleaved integral expansion.
        """
        if sorted(permutation) != list(range(self.n_spin_orbitals)):
            raise ValueError("not a permutation of the spin orbitals")
        out = FermionOperator.zero(self.n_spin_orbitals)
        for c, s in self.terms:
            out.add_term(c, tuple((permutation[orb], dag) for orb, dag in s))
        return out

    def dense_fock_matrix(self) -> np.ndarray:
        """Occupation-number-basis matrix, built directly from ladder-operator
        action with fermionic sign strings (independent of any encoding).

        Basis index b has orbital p occupied iff bit p of b is set.
        """
        n = self.n_spin_orbitals
        if n > 16:
            raise ValueError("dense Fock construction capped at 16 modes")
        dim = 1 << n
        mat = np.zeros((dim, dim), dtype=complex)
        for coeff, string in self.terms:
            for b in range(dim):
                state, sign = b, 1
                ok = True
                for orb, dagger in reversed(string):
                    bit = 1 << orb
                    occupied = bool(state & bit)
                    if dagger == occupied:
                        ok = False
                        break
                    if (state & (bit - 1)).bit_count() % 2:
                        sign = -sign
                    state ^= bit
                if ok:
                    mat[state, b] += coeff * sign
        return mat


def alpha_major_permutation(n_spin_orbitals: int) -> List[int]:
    """Relabeling that maps interleaved modes to alpha-block-then-beta-block."""
    if n_spin_orbitals % 2:
        raise ValueError("need an even number of spin orbitals")
    half = n_spin_orbitals // 2
    perm = [0] * n_spin_orbitals
    for p in range(half):
        perm[2 * p] = p
        perm[2 * p + 1] = half + p
    return perm


def build_hamiltonian(ints: MolecularIntegrals) -> FermionOperator:
    """Electronic Hamiltonian sum h_pq a+_p a_q + 1/2 sum g_pqrs a+_p a+_q a_s a_r
    over interleaved spin orbitals, plus the core-energy identity term."""
    n_spatial = ints.n_spatial
    n = ints.n_spin_orbitals
    op = FermionOperator.zero(n)
    if ints.core_energy != 0.0:
        op.add_term(ints.core_energy, ())
    for p in range(n_spatial):
        for q in range(n_spatial):
            c = ints.h[p, q]
            if abs(c) < 1e-14:
                continue
            for s in (0, 1):
                op.add_term(c, ((2 * p + s, True), (2 * q + s, False)))
    # physicists' <pq|rs>: spin of p matches r, spin of q matches s
    for p in range(n_spatial):
        for q in range(n_spatial):
            for r in range(n_spatial):
                for s in range(n_spatial):
                    c = ints.g[p, q, r, s]
                    if abs(c) < 1e-14:
                        continue
                    for s1 in (0, 1):
                        for s2 in (0, 1):
                            i, j = 2 * p + s1, 2 * q + s2
                            k, l = 2 * r + s1, 2 * s + s2
                            if i == j or k == l:
                                continue
                            op.add_term(0.5 * c, ((i, True), (j, True), (l, False), (k, False)))
    return op


def number_operator(n: int) -> FermionOperator:
    if n < 1:
        raise ValueError("need at least one spin orbital")
    op = FermionOperator.zero(n)
    for p in range(n):
        op.add_term(1.0, ((p, True), (p, False)))
    return op


def _require_pairs(n: int):
    if n % 2:
        raise ValueError("spin operators need an even spin-orbital count (alpha/beta pairs)")


def sz_operator(n: int) -> FermionOperator:
    _require_pairs(n)
    op = FermionOperator.zero(n)
    for p in range(n // 2):
        op.add_term(0.5, ((2 * p, True), (2 * p, False)))
        op.add_term(-0.5, ((2 * p + 1, True), (2 * p + 1, False)))
    return op


def splus_operator(n: int) -> FermionOperator:
    _require_pairs(n)
    op = FermionOperator.zero(n)
    for p in range(n // 2):
        op.add_term(1.0, ((2 * p, True), (2 * p + 1, False)))
    return op


def s2_operator(n: int) -> FermionOperator:
    """S^2 = S+ S- + Sz^2 + Sz."""
    _require_pairs(n)
    sp = splus_operator(n)
    sz = sz_operator(n)
    return sp.multiply(sp.dagger()) + sz.multiply(sz) + sz


def orbital_rotation_generator(kappa: np.ndarray, spin_duplicate: bool = False,
                               tol: float = 1e-10) -> FermionOperator:
    """kappa-hat = sum kappa_ij a+_i a_j for an anti-Hermitian matrix.

    The sum is assembled from the diagonal plus the real/imaginary split of the
    upper triangle, which makes anti-Hermiticity explicit term by term.  With
    ``spin_duplicate`` the matrix is over spatial orbitals and is copied onto
    both spin channels of the interleaved register.
    """
    kappa = np.asarray(kappa, dtype=complex)
    if not np.allclose(kappa, -kappa.conj().T, atol=tol):
        raise ValueError("kappa is not anti-Hermitian")
    m = kappa.shape[0]
    if spin_duplicate:
        n = 2 * m
        modes = lambda i, s: 2 * i + s
        spins = (0, 1)
    else:
        n = m
        modes = lambda i, s: i
        spins = (0,)
    op = FermionOperator.zero(n)
    for s in spins:
        for i in range(m):
            if abs(kappa[i, i]) > tol:
                op.add_term(kappa[i, i], ((modes(i, s), True), (modes(i, s), False)))
        for i in range(m):
            for j in range(i + 1, m):
                re, im = kappa[i, j].real, kappa[i, j].imag
                if abs(re) > tol:
                    op.add_term(-re, ((modes(j, s), True), (modes(i, s), False)))
                    op.add_term(re, ((modes(i, s), True), (modes(j, s), False)))
                if abs(im) > tol:
                    op.add_term(1j * im, ((modes(i, s), True), (modes(j, s), False)))
                    op.add_term(1j * im, ((modes(j, s), True), (modes(i, s), False)))
    return op
