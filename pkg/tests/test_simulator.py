import numpy as np
import pytest

from symproj import simulator
from symproj.pauli import PauliSum, PauliWord
from symproj.simulator import StateVector

from conftest import dense_sum, random_hermitian_sum, random_sum


def test_identity_and_flip():
    s = StateVector.computational(1, 0)
    out = simulator.apply(PauliSum.identity(1), s)
    assert np.allclose(out.amplitudes, s.amplitudes)
    flipped = simulator.apply(PauliSum.from_label("X0", 1), s)
    assert np.allclose(flipped.amplitudes, [0, 1])


def test_apply_matches_dense(rng):
    for _ in range(30):
        op = random_sum(rng, 6, 8)
        s = StateVector.random(6, rng)
        out = simulator.apply(op, s)
        assert np.allclose(out.amplitudes, dense_sum(op) @ s.amplitudes, atol=1e-12)


def test_apply_is_linear(rng):
    op = random_sum(rng, 4, 6)
    a = StateVector.random(4, rng)
    b = StateVector.random(4, rng)
    combo = StateVector(4, 0.3 * a.amplitudes + 0.7j * b.amplitudes)
    lhs = simulator.apply(op, combo).amplitudes
    rhs = 0.3 * simulator.apply(op, a).amplitudes + 0.7j * simulator.apply(op, b).amplitudes
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_dense_matrix_matches_kron_oracle(rng):
    for _ in range(20):
        op = random_sum(rng, 4, 6)
        assert np.allclose(simulator.dense_matrix(op), dense_sum(op), atol=1e-12)


def test_expectation_basics():
    z0 = PauliSum.from_label("Z0", 1)
    assert simulator.expectation(z0, StateVector.computational(1, 0)) == pytest.approx(1.0)
    plus = StateVector(1, np.array([1, 1]) / np.sqrt(2))
    assert simulator.expectation(z0, plus) == pytest.approx(0.0, abs=1e-12)


def test_expectation_rejects_non_hermitian():
    op = PauliSum.from_label("Z0", 1, 1j)
    with pytest.raises(simulator.NonHermitianError):
        simulator.expectation(op, StateVector.computational(1))


def test_expectation_on_eigenvector(rng):
    op = random_hermitian_sum(rng, 4, 6)
    vals, vecs = simulator.exact_diagonalize(op)
    for k in (0, 5, -1):
        s = StateVector(4, vecs[:, k])
        assert simulator.expectation(op, s) == pytest.approx(vals[k], abs=1e-10)


def test_variance_zero_iff_eigenstate(rng):
    op = random_hermitian_sum(rng, 4, 6)
    vals, vecs = simulator.exact_diagonalize(op)
    s = StateVector(4, vecs[:, 2])
    assert simulator.variance(op, s) == pytest.approx(0.0, abs=1e-10)
    # eigenvalue equation holds whenever the variance vanishes
    branch = simulator.apply(op, s)
    mean = simulator.expectation(op, s)
    assert np.linalg.norm(branch.amplitudes - mean * s.amplitudes) < 1e-8
    # and a state mixing distinct eigenvalues has strictly positive variance
    assert vals[-1] - vals[0] > 1e-6
    bumped = StateVector(4, vecs[:, 0] + 0.1 * vecs[:, -1]).normalized()
    assert simulator.variance(op, bumped) > 1e-4


def test_variance_nonnegative_on_random_states(rng):
    op = random_hermitian_sum(rng, 4, 6)
    for _ in range(50):
        assert simulator.variance(op, StateVector.random(4, rng)) >= 0.0


def test_variance_known_value():
    # (|00> + |11>)/sqrt(2) with N = 1 - (z0+z1)/2: <N>=1, <N^2>=2
    n_op = PauliSum(2, {PauliWord.identity(2): 1.0,
                        PauliWord.from_label("Z0", 2): -0.5,
                        PauliWord.from_label("Z1", 2): -0.5})
    amps = np.zeros(4, dtype=complex)
    amps[0] = amps[3] = 1 / np.sqrt(2)
    assert simulator.variance(n_op, StateVector(2, amps)) == pytest.approx(1.0)
    # eigenstate |01>: qubit 0 occupied
    assert simulator.variance(n_op, StateVector.computational(2, 1)) == pytest.approx(0.0)


def test_exact_diagonalize_z0():
    vals, _ = simulator.exact_diagonalize(PauliSum.from_label("Z0", 1))
    assert np.allclose(vals, [-1.0, 1.0])


def test_exact_diagonalize_number_multiplicities():
    terms = {PauliWord.identity(4): 2.0}
    for q in range(4):
        terms[PauliWord.from_label(f"Z{q}", 4)] = -0.5
    n_op = PauliSum(4, terms)
    vals, _ = simulator.exact_diagonalize(n_op)
    counts = {k: int(np.sum(np.abs(vals - k) < 1e-9)) for k in range(5)}
    assert counts == {0: 1, 1: 4, 2: 6, 3: 4, 4: 1}


def test_diagonalize_cap():
    with pytest.raises(ValueError):
        simulator.exact_diagonalize(PauliSum.identity(15))


def test_sector_ground_energy(rng):
    # projector onto the z0=+1 half space of a random Hermitian op
    op = random_hermitian_sum(rng, 3, 8)
    proj = PauliSum(3, {PauliWord.identity(3): 0.5, PauliWord.from_label("Z0", 3): 0.5})
    ident = PauliSum.identity(3)
    full = simulator.sector_ground_energy(op, ident)
    vals, _ = simulator.exact_diagonalize(op)
    assert full == pytest.approx(vals[0], abs=1e-10)
    # sector energy must dominate the global ground energy
    z_op = PauliSum.from_label("Z1", 3)
    sector = simulator.sector_ground_energy(z_op, proj)
    assert sector == pytest.approx(-1.0)
