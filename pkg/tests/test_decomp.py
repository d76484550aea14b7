import numpy as np
import pytest
from scipy.linalg import expm

from cartan_qsd.circuit import cnot_count, circuit_to_unitary
from cartan_qsd.decomp import (
    BlockDiagPair,
    EulerAngles,
    cnot_formula,
    demultiplex_aiii,
    euler_matrix,
    euler_yzy,
    involution_ai,
    involution_x,
    involution_y,
    involution_z,
    kak2q,
    low_qubit_signs,
    qsd,
    split_tensor_sum,
)
from cartan_qsd.errors import NonUnitaryError
from cartan_qsd.magic import INTERACTION_SIGNS, MAGIC_BASIS, canonical_unitary, params_from_half_phases
from cartan_qsd.matcore import phase_aligned_distance
from oracles import NAMED_GATES, X, Y, Z, canonical, embed, haar, multiplexed


def block_diag(u0, u1):
    return BlockDiagPair(u0, u1).matrix()


class TestInvolutions:
    def test_ai_fixes_real(self):
        o = np.linalg.qr(np.random.default_rng(0).normal(size=(4, 4)))[0]
        np.testing.assert_array_equal(involution_ai(o), o)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_z_matches_conjugation(self, n):
        u = haar(n, n)
        zn = embed(Z, n, n)
        np.testing.assert_allclose(involution_z(u, n), zn @ u @ zn, atol=1e-15)
        np.testing.assert_array_equal(involution_z(zn, n), zn)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_x_matches_conjugation(self, n):
        u = haar(n, n + 7)
        xn = embed(X, n, n)
        np.testing.assert_allclose(involution_x(u, n), xn @ u @ xn, atol=1e-15)

    def test_x_swaps_blocks(self):
        u0, u1 = haar(2, 1), haar(2, 2)
        np.testing.assert_array_equal(involution_x(block_diag(u0, u1), 3), block_diag(u1, u0))

    def test_y(self):
        u = haar(1, 4)
        np.testing.assert_allclose(involution_y(u), Y @ u @ Y, atol=1e-15)

    def test_low_qubit_signs(self):
        np.testing.assert_array_equal(low_qubit_signs(2), [1, -1, 1, -1])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            involution_z(np.eye(4), 3)
        with pytest.raises(ValueError):
            involution_x(np.eye(4), 1)


class TestEuler:
    def test_identity(self):
        angles, phase = euler_yzy(np.eye(2))
        assert angles == (0, 0, 0)
        assert phase == 0

    @pytest.mark.parametrize("theta", [0.3, -1.2, 1.5, 1e-9])
    def test_pure_z(self, theta):
        angles, phase = euler_yzy(expm(1j * theta * Z))
        assert angles == EulerAngles(0.0, theta, 0.0) or np.allclose(angles, (0, theta, 0), atol=1e-15)
        assert phase == pytest.approx(0, abs=1e-15)

    @pytest.mark.parametrize("seed", range(20))
    def test_haar(self, seed):
        u = haar(1, seed)
        angles, phase = euler_yzy(u)
        oracle = expm(1j * angles.a * Y) @ expm(1j * angles.b * Z) @ expm(1j * angles.c * Y)
        np.testing.assert_allclose(np.exp(1j * phase) * oracle, u, atol=1e-12)
        np.testing.assert_allclose(euler_matrix(angles), oracle, atol=1e-14)

    @pytest.mark.parametrize("u", [X, Y, Z, np.array([[1, 1], [1, -1]]) / np.sqrt(2), expm(0.4j * Y)])
    def test_special(self, u):
        angles, phase = euler_yzy(u)
        np.testing.assert_allclose(np.exp(1j * phase) * euler_matrix(angles), u, atol=1e-13)

    def test_trace(self):
        trace = []
        euler_yzy(haar(1, 0), trace=trace)
        assert [r.kind for r in trace] == ["euler"]
        assert trace[0].involution_residual < 1e-12

    def test_rejects(self):
        with pytest.raises(ValueError):
            euler_yzy(np.eye(4))
        with pytest.raises(NonUnitaryError):
            euler_yzy(np.diag([1, 2]))


class TestMagicBasis:
    def test_unitary(self):
        np.testing.assert_allclose(MAGIC_BASIS.conj().T @ MAGIC_BASIS, np.eye(4), atol=1e-15)

    def test_interaction_signs_from_expansion(self):
        b = MAGIC_BASIS
        for col, op in enumerate([np.kron(X, X), np.kron(Y, Y), np.kron(Z, Z), np.eye(4)]):
            np.testing.assert_allclose(b.conj().T @ op @ b, np.diag(INTERACTION_SIGNS[:, col]), atol=1e-15)

    @pytest.mark.parametrize("params", [(0.1, 0.2, 0.3), (-1.0, 0.5, 2.0)])
    def test_canonical_unitary(self, params):
        np.testing.assert_allclose(canonical_unitary(params), canonical(*params), atol=1e-14)

    def test_params_from_half_phases(self):
        h = INTERACTION_SIGNS @ np.array([0.1, 0.2, 0.3, 0.4])
        params, phase = params_from_half_phases(h)
        np.testing.assert_allclose(params, [0.1, 0.2, 0.3])
        assert phase == pytest.approx(0.4)


class TestKak2q:
    @pytest.mark.parametrize("seed", range(20))
    def test_haar(self, seed):
        u = haar(2, seed)
        k = kak2q(u)
        rebuilt = np.exp(1j * k.phase) * np.kron(*k.k1) @ canonical(*k.params) @ np.kron(*k.k2)
        np.testing.assert_allclose(rebuilt, u, atol=1e-12)

    def test_identity(self):
        k = kak2q(np.eye(4))
        np.testing.assert_allclose(k.params, 0, atol=1e-15)
        assert phase_aligned_distance(np.kron(*k.k1) @ np.kron(*k.k2), np.eye(4)) < 1e-14

    def test_swap_parameters(self):
        """Oracle: SWAP is exp(i pi/4 (XX+YY+ZZ)) up to phase, so each |parameter| is pi/4."""
        k = kak2q(NAMED_GATES["SWAP"])
        np.testing.assert_allclose(np.abs(k.params), np.pi / 4, atol=1e-12)
        np.testing.assert_allclose(k.rebuild(), NAMED_GATES["SWAP"], atol=1e-13)

    @pytest.mark.parametrize("name", ["CNOT", "CZ"])
    def test_named(self, name):
        np.testing.assert_allclose(kak2q(NAMED_GATES[name]).rebuild(), NAMED_GATES[name], atol=1e-13)

    def test_local_input(self):
        u = np.kron(haar(1, 1), haar(1, 2))
        k = kak2q(u)
        np.testing.assert_allclose(k.rebuild(), u, atol=1e-13)

    def test_trace_certificate(self):
        trace = []
        kak2q(haar(2, 3), trace=trace)
        assert trace[0].kind == "ai"
        assert trace[0].involution_residual < 1e-9


class TestDemultiplex:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_haar(self, n):
        g = haar(n, 10 + n)
        s = demultiplex_aiii(g, n)
        a = multiplexed("X", s.rotation.angles, n - 1)
        np.testing.assert_allclose(s.k1.matrix() @ a @ s.k2.matrix() * np.exp(1j * s.phase), g, atol=1e-11)
        assert s.rotation.axis == "X"
        assert s.rotation.target == n

    def test_block_diagonal_input(self):
        g = block_diag(haar(2, 0), haar(2, 1))
        s = demultiplex_aiii(g, 3)
        np.testing.assert_allclose(s.rotation.angles, 0, atol=1e-9)
        np.testing.assert_allclose(s.k2.matrix(), np.eye(8), atol=1e-12)
        np.testing.assert_allclose(s.k1.matrix(), g, atol=1e-12)

    def test_multiplexed_rx_input(self):
        thetas = np.array([0.5, -0.2])
        g = multiplexed("X", thetas, 1)
        s = demultiplex_aiii(g, 2)
        assert sorted(np.abs(s.rotation.angles)) == pytest.approx(sorted(np.abs(thetas)))
        prod = s.k1.matrix() @ s.k2.matrix()
        assert phase_aligned_distance(prod, np.diag(np.diag(prod))) < 1e-12

    @pytest.mark.parametrize("theta", [np.pi / 2, -np.pi / 2])
    def test_minus_one_eigenspace(self, theta):
        g = multiplexed("X", [theta, 0.3, theta, 0.0], 2)
        s = demultiplex_aiii(g, 3)
        a = multiplexed("X", s.rotation.angles, 2)
        np.testing.assert_allclose(s.k1.matrix() @ a @ s.k2.matrix(), g, atol=1e-12)

    def test_k_factors_commute_with_z(self):
        s = demultiplex_aiii(haar(3, 2), 3)
        zn = embed(Z, 3, 3)
        for k in (s.k1.matrix(), s.k2.matrix()):
            assert np.linalg.norm(k @ zn - zn @ k) <= 1e-8

    def test_rejects_single_qubit(self):
        with pytest.raises(ValueError):
            demultiplex_aiii(np.eye(2), 1)


class TestSplitTensorSum:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_haar(self, n):
        u0, u1 = haar(n - 1, 1), haar(n - 1, 2)
        s = split_tensor_sum(BlockDiagPair(u0, u1), n)
        az = multiplexed("Z", s.rotation.angles, n - 1)
        rebuilt = np.kron(s.w, np.eye(2)) @ az @ np.kron(s.v, np.eye(2)) * np.exp(1j * s.phase)
        np.testing.assert_allclose(rebuilt, block_diag(u0, u1), atol=1e-12)

    def test_equal_blocks(self):
        w = haar(2, 3)
        s = split_tensor_sum(BlockDiagPair(w, w), 3)
        np.testing.assert_allclose(s.rotation.angles, 0, atol=1e-12)
        np.testing.assert_allclose(s.w @ s.v, w, atol=1e-12)

    def test_opposite_phases(self):
        alpha = 0.4
        s = split_tensor_sum(BlockDiagPair(np.exp(1j * alpha) * np.eye(2), np.exp(-1j * alpha) * np.eye(2)), 2)
        np.testing.assert_allclose(s.rotation.angles, alpha, atol=1e-12)
        assert phase_aligned_distance(s.w @ s.v, np.eye(2)) < 1e-12

    def test_unequal_blocks(self):
        with pytest.raises(ValueError):
            split_tensor_sum(BlockDiagPair(np.eye(2), np.eye(4)), 3)


class TestQsd:
    @pytest.mark.parametrize("n,count", [(1, 0), (2, 3), (3, 24), (4, 120)])
    def test_counts_and_reconstruction(self, n, count):
        u = haar(n, 40 + n)
        c = qsd(u)
        assert cnot_count(c) == count == cnot_formula(n)
        np.testing.assert_allclose(circuit_to_unitary(c), u, atol=1e-10)

    def test_two_qubit_rotation_count(self):
        c = qsd(haar(2, 0))
        assert sum(1 for g in c.gates if g.kind.startswith("R")) == 15

    def test_single_global_phase_gate_last(self):
        c = qsd(haar(3, 0))
        phases = [i for i, g in enumerate(c.gates) if g.kind == "GLOBAL_PHASE"]
        assert phases == [len(c) - 1]

    def test_deterministic(self):
        u = haar(3, 5)
        assert qsd(u) == qsd(u.copy())

    def test_trace_kinds(self):
        trace = []
        qsd(haar(3, 1), trace=trace)
        kinds = [r.kind for r in trace]
        assert kinds.count("aiii") == 1
        assert kinds.count("tensor_sum") == 2
        assert kinds.count("ai") == 4
        assert kinds.count("euler") == 16

    def test_cap_and_dimension(self):
        with pytest.raises(ValueError):
            qsd(haar(3, 0), max_qubits=2)
        with pytest.raises(ValueError):
            qsd(np.eye(3))

    def test_formula(self):
        assert [cnot_formula(n) for n in range(1, 7)] == [0, 3, 24, 120, 528, 2208]
        for n in range(3, 9):
            assert cnot_formula(n) == 4 * cnot_formula(n - 1) + 3 * 2 ** (n - 1)
