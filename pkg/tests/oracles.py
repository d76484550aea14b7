"""Reference constructions used only by the tests.

Everything here is built from ``scipy.linalg.expm`` and explicit Kronecker
products, independently of the package's own kernels.
"""

import numpy as np
from scipy.linalg import expm
from scipy.stats import unitary_group

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]])
Z = np.diag([1.0 + 0j, -1.0])
SIGMA = {"RX": X, "RY": Y, "RZ": Z, "X": X, "Y": Y, "Z": Z}
P0 = np.diag([1.0, 0.0])
P1 = np.diag([0.0, 1.0])


def embed(op, qubit, n):
    """``op`` on ``qubit`` (1 = most significant) of ``n`` qubits."""
    out = np.eye(1)
    for q in range(1, n + 1):
        out = np.kron(out, op if q == qubit else I2)
    return out


def gate_matrix(gate, n):
    if gate.kind == "GLOBAL_PHASE":
        return np.exp(1j * gate.angle) * np.eye(1 << n)
    if gate.kind == "CNOT":
        c, t = gate.qubits
        return embed(P0, c, n) + embed(P1, c, n) @ embed(X, t, n)
    return embed(expm(1j * gate.angle * SIGMA[gate.kind]), gate.qubits[0], n)


def circuit_matrix(circuit):
    """Dense product of full-size gate matrices, first gate rightmost."""
    u = np.eye(1 << circuit.n_qubits, dtype=complex)
    for g in circuit.gates:
        u = gate_matrix(g, circuit.n_qubits) @ u
    return u


def multiplexed(axis, thetas, n_controls):
    """``sum_j |j><j| (x) expm(i theta_j sigma)`` with the target as the low qubit."""
    blocks = [expm(1j * t * SIGMA[axis]) for t in thetas]
    d = 2 << n_controls
    out = np.zeros((d, d), dtype=complex)
    for j, b in enumerate(blocks):
        out[2 * j : 2 * j + 2, 2 * j : 2 * j + 2] = b
    return out


def canonical(alpha, beta, gamma):
    return expm(1j * (alpha * np.kron(X, X) + beta * np.kron(Y, Y) + gamma * np.kron(Z, Z)))


def haar(n, seed):
    """Haar sample from scipy, independent of the package generator."""
    return unitary_group.rvs(1 << n, random_state=seed)


def random_so4(rng):
    q, r = np.linalg.qr(rng.standard_normal((4, 4)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def phase_distance(a, b):
    """Brute-force ``min_phi ||a - e^{i phi} b||`` by a dense scan plus refinement."""
    from scipy.optimize import minimize_scalar

    f = lambda p: np.linalg.norm(a - np.exp(1j * p) * b)  # noqa: E731
    grid = np.linspace(-np.pi, np.pi, 721)
    p0 = grid[np.argmin([f(p) for p in grid])]
    return minimize_scalar(f, bounds=(p0 - 0.01, p0 + 0.01), method="bounded", options={"xatol": 1e-12}).fun


NAMED_GATES = {
    "CNOT": np.eye(4)[[0, 1, 3, 2]].astype(complex),
    "SWAP": np.eye(4)[[0, 2, 1, 3]].astype(complex),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
    "Toffoli": np.eye(8)[[0, 1, 2, 3, 4, 5, 7, 6]].astype(complex),
    "QFT3": np.exp(2j * np.pi * np.outer(np.arange(8), np.arange(8)) / 8) / np.sqrt(8),
}
