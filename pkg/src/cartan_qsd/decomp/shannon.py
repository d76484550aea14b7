"""Quantum Shannon decomposition as alternating Cartan splits.

Qubit ``n`` (the least significant index bit) is the "low" qubit. Each level
of the recursion performs two splits:

* ``demultiplex_aiii``: involution ``Z_n U Z_n`` factors ``U`` into
  block-diagonal ``K1``, a multiplexed X rotation on qubit ``n``, and ``K2``;
* ``split_tensor_sum``: involution ``X_n U X_n`` factors each block-diagonal
  ``u0 (+) u1`` into ``W``, a multiplexed Z rotation on qubit ``n``, and ``V``,
  with ``W`` and ``V`` acting only on qubits ``1..n-1``.

The four ``(n-1)``-qubit factors are decomposed recursively down to the
two-qubit KAK, giving ``C(n) = 4 C(n-1) + 3 * 2**(n-1)`` CNOTs.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from cartan_qsd.circuit import Circuit, Gate, MultiplexedRotation, global_phase
from cartan_qsd.circuit.canonical import POST_FRAME, PRE_FRAME, TEMPLATE_PHASE, canonical_core
from cartan_qsd.circuit.gates import rotation_matrix, ry, rz
from cartan_qsd.circuit.multiplex import synthesize_multiplexed_rotation
from cartan_qsd.decomp.euler import euler_yzy
from cartan_qsd.decomp.involutions import involution_x, involution_z, low_qubit_signs
from cartan_qsd.decomp.records import record
from cartan_qsd.decomp.two_qubit import kak2q
from cartan_qsd.errors import DecompositionError, PairingError, StructureError
from cartan_qsd.matcore import (
    ACCEPTANCE_TOL,
    DEGENERACY_TOL,
    canonical_basis,
    check_unitary,
    diag_sqrt,
    eig_unitary,
    num_qubits,
)

MAX_DECOMPOSITION_QUBITS = 8


class BlockDiagPair(NamedTuple):
    """``u0 (x) |0><0| + u1 (x) |1><1|`` with the low qubit as the last factor."""

    u0: np.ndarray
    u1: np.ndarray

    def matrix(self) -> np.ndarray:
        m = self.u0.shape[0]
        out = np.zeros((2 * m, 2 * m), dtype=complex)
        out[0::2, 0::2] = self.u0
        out[1::2, 1::2] = self.u1
        return out


class AiiiSplit(NamedTuple):
    """``g == k1.matrix() @ rotation.matrix() @ k2.matrix() * exp(1j*phase)``."""

    k1: BlockDiagPair
    rotation: MultiplexedRotation
    k2: BlockDiagPair
    phase: float


class TensorSumSplit(NamedTuple):
    """``pair.matrix() == kron(w, I) @ rotation.matrix() @ kron(v, I) * exp(1j*phase)``."""

    w: np.ndarray
    rotation: MultiplexedRotation
    v: np.ndarray
    phase: float


def _x_blocks(thetas: np.ndarray) -> np.ndarray:
    """Dense ``sum_j |j><j| (x) exp(i theta_j X)``."""
    m = len(thetas)
    out = np.zeros((2 * m, 2 * m), dtype=complex)
    c, s = np.cos(thetas), 1j * np.sin(thetas)
    even, odd = np.arange(0, 2 * m, 2), np.arange(1, 2 * m, 2)
    out[even, even] = c
    out[odd, odd] = c
    out[even, odd] = s
    out[odd, even] = s
    return out


def _leading_phase(e: np.ndarray) -> complex:
    floor = 0.5 / np.sqrt(len(e))
    k = int(np.argmax(np.abs(e) >= floor))
    return abs(e[k]) / e[k]


def _split_real_cluster(vecs: np.ndarray, parity: np.ndarray, tol: float):
    """Split a Z-invariant eigenspace into even and odd orthonormal halves."""
    k = vecs.shape[1]
    if k == 0:
        return np.zeros((len(parity), 0), dtype=complex), np.zeros((len(parity), 0), dtype=complex)
    if k % 2:
        raise PairingError(f"real eigenvalue cluster of odd size {k}")
    halves = []
    for mask in (parity, ~parity):
        part = np.where(mask[:, None], vecs, 0)
        sv = np.linalg.svd(part, compute_uv=False)
        if np.abs(sv[: k // 2] - 1).max() > tol or sv[k // 2 :].max() > tol:
            raise PairingError("real eigenspace does not split evenly between parities")
        halves.append(canonical_basis(part, k // 2))
    return halves


def demultiplex_aiii(g, n: int | None = None, trace: list | None = None) -> AiiiSplit:
    """Factor ``g`` as block-diagonal, multiplexed X rotation, block-diagonal.

    ``M^2 = Z g^dagger Z g`` has eigenvectors of the form ``K2^dagger |j>|+>``
    and ``K2^dagger |j>|->`` with conjugate eigenvalues ``exp(+-2i theta_j)``.
    Each non-real eigenvector ``v`` is paired with ``Z v``, and its even and
    odd halves become the columns ``(j, 0)`` and ``(j, 1)`` of ``K2^dagger``.
    Eigenspaces at +1 or -1 are Z-invariant and split by parity directly.

    Raises:
        PairingError: if some eigenvalue has no conjugate partner.
        StructureError: if ``K1`` fails to commute with ``Z_n``.
    """
    g = check_unitary(g)
    n = n if n is not None else num_qubits(g)
    if g.shape[0] != 1 << n or n < 2:
        raise ValueError(f"demultiplex_aiii needs a 2**n matrix with n >= 2, got n={n}")
    d = 1 << n
    z = low_qubit_signs(n)
    even = z > 0

    m2 = involution_z(g.conj().T, n) @ g
    eig = eig_unitary(m2)
    vecs, ph = eig.vectors, eig.phases
    tol = DEGENERACY_TOL

    is_plus = np.abs(ph) <= tol
    is_minus = np.abs(ph) >= np.pi - tol
    pos = np.flatnonzero(~is_plus & ~is_minus & (ph > 0))
    neg = np.flatnonzero(~is_plus & ~is_minus & (ph < 0))
    if len(pos) != len(neg) or np.abs(np.sort(ph[pos]) - np.sort(-ph[neg])).max(initial=0) > tol:
        raise PairingError(
            f"eigenphases do not come in conjugate pairs: {len(pos)} positive, {len(neg)} negative"
        )

    evens, odds, thetas = [], [], []
    plus_e, plus_o = _split_real_cluster(vecs[:, is_plus], even, tol)
    evens += list(plus_e.T)
    odds += list(plus_o.T)
    thetas += [0.0] * plus_e.shape[1]
    for i in pos:
        v = vecs[:, i]
        e, o = np.where(even, v, 0), np.where(even, 0, v)
        ne, no = np.linalg.norm(e), np.linalg.norm(o)
        if abs(ne**2 - 0.5) > tol or abs(no**2 - 0.5) > tol:
            raise PairingError(f"eigenvector {i} is not orthogonal to its Z partner")
        evens.append(e / ne)
        odds.append(o / no)
        thetas.append(ph[i] / 2)
    minus_e, minus_o = _split_real_cluster(vecs[:, is_minus], even, tol)
    evens += list(minus_e.T)
    odds += list(minus_o.T)
    thetas += [np.pi / 2] * minus_e.shape[1]

    k2_dag = np.zeros((d, d), dtype=complex)
    for j, (e, o) in enumerate(zip(evens, odds)):
        c = _leading_phase(e)
        k2_dag[:, 2 * j] = c * e
        k2_dag[:, 2 * j + 1] = c * o
    thetas = np.array(thetas)
    a = _x_blocks(thetas)
    k2 = k2_dag.conj().T
    k1 = g @ k2_dag @ a.conj().T

    comm = float(np.linalg.norm(involution_z(k1, n) - k1))
    if comm > ACCEPTANCE_TOL:
        raise StructureError(f"K1 does not commute with Z on the low qubit (residual {comm:.3e})")
    m = k2_dag @ a @ k2
    record(
        trace,
        "aiii",
        n,
        float(np.linalg.norm(involution_z(m, n) - m.conj().T)),
        float(np.linalg.norm(m @ m - m2)),
    )

    rotation = MultiplexedRotation("X", n, tuple(range(1, n)), tuple(thetas))
    left = BlockDiagPair(k1[0::2, 0::2], k1[1::2, 1::2])
    right = BlockDiagPair(k2[0::2, 0::2], k2[1::2, 1::2])
    res = float(np.linalg.norm(left.matrix() @ a @ right.matrix() - g))
    if res > ACCEPTANCE_TOL:
        raise StructureError(f"AIII reconstruction residual {res:.3e}")
    return AiiiSplit(left, rotation, right, 0.0)


def split_tensor_sum(pair: BlockDiagPair, n: int | None = None, trace: list | None = None) -> TensorSumSplit:
    """Factor ``u0 (+) u1`` as ``(W (x) I) Rz_mux (V (x) I)``.

    With ``Theta(U) = X_n U X_n`` the Cartan square is blockwise
    ``u1^dagger u0 (+) u0^dagger u1``. Diagonalizing ``u1^dagger u0 = L D^2 L^dagger``
    gives ``V = L^dagger``, rotation angles ``theta = angle(D^2) / 2`` and
    ``W = u0 L D^dagger``, so that ``u0 = W D V`` and ``u1 = W D* V``.

    Raises:
        ValueError: if the blocks differ in shape.
        DecompositionError: if the second block is not reproduced.
    """
    u0, u1 = (check_unitary(b) for b in pair)
    if u0.shape != u1.shape:
        raise ValueError(f"blocks differ in shape: {u0.shape} vs {u1.shape}")
    n = n if n is not None else num_qubits(u0) + 1
    if u0.shape[0] != 1 << (n - 1):
        raise ValueError(f"blocks of dimension {u0.shape[0]} do not fit n={n}")

    m2 = u1.conj().T @ u0
    eig = eig_unitary(m2)
    l = eig.vectors
    theta = diag_sqrt(eig.phases)
    dsq = np.exp(1j * theta)
    v = l.conj().T
    w = (u0 @ l) * dsq.conj()

    res = float(np.linalg.norm((w * dsq.conj()) @ v - u1))
    if res > ACCEPTANCE_TOL:
        raise DecompositionError(f"tensor-sum reconstruction residual {res:.3e}")
    if trace is not None:
        m_full = BlockDiagPair((l * dsq) @ l.conj().T, (l * dsq.conj()) @ l.conj().T).matrix()
        square = BlockDiagPair(m2, u0.conj().T @ u1).matrix()
        record(
            trace,
            "tensor_sum",
            n,
            float(np.linalg.norm(involution_x(m_full, n) - m_full.conj().T)),
            float(np.linalg.norm(m_full @ m_full - square)),
        )
    rotation = MultiplexedRotation("Z", n, tuple(range(1, n)), tuple(theta))
    return TensorSumSplit(w, rotation, v, 0.0)


def _one_qubit_gates(u: np.ndarray, qubit: int, trace) -> tuple[list[Gate], float]:
    (a, b, c), phase = euler_yzy(u, trace=trace)
    return [ry(qubit, c), rz(qubit, b), ry(qubit, a)], phase


def _frame(gates, qubit: int) -> np.ndarray:
    """Matrix of the frame rotations acting on ``qubit`` (1 or 2)."""
    out = np.eye(2, dtype=complex)
    for g in gates:
        if g.qubits[0] == qubit:
            out = rotation_matrix(g.kind, g.angle) @ out
    return out


_PRE = (_frame(PRE_FRAME, 1), _frame(PRE_FRAME, 2))
_POST = (_frame(POST_FRAME, 1), _frame(POST_FRAME, 2))


def _two_qubit_gates(u: np.ndarray, high: int, trace) -> tuple[list[Gate], float]:
    """3-CNOT circuit on qubits ``(high, high + 1)``.

    The constant frames of the canonical template are folded into the four
    local factors, leaving 12 Euler rotations plus the 3 core rotations.
    """
    low = high + 1
    kak = kak2q(u, trace=trace)
    gates: list[Gate] = []
    phase = kak.phase + TEMPLATE_PHASE
    for side, q in ((0, high), (1, low)):
        seq, ph = _one_qubit_gates(_PRE[side] @ kak.k2[side], q, trace)
        gates += seq
        phase += ph
    gates += canonical_core(kak.params, high, low)
    for side, q in ((0, high), (1, low)):
        seq, ph = _one_qubit_gates(kak.k1[side] @ _POST[side], q, trace)
        gates += seq
        phase += ph
    return gates, phase


def _qsd_gates(u: np.ndarray, n: int, trace) -> tuple[list[Gate], float]:
    if n == 1:
        return _one_qubit_gates(u, 1, trace)
    if n == 2:
        return _two_qubit_gates(u, 1, trace)
    outer = demultiplex_aiii(u, n, trace=trace)
    right = split_tensor_sum(outer.k2, n, trace=trace)
    left = split_tensor_sum(outer.k1, n, trace=trace)
    gates: list[Gate] = []
    phase = outer.phase + right.phase + left.phase
    for part in (right.v, right.rotation, right.w, outer.rotation, left.v, left.rotation, left.w):
        if isinstance(part, MultiplexedRotation):
            gates += synthesize_multiplexed_rotation(part).gates
        else:
            sub, ph = _qsd_gates(part, n - 1, trace)
            gates += sub
            phase += ph
    return gates, phase


def qsd(u, trace: list | None = None, max_qubits: int = MAX_DECOMPOSITION_QUBITS) -> Circuit:
    """Decompose a ``2**n``-dimensional unitary into CNOTs and rotations.

    The circuit reproduces ``u`` exactly, global phase included (emitted as
    one trailing ``GLOBAL_PHASE`` gate), and contains
    ``(9/16) 4**n - (3/2) 2**n`` CNOTs for ``n >= 2``.

    Args:
        u: unitary matrix of dimension ``2**n``.
        trace: optional list that receives one :class:`SplitRecord` per
            Cartan split performed.
        max_qubits: refuse inputs wider than this.

    Raises:
        DecompositionError: if any split fails its structural checks.
    """
    u = check_unitary(u)
    n = num_qubits(u)
    if n < 1:
        raise ValueError("qsd needs at least one qubit")
    if n > max_qubits:
        raise ValueError(f"{n} qubits exceeds the decomposition cap of {max_qubits}")
    gates, phase = _qsd_gates(u, n, trace)
    return Circuit(n, (*gates, global_phase(phase)))


def cnot_formula(n: int) -> int:
    """CNOT count of the unrefined decomposition on ``n`` qubits."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 0
    return (9 * 4**n - 24 * 2**n) // 16


__all__ = [
    "AiiiSplit",
    "BlockDiagPair",
    "DecompositionError",
    "MAX_DECOMPOSITION_QUBITS",
    "TensorSumSplit",
    "cnot_formula",
    "demultiplex_aiii",
    "qsd",
    "split_tensor_sum",
]
