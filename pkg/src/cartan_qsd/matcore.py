"""Dense complex linear algebra needed by the Cartan factorizations.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Every function
returns fresh arrays and never mutates its arguments, so results can be shared
freely between threads.

Tie-breaking inside degenerate eigenspaces is deterministic: the same input
always produces the same eigenvectors, which keeps circuit output stable.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.linalg import qr, schur
from scipy.optimize import linear_sum_assignment

from cartan_qsd.errors import DecompositionError, KroneckerError, NonUnitaryError

UNITARITY_TOL = 1e-10
DEGENERACY_TOL = 1e-8
ACCEPTANCE_TOL = 1e-8
MAX_RANDOM_QUBITS = 10

# phases this close to -pi are folded onto +pi
_WRAP_TOL = 1e-12


class EigenPair(NamedTuple):
    """Eigenvectors as columns plus the eigenvalue angles in (-pi, pi]."""

    vectors: np.ndarray
    phases: np.ndarray

    def rebuild(self) -> np.ndarray:
        v = self.vectors
        return (v * np.exp(1j * self.phases)) @ v.conj().T


def as_matrix(m) -> np.ndarray:
    """Return ``m`` as a finite square complex128 array."""
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def unitarity_residual(m) -> float:
    """Frobenius norm of ``m^dagger m - I``."""
    a = as_matrix(m)
    return float(np.linalg.norm(a.conj().T @ a - np.eye(a.shape[0])))


def check_unitary(m, tol: float = UNITARITY_TOL) -> np.ndarray:
    """Validate unitarity and return the matrix as a complex array.

    Raises:
        NonUnitaryError: if the residual exceeds ``tol``.
    """
    a = as_matrix(m)
    res = unitarity_residual(a)
    if res > tol:
        raise NonUnitaryError(f"unitarity residual {res:.3e} exceeds tolerance {tol:.1e}")
    return a


def num_qubits(m: np.ndarray) -> int:
    d = m.shape[0]
    n = d.bit_length() - 1
    if d != 1 << n:
        raise ValueError(f"dimension {d} is not a power of two")
    return n


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def phase_aligned_distance(a, b) -> float:
    """Distance between ``a`` and ``b`` minimized over a global phase.

    For unitaries this equals ``sqrt(2d - 2|tr(a^dagger b)|)``, but that form
    cancels catastrophically near zero (its floor is about ``sqrt(d * eps)``),
    so the norm is evaluated directly at the optimal phase ``angle(tr(b^dagger a))``.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    overlap = np.vdot(b, a)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(a - phase * b))


def su_normalize(u) -> tuple[np.ndarray, float]:
    """Scale ``u`` into SU(d).

    Returns:
        tuple: ``(v, phase)`` with ``det(v) == 1`` and ``u == exp(1j*phase) * v``.
    """
    u = as_matrix(u)
    d = u.shape[0]
    phase = float(np.angle(np.linalg.det(u))) / d
    return u * np.exp(-1j * phase), phase


def wrap_phases(phases) -> np.ndarray:
    """Map angles into (-pi, pi]."""
    p = np.array(phases, dtype=float)
    outside = (p <= -np.pi) | (p > np.pi)
    p[outside] = np.mod(p[outside] + np.pi, 2 * np.pi) - np.pi
    p[p <= -np.pi + _WRAP_TOL] = np.pi
    return p


def diag_sqrt(phases) -> np.ndarray:
    """Principal square root of ``diag(exp(1j*phases))``, as half-angles."""
    return np.asarray(phases, dtype=float) / 2


def _clusters(values: np.ndarray, tol: float) -> list[np.ndarray]:
    """Split sorted ``values`` into runs whose neighbours differ by at most ``tol``."""
    if len(values) == 0:
        return []
    breaks = np.flatnonzero(np.diff(values) > tol) + 1
    return np.split(np.arange(len(values)), breaks)


def _fix_column_phase(v: np.ndarray) -> np.ndarray:
    """Make the first significant component of each column positive real."""
    out = v.copy()
    floor = 0.5 / np.sqrt(v.shape[0])
    for j in range(v.shape[1]):
        col = out[:, j]
        k = int(np.argmax(np.abs(col) >= floor))
        out[:, j] = col * (abs(col[k]) / col[k])
    return out


def canonical_basis(v: np.ndarray, rank: int | None = None) -> np.ndarray:
    """Orthonormal basis of span(v) that depends only on the subspace.

    ``v`` may be any spanning set whose Gram projector ``v v^dagger`` is the
    orthogonal projector of the subspace; ``rank`` defaults to its width.
    """
    k = v.shape[1] if rank is None else rank
    if k == 1 and v.shape[1] == 1:
        return _fix_column_phase(v)
    proj = v @ v.conj().T
    q, _, _ = qr(proj, pivoting=True)
    return _fix_column_phase(q[:, :k])


def eig_unitary(
    u, tol: float = UNITARITY_TOL, degeneracy_tol: float = DEGENERACY_TOL
) -> EigenPair:
    """Unitary eigendecomposition with sorted phases and canonical eigenvectors.

    The complex Schur form of a normal matrix is diagonal, so the Schur vectors
    are an orthonormal eigenbasis even inside degenerate eigenspaces. Phases are
    sorted ascending in (-pi, pi]; each cluster of equal phases gets a basis that
    depends only on the eigenspace, with phase-fixed columns.

    Raises:
        NonUnitaryError: if ``u`` is not unitary within ``tol``.
    """
    u = check_unitary(u, tol)
    t, z = schur(u, output="complex")
    phases = wrap_phases(np.angle(np.diag(t)))
    order = np.argsort(phases, kind="stable")
    phases = phases[order]
    z = z[:, order]
    vectors = np.empty_like(z)
    for idx in _clusters(phases, degeneracy_tol):
        vectors[:, idx] = canonical_basis(z[:, idx])
    return EigenPair(vectors, phases)


def eig_symmetric_unitary(
    s, tol: float = UNITARITY_TOL, degeneracy_tol: float = DEGENERACY_TOL
) -> EigenPair:
    """Diagonalize a complex-symmetric unitary with a real rotation.

    Returns an :class:`EigenPair` whose ``vectors`` is a real orthogonal matrix
    with determinant +1 and ``s == P diag(exp(1j*phases)) P^T``. The real and
    imaginary parts of ``s`` commute; the real part is diagonalized first and
    each of its degenerate eigenspaces is resolved by the imaginary part.

    Columns are ordered to put the largest entries on the diagonal and signed
    to make the diagonal non-negative, so a diagonal input yields the identity.

    Raises:
        NonUnitaryError: if ``s`` is not unitary.
        ValueError: if ``s`` is not symmetric within ``tol``.
        DecompositionError: if the diagonalization misses the residual target.
    """
    s = check_unitary(s, tol)
    asym = float(np.linalg.norm(s - s.T))
    if asym > max(tol, DEGENERACY_TOL):
        raise ValueError(f"matrix is not symmetric (asymmetry {asym:.3e})")
    s = (s + s.T) / 2
    re, im = s.real, s.imag

    w, p = np.linalg.eigh(re)
    for idx in _clusters(w, degeneracy_tol):
        if len(idx) > 1:
            block = p[:, idx]
            _, rot = np.linalg.eigh(block.T @ im @ block)
            p[:, idx] = block @ rot

    rows, cols = linear_sum_assignment(-np.abs(p))
    p = p[:, cols[np.argsort(rows)]]
    for j in range(p.shape[1]):
        pivot = p[j, j] if abs(p[j, j]) > 1e-12 else p[np.argmax(np.abs(p[:, j]) > 1e-12), j]
        if pivot < 0:
            p[:, j] = -p[:, j]
    if np.linalg.det(p) < 0:
        j = int(np.argmin(np.abs(np.diag(p))))
        p[:, j] = -p[:, j]

    phases = wrap_phases(np.angle(np.diag(p.T @ s @ p)))
    pair = EigenPair(p, phases)
    res = float(np.linalg.norm(pair.rebuild() - s))
    if res > ACCEPTANCE_TOL:
        raise DecompositionError(f"symmetric diagonalization residual {res:.3e}")
    return pair


def kron_factor_2q(u, tol: float = ACCEPTANCE_TOL) -> tuple[np.ndarray, np.ndarray, float]:
    """Split a 4x4 product operator ``exp(1j*phase) * (a kron b)``.

    The 4x4 matrix is rearranged so that a Kronecker product becomes a rank-one
    outer product; its dominant singular pair gives the two factors, which are
    then normalized into SU(2).

    Returns:
        tuple: ``(a, b, phase)`` with ``a, b`` in SU(2).

    Raises:
        KroneckerError: if ``u`` is not a product within ``tol``.
    """
    u = as_matrix(u)
    if u.shape != (4, 4):
        raise ValueError("kron_factor_2q expects a 4x4 matrix")
    r = u.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    left, sv, right = np.linalg.svd(r)
    a = np.sqrt(sv[0]) * left[:, 0].reshape(2, 2)
    b = np.sqrt(sv[0]) * right[0, :].reshape(2, 2)
    a, _ = su_normalize(a)
    b, _ = su_normalize(b)
    ab = np.kron(a, b)
    phase = float(np.angle(np.vdot(ab, u)))
    res = float(np.linalg.norm(u - np.exp(1j * phase) * ab))
    if res > tol:
        raise KroneckerError(f"operator is not a tensor product (residual {res:.3e})")
    return a, b, phase


def haar_random_unitary(n_qubits: int, seed: int | None = None) -> np.ndarray:
    """Haar-distributed unitary on ``n_qubits`` qubits.

    QR of a complex Ginibre matrix, with the phases of ``diag(R)`` pushed into
    ``Q`` so that the distribution is exactly Haar.
    """
    if not 1 <= n_qubits <= MAX_RANDOM_QUBITS:
        raise ValueError(f"n_qubits must be in [1, {MAX_RANDOM_QUBITS}], got {n_qubits}")
    d = 1 << n_qubits
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


@lru_cache(maxsize=None)
def pauli(label: str) -> np.ndarray:
    """Tensor product of Paulis, e.g. ``pauli("XZ")``; qubit 1 leftmost."""
    single = {
        "I": np.eye(2),
        "X": np.array([[0, 1], [1, 0]]),
        "Y": np.array([[0, -1j], [1j, 0]]),
        "Z": np.diag([1, -1]),
    }
    out = np.ones((1, 1), dtype=complex)
    for ch in label:
        out = np.kron(out, single[ch])
    out.flags.writeable = False
    return out
