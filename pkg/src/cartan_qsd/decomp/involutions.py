"""Global Cartan involutions on matrix groups.

All three are exact: they only conjugate, permute, or flip signs of entries,
so applying one twice returns the input bit-for-bit.
"""

from __future__ import annotations

import numpy as np

from cartan_qsd.matcore import as_matrix


def _check_dim(u: np.ndarray, n: int) -> None:
    if u.shape[0] != 1 << n:
        raise ValueError(f"matrix of dimension {u.shape[0]} does not act on {n} qubits")


def low_qubit_signs(n: int) -> np.ndarray:
    """Diagonal of Z on the least significant qubit: (+1, -1, +1, -1, ...)."""
    return np.where(np.arange(1 << n) % 2 == 0, 1.0, -1.0)


def involution_ai(u) -> np.ndarray:
    """Type AI involution ``U -> U*`` (fixes real orthogonal matrices)."""
    return as_matrix(u).conj()


def involution_z(u, n: int) -> np.ndarray:
    """Type AIII involution ``U -> Z_n U Z_n`` for the low qubit ``n``."""
    u = as_matrix(u)
    _check_dim(u, n)
    z = low_qubit_signs(n)
    return u * np.outer(z, z)


def involution_x(u, n: int) -> np.ndarray:
    """Involution ``U -> X_n U X_n``; swaps the two low-qubit blocks."""
    u = as_matrix(u)
    _check_dim(u, n)
    perm = np.arange(1 << n) ^ 1
    return u[np.ix_(perm, perm)]


def involution_y(u) -> np.ndarray:
    """One-qubit involution ``U -> Y U Y`` fixing rotations about Y."""
    u = as_matrix(u)
    if u.shape != (2, 2):
        raise ValueError("involution_y acts on 2x2 matrices")
    # Y U Y = [[d, -c], [-b, a]] for U = [[a, b], [c, d]]
    return np.array([[u[1, 1], -u[1, 0]], [-u[0, 1], u[0, 0]]])
