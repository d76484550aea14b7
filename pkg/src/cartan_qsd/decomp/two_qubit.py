"""Two-qubit factoring through the type AI involution ``Theta(U) = U*``.

In the magic basis local operations become real rotations, so
``U' = K' M`` with ``K'`` real orthogonal and ``M^2 = U'^T U'``. Diagonalizing
``M^2`` with a real rotation ``P`` yields
``U = (K1a (x) K1b) exp(i(a XX + b YY + c ZZ)) (K2a (x) K2b)`` up to phase.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

import numpy as np

from cartan_qsd.decomp.records import record
from cartan_qsd.errors import BranchError, DecompositionError
from cartan_qsd.magic import (
    MAGIC_BASIS,
    CanonicalParams,
    canonical_unitary,
    params_from_half_phases,
)
from cartan_qsd.matcore import (
    ACCEPTANCE_TOL,
    check_unitary,
    diag_sqrt,
    eig_symmetric_unitary,
    kron_factor_2q,
    su_normalize,
)

# sign patterns of the four half-phases, fewest flips first
_BRANCHES = sorted(itertools.product((0, 1), repeat=4), key=lambda f: (sum(f), f[::-1]))


class TwoQubitKak(NamedTuple):
    """``u == exp(1j*phase) * kron(*k1) @ canonical_unitary(params) @ kron(*k2)``."""

    k1: tuple[np.ndarray, np.ndarray]
    params: CanonicalParams
    k2: tuple[np.ndarray, np.ndarray]
    phase: float

    def rebuild(self) -> np.ndarray:
        return (
            np.exp(1j * self.phase)
            * np.kron(*self.k1)
            @ canonical_unitary(self.params)
            @ np.kron(*self.k2)
        )


def kak2q(u, trace: list | None = None, tol: float = ACCEPTANCE_TOL) -> TwoQubitKak:
    """Cartan (KAK) decomposition of a 4x4 unitary.

    Raises:
        BranchError: if no admissible square-root branch gives a real ``K'``.
        KroneckerError: if a local factor fails to split into a tensor product.
    """
    u = check_unitary(u)
    if u.shape != (4, 4):
        raise ValueError("kak2q expects a 4x4 unitary")
    v, phase = su_normalize(u)
    b = MAGIC_BASIS
    up = b.conj().T @ v @ b
    m2 = up.T @ up
    eig = eig_symmetric_unitary(m2)
    p = eig.vectors
    half = diag_sqrt(eig.phases)
    det_up = np.linalg.det(up)

    for flips in _BRANCHES:
        h = half + np.pi * np.array(flips)
        if abs(np.exp(1j * h.sum()) - det_up) > 1e-6:
            continue
        kp = up @ (p * np.exp(-1j * h)) @ p.T
        if np.linalg.norm(kp.imag) <= tol:
            break
    else:
        raise BranchError("no square-root branch makes K' real; eigenvector pairing failed")

    m = (p * np.exp(1j * h)) @ p.T
    if trace is not None:
        record(
            trace,
            "ai",
            2,
            float(np.linalg.norm(m.conj() - m.conj().T)),
            float(np.linalg.norm(m @ m - m2)),
        )

    k1 = b @ kp @ p @ b.conj().T
    k2 = b @ p.T @ b.conj().T
    k1a, k1b, ph1 = kron_factor_2q(k1)
    k2a, k2b, ph2 = kron_factor_2q(k2)
    params, ph_a = params_from_half_phases(h)
    out = TwoQubitKak((k1a, k1b), params, (k2a, k2b), phase + ph1 + ph2 + ph_a)

    res = float(np.linalg.norm(out.rebuild() - u))
    if res > tol:
        raise DecompositionError(f"two-qubit reconstruction residual {res:.3e}")
    return out
