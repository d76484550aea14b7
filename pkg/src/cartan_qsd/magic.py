"""Magic (Bell) basis and the canonical two-qubit interaction.

Conjugation by the magic basis turns SO(4) into local operations
SU(2) x SU(2) and turns ``exp(1j*(a XX + b YY + c ZZ))`` into a diagonal matrix.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from cartan_qsd.matcore import pauli

MAGIC_BASIS = np.array(
    [
        [1, 1j, 0, 0],
        [0, 0, 1j, 1],
        [0, 0, 1j, -1],
        [1, -1j, 0, 0],
    ]
) / np.sqrt(2)
MAGIC_BASIS.flags.writeable = False


def _interaction_signs() -> np.ndarray:
    """Columns: diagonals of XX, YY, ZZ in the magic basis, then all-ones.

    Derived from the basis itself rather than transcribed, and checked to be
    exactly diagonal with +-1 entries.
    """
    b = MAGIC_BASIS
    cols = []
    for label in ("XX", "YY", "ZZ"):
        d = b.conj().T @ pauli(label) @ b
        diag = np.diag(d)
        if np.abs(d - np.diag(diag)).max() > 1e-12 or np.abs(np.abs(diag) - 1).max() > 1e-12:
            raise AssertionError(f"{label} is not diagonal in the magic basis")
        cols.append(np.round(diag.real))
    cols.append(np.ones(4))
    return np.column_stack(cols)


INTERACTION_SIGNS = _interaction_signs()
INTERACTION_SIGNS.flags.writeable = False


class CanonicalParams(NamedTuple):
    """Coefficients of XX, YY and ZZ in the interaction exponent."""

    alpha: float
    beta: float
    gamma: float


def params_from_half_phases(half_phases) -> tuple[CanonicalParams, float]:
    """Invert ``half_phases = INTERACTION_SIGNS @ (alpha, beta, gamma, phase)``."""
    alpha, beta, gamma, phase = np.linalg.solve(INTERACTION_SIGNS, np.asarray(half_phases))
    return CanonicalParams(float(alpha), float(beta), float(gamma)), float(phase)


def canonical_unitary(p: CanonicalParams) -> np.ndarray:
    """Dense ``exp(1j*(alpha XX + beta YY + gamma ZZ))``."""
    h = INTERACTION_SIGNS[:, :3] @ np.asarray(p, dtype=float)
    b = MAGIC_BASIS
    return (b * np.exp(1j * h)) @ b.conj().T
