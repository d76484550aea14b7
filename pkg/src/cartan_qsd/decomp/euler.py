"""One-qubit factoring ``U = exp(i a Y) exp(i b Z) exp(i c Y)`` via ``Theta(U) = Y U Y``."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from cartan_qsd.decomp.involutions import involution_y
from cartan_qsd.decomp.records import record
from cartan_qsd.errors import StructureError
from cartan_qsd.matcore import (
    ACCEPTANCE_TOL,
    check_unitary,
    diag_sqrt,
    eig_symmetric_unitary,
    su_normalize,
)


class EulerAngles(NamedTuple):
    """Angles of ``exp(i a Y) exp(i b Z) exp(i c Y)``."""

    a: float
    b: float
    c: float


def euler_matrix(angles: EulerAngles) -> np.ndarray:
    a, b, c = angles
    ry = lambda t: np.array([[np.cos(t), np.sin(t)], [-np.sin(t), np.cos(t)]])  # noqa: E731
    return ry(a) @ np.diag([np.exp(1j * b), np.exp(-1j * b)]) @ ry(c)


def euler_yzy(g, trace: list | None = None) -> tuple[EulerAngles, float]:
    """Factor a 2x2 unitary into Y-Z-Y rotations and a global phase.

    Returns:
        tuple: ``(angles, phase)`` with
        ``g == exp(1j*phase) * expm(i a Y) @ expm(i b Z) @ expm(i c Y)``.
    """
    g = check_unitary(g)
    if g.shape != (2, 2):
        raise ValueError("euler_yzy expects a 2x2 unitary")
    g, phase = su_normalize(g)

    m2 = involution_y(g.conj().T) @ g
    eig = eig_symmetric_unitary(m2)
    p = eig.vectors
    h = diag_sqrt(eig.phases)
    # SU(2) branch: the two half-phases must cancel so that Y D Y = D^-1
    h = np.array([h[0], -h[0]])
    m = (p * np.exp(1j * h)) @ p.T
    k = g @ m.conj().T

    if np.abs(k - involution_y(k)).max() > ACCEPTANCE_TOL:
        raise StructureError("Euler K factor is not a rotation about Y")
    if trace is not None:
        record(
            trace,
            "euler",
            1,
            float(np.linalg.norm(involution_y(m) - m.conj().T)),
            float(np.linalg.norm(m @ m - m2)),
        )

    theta_p = np.arctan2(p[0, 1], p[0, 0])
    kappa = np.arctan2(k[0, 1].real, k[0, 0].real)
    return EulerAngles(float(kappa + theta_p), float(h[0]), float(-theta_p)), phase
