"""Lowering of uniformly controlled rotations to a Gray-code CNOT ladder."""

from __future__ import annotations

import numpy as np

from cartan_qsd.circuit.gates import (
    Circuit,
    MultiplexedRotation,
    cnot,
    gray_code,
    rx,
    ry,
    rz,
)

MAX_CONTROLS = 16


def sign_matrix(k: int) -> np.ndarray:
    """``M[j, i] = (-1)**popcount(g_i & j)`` for the reflected Gray code ``g``.

    Rotation ``i`` of the ladder sees the target flipped by the parity of the
    controls selected by ``g_i``, so control pattern ``j`` accumulates the
    angle ``(M @ phi)[j]``.
    """
    g = np.array(gray_code(k))
    j = np.arange(1 << k)
    parity = np.bitwise_count(j[:, None] & g[None, :]) & 1
    return np.where(parity == 0, 1.0, -1.0)


def _walsh(v: np.ndarray) -> np.ndarray:
    """Unnormalized fast Walsh-Hadamard transform in natural order."""
    a = np.array(v, dtype=float)
    h = 1
    while h < len(a):
        a = a.reshape(-1, 2, h)
        a = np.stack((a[:, 0] + a[:, 1], a[:, 0] - a[:, 1]), axis=1).reshape(-1)
        h *= 2
    return a


def ladder_angles(angles) -> np.ndarray:
    """Solve ``sign_matrix(k) @ phi == angles`` for the ladder angles ``phi``.

    The columns of the sign matrix are orthogonal with norm ``2**k``, so the
    solve is a Walsh transform read out in Gray order.
    """
    theta = np.asarray(angles, dtype=float)
    k = len(theta).bit_length() - 1
    if len(theta) != 1 << k:
        raise ValueError(f"angle count {len(theta)} is not a power of two")
    if k > MAX_CONTROLS:
        raise ValueError(f"at most {MAX_CONTROLS} controls are supported, got {k}")
    return _walsh(theta)[gray_code(k)] / (1 << k)


def synthesize_multiplexed_rotation(mr: MultiplexedRotation) -> Circuit:
    """Circuit with exactly ``2**k`` CNOTs for ``k`` controls.

    Rotations on the target alternate with CNOTs whose control is the bit that
    changes between consecutive Gray words, including the wrap-around step, so
    the target ends un-flipped. The X axis reuses the Z ladder conjugated by a
    quarter-turn about Y on the target.
    """
    k = len(mr.controls)
    t = mr.target
    if k == 0:
        single = rx if mr.axis == "X" else rz
        return Circuit(mr.n_qubits, (single(t, mr.angles[0]),))
    phi = ladder_angles(mr.angles)
    g = gray_code(k)
    gates = []
    for i in range(1 << k):
        bit = (g[i] ^ g[(i + 1) % (1 << k)]).bit_length() - 1
        gates.append(rz(t, phi[i]))
        gates.append(cnot(mr.controls[k - 1 - bit], t))
    if mr.axis == "X":
        # RY(-pi/4) Z RY(pi/4) = X
        gates = [ry(t, np.pi / 4), *gates, ry(t, -np.pi / 4)]
    return Circuit(mr.n_qubits, tuple(gates))
