"""Reference simulator: the dense unitary of a circuit."""

from __future__ import annotations

import numpy as np

from cartan_qsd.circuit.gates import Circuit, rotation_matrix

MAX_SIMULATION_QUBITS = 10


def circuit_to_unitary(c: Circuit, max_qubits: int = MAX_SIMULATION_QUBITS) -> np.ndarray:
    """Multiply out ``c`` in application order.

    The identity is carried as an ``n``-axis tensor (plus one column axis) and
    each gate is contracted into the axis of the qubit it touches, so memory
    stays at one ``2**n x 2**n`` matrix.

    Raises:
        ValueError: if ``c`` is wider than ``max_qubits``.
    """
    n = c.n_qubits
    if n > max_qubits:
        raise ValueError(f"{n} qubits exceeds the simulation cap of {max_qubits}")
    d = 1 << n
    state = np.eye(d, dtype=complex).reshape((2,) * n + (d,))
    phase = 0.0
    for g in c.gates:
        if g.kind == "GLOBAL_PHASE":
            phase += g.angle
        elif g.kind == "CNOT":
            ctrl, tgt = g.qubits[0] - 1, g.qubits[1] - 1
            sel = [slice(None)] * (n + 1)
            sel[ctrl] = 1
            sel = tuple(sel)
            flip_axis = tgt - 1 if tgt > ctrl else tgt
            state[sel] = np.flip(state[sel], axis=flip_axis).copy()
        else:
            axis = g.qubits[0] - 1
            m = rotation_matrix(g.kind, g.angle)
            state = np.moveaxis(np.tensordot(m, state, axes=([1], [axis])), 0, axis)
    return np.exp(1j * phase) * state.reshape(d, d)
