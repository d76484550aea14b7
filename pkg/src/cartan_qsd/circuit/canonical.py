"""Fixed 3-CNOT template for the canonical two-qubit interaction."""

from __future__ import annotations

import numpy as np

from cartan_qsd.circuit.gates import Circuit, Gate, cnot, global_phase, rx, ry, rz
from cartan_qsd.magic import CanonicalParams

# The core below equals the interaction up to local frames that do not depend
# on the parameters; the frames and the constant phase close the gap exactly.
PRE_FRAME = (rz(1, -np.pi / 8), rx(1, np.pi / 2), rz(1, np.pi / 8), rx(2, np.pi / 2))
POST_FRAME = (rz(1, np.pi / 2), rz(2, np.pi / 4))
TEMPLATE_PHASE = 3 * np.pi / 4


def canonical_core(p: CanonicalParams, high: int = 1, low: int = 2) -> tuple[Gate, ...]:
    """The three CNOTs and three parameter-dependent rotations."""
    return (
        cnot(low, high),
        rz(high, p.gamma - np.pi / 4),
        ry(low, p.beta + np.pi / 4),
        cnot(high, low),
        ry(low, np.pi / 4 - p.alpha),
        cnot(low, high),
    )


def canonical_gate_circuit(p: CanonicalParams) -> Circuit:
    """Circuit equal to ``exp(1j*(alpha XX + beta YY + gamma ZZ))``, phase included."""
    p = CanonicalParams(*p)
    gates = (*PRE_FRAME, *canonical_core(p), *POST_FRAME, global_phase(TEMPLATE_PHASE))
    return Circuit(2, gates)
