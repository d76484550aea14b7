"""Unitary-to-circuit synthesis by recursive Cartan decompositions.

Typical use::

    from cartan_qsd import haar_random_unitary, qsd, circuit_to_unitary

    u = haar_random_unitary(3, seed=1)
    c = qsd(u)                      # 24 CNOTs plus rotations
    circuit_to_unitary(c)           # equals u, global phase included
"""

from cartan_qsd.circuit import Circuit, Gate, MultiplexedRotation, circuit_to_unitary, cnot_count
from cartan_qsd.decomp import cnot_formula, demultiplex_aiii, euler_yzy, kak2q, qsd, split_tensor_sum
from cartan_qsd.errors import (
    BranchError,
    DecompositionError,
    KroneckerError,
    NonUnitaryError,
    PairingError,
    StructureError,
)
from cartan_qsd.matcore import haar_random_unitary, phase_aligned_distance

__version__ = "0.1.0"

__all__ = [
    "BranchError",
    "Circuit",
    "DecompositionError",
    "Gate",
    "KroneckerError",
    "MultiplexedRotation",
    "NonUnitaryError",
    "PairingError",
    "StructureError",
    "circuit_to_unitary",
    "cnot_count",
    "cnot_formula",
    "demultiplex_aiii",
    "euler_yzy",
    "haar_random_unitary",
    "kak2q",
    "phase_aligned_distance",
    "qsd",
    "split_tensor_sum",
]
