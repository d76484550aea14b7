"""Cartan-involution factorizations and the Shannon recursion driver."""

from cartan_qsd.decomp.euler import EulerAngles, euler_matrix, euler_yzy
from cartan_qsd.decomp.involutions import (
    involution_ai,
    involution_x,
    involution_y,
    involution_z,
    low_qubit_signs,
)
from cartan_qsd.decomp.records import SplitRecord
from cartan_qsd.decomp.shannon import (
    MAX_DECOMPOSITION_QUBITS,
    AiiiSplit,
    BlockDiagPair,
    TensorSumSplit,
    cnot_formula,
    demultiplex_aiii,
    qsd,
    split_tensor_sum,
)
from cartan_qsd.decomp.two_qubit import TwoQubitKak, kak2q

__all__ = [
    "AiiiSplit",
    "BlockDiagPair",
    "EulerAngles",
    "MAX_DECOMPOSITION_QUBITS",
    "SplitRecord",
    "TensorSumSplit",
    "TwoQubitKak",
    "cnot_formula",
    "demultiplex_aiii",
    "euler_matrix",
    "euler_yzy",
    "involution_ai",
    "involution_x",
    "involution_y",
    "involution_z",
    "kak2q",
    "low_qubit_signs",
    "qsd",
    "split_tensor_sum",
]
