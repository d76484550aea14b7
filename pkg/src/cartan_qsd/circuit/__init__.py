"""Gate IR, multiplexed-rotation lowering, simulation and export."""

from cartan_qsd.circuit.canonical import canonical_gate_circuit
from cartan_qsd.circuit.gates import (
    Circuit,
    Gate,
    MultiplexedRotation,
    cnot,
    cnot_count,
    global_phase,
    gray_code,
    rotation_matrix,
    rx,
    ry,
    rz,
)
from cartan_qsd.circuit.multiplex import synthesize_multiplexed_rotation
from cartan_qsd.circuit.qasm import (
    export_gatelist,
    export_qasm,
    import_gatelist,
    import_qasm,
    load_circuit,
)
from cartan_qsd.circuit.simulate import MAX_SIMULATION_QUBITS, circuit_to_unitary

__all__ = [
    "Circuit",
    "Gate",
    "MAX_SIMULATION_QUBITS",
    "MultiplexedRotation",
    "canonical_gate_circuit",
    "circuit_to_unitary",
    "cnot",
    "cnot_count",
    "export_gatelist",
    "export_qasm",
    "global_phase",
    "gray_code",
    "import_gatelist",
    "import_qasm",
    "load_circuit",
    "rotation_matrix",
    "rx",
    "ry",
    "rz",
    "synthesize_multiplexed_rotation",
]
