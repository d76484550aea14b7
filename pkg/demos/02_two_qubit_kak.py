"""Two qubits: KAK through the magic basis, then the 3-CNOT circuit.

Prints the canonical parameters of a few familiar gates and checks that the
synthesized circuit reproduces a random 4x4 unitary including its phase.
"""

import numpy as np

from cartan_qsd import circuit_to_unitary, cnot_count, haar_random_unitary, kak2q, qsd

gates = {
    "CNOT": np.eye(4)[[0, 1, 3, 2]],
    "SWAP": np.eye(4)[[0, 2, 1, 3]],
    "sqrt(SWAP)": None,
}
w, v = np.linalg.eigh(gates["SWAP"])
gates["sqrt(SWAP)"] = (v * np.sqrt(w.astype(complex))) @ v.T

for name, g in gates.items():
    k = kak2q(g)
    print(f"{name:>11}: (alpha, beta, gamma) / (pi/4) = {np.round(np.array(k.params) / (np.pi / 4), 6)}")

u = haar_random_unitary(2, seed=11)
c = qsd(u)
rotations = sum(1 for g in c.gates if g.kind.startswith("R"))
print(f"\nrandom U(4): {cnot_count(c)} CNOTs, {rotations} rotations")
print("residual incl. phase:", np.linalg.norm(circuit_to_unitary(c) - u))
