"""Three qubits: one level of the Shannon recursion, step by step.

The Z involution on the low qubit splits U into block-diagonal factors around
a multiplexed X rotation; the X involution then splits each block-diagonal
factor into operators on the high qubits around a multiplexed Z rotation.
"""

import numpy as np

from cartan_qsd import circuit_to_unitary, cnot_count, demultiplex_aiii, haar_random_unitary, qsd, split_tensor_sum
from cartan_qsd.circuit import export_qasm

u = haar_random_unitary(3, seed=2024)

outer = demultiplex_aiii(u, 3)
print("multiplexed X angles:", np.round(outer.rotation.angles, 4))
rebuilt = outer.k1.matrix() @ outer.rotation.matrix() @ outer.k2.matrix()
print("K1 A K2 residual:", np.linalg.norm(rebuilt - u))

inner = split_tensor_sum(outer.k2, 3)
print("multiplexed Z angles of K2:", np.round(inner.rotation.angles, 4))
rebuilt = np.kron(inner.w, np.eye(2)) @ inner.rotation.matrix() @ np.kron(inner.v, np.eye(2))
print("(W x I) A_z (V x I) residual:", np.linalg.norm(rebuilt - outer.k2.matrix()))

trace = []
c = qsd(u, trace=trace)
print(f"\nfull circuit: {cnot_count(c)} CNOTs, {len(c) - 1} gates")
print("residual incl. phase:", np.linalg.norm(circuit_to_unitary(c) - u))
print("splits:", {k: sum(r.kind == k for r in trace) for k in ("aiii", "tensor_sum", "ai", "euler")})
print("worst certificate ||Theta(M) - M^dagger||:", max(r.involution_residual for r in trace))
print("\nfirst lines of the QASM export:")
print("\n".join(export_qasm(c).splitlines()[:8]))
