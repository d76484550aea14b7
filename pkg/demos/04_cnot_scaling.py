"""CNOT count of the recursion against the closed form (9/16) 4^n - (3/2) 2^n."""

import time

from cartan_qsd import circuit_to_unitary, cnot_count, cnot_formula, haar_random_unitary, phase_aligned_distance, qsd

print(f"{'n':>2} {'CNOTs':>6} {'formula':>8} {'residual':>10} {'seconds':>8}")
for n in range(1, 8):
    u = haar_random_unitary(n, seed=n)
    start = time.perf_counter()
    c = qsd(u)
    elapsed = time.perf_counter() - start
    residual = phase_aligned_distance(circuit_to_unitary(c), u)
    print(f"{n:>2} {cnot_count(c):>6} {cnot_formula(n):>8} {residual:>10.2e} {elapsed:>8.2f}")
