"""One qubit: factor a unitary into exp(iaY) exp(ibZ) exp(icY).

The Y involution fixes rotations about Y, so M^2 = Y G^dagger Y G isolates the
Z part. Run with ``python3 demos/01_euler_angles.py``.
"""

import numpy as np
from scipy.linalg import expm

from cartan_qsd import euler_yzy, haar_random_unitary
from cartan_qsd.decomp import euler_matrix

u = haar_random_unitary(1, seed=3)
angles, phase = euler_yzy(u)
print("angles:", np.round(angles, 6), " global phase:", round(phase, 6))
print("residual:", np.linalg.norm(np.exp(1j * phase) * euler_matrix(angles) - u))

# a rotation that is already about Z comes back untouched
z = np.diag([1.0, -1.0])
print("exp(0.3i Z) ->", euler_yzy(expm(0.3j * z))[0])
