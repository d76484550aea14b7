"""Per-split diagnostics collected during a decomposition."""

from __future__ import annotations

from typing import NamedTuple


class SplitRecord(NamedTuple):
    """Certificate of one Cartan split.

    ``involution_residual`` is ``||Theta(M) - M^dagger||`` for the computed
    square root ``M``; ``square_residual`` is ``||M^2 - Theta(G^dagger) G||``.
    """

    kind: str
    n_qubits: int
    involution_residual: float
    square_residual: float


def record(trace: list | None, *args) -> None:
    if trace is not None:
        trace.append(SplitRecord(*args))
