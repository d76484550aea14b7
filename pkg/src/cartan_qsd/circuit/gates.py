"""Gate-level intermediate representation.

Qubits are numbered from 1, and qubit 1 is the most significant bit of a
basis-state index. Rotations follow ``R_a(theta) = exp(1j * theta * sigma_a)``
everywhere in the package; only the QASM exporter translates to the external
``exp(-1j * lambda * sigma / 2)`` convention.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

ROTATIONS = ("RX", "RY", "RZ")
KINDS = ("CNOT", *ROTATIONS, "GLOBAL_PHASE")


@dataclass(frozen=True)
class Gate:
    """One instruction; ``qubits`` is ``(control, target)`` for CNOT."""

    kind: str
    qubits: tuple[int, ...] = ()
    angle: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        arity = {"CNOT": 2, "GLOBAL_PHASE": 0}.get(self.kind, 1)
        if len(self.qubits) != arity:
            raise ValueError(f"{self.kind} takes {arity} qubit(s), got {self.qubits}")
        if any(q < 1 for q in self.qubits):
            raise ValueError(f"qubit indices start at 1, got {self.qubits}")
        if self.kind == "CNOT" and self.qubits[0] == self.qubits[1]:
            raise ValueError("CNOT control and target must differ")
        if not np.isfinite(self.angle):
            raise ValueError("gate angle must be finite")


def cnot(control: int, target: int) -> Gate:
    return Gate("CNOT", (control, target))


def rx(qubit: int, angle: float) -> Gate:
    return Gate("RX", (qubit,), float(angle))


def ry(qubit: int, angle: float) -> Gate:
    return Gate("RY", (qubit,), float(angle))


def rz(qubit: int, angle: float) -> Gate:
    return Gate("RZ", (qubit,), float(angle))


def global_phase(angle: float) -> Gate:
    return Gate("GLOBAL_PHASE", (), float(angle))


_PAULI = {
    "RX": np.array([[0, 1], [1, 0]], dtype=complex),
    "RY": np.array([[0, -1j], [1j, 0]]),
    "RZ": np.array([[1, 0], [0, -1]], dtype=complex),
}


def rotation_matrix(kind: str, angle: float) -> np.ndarray:
    """``exp(1j * angle * sigma)`` for ``kind`` in RX/RY/RZ."""
    return np.cos(angle) * np.eye(2) + 1j * np.sin(angle) * _PAULI[kind]


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list; ``gates[0]`` acts on the state first."""

    n_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("a circuit needs at least one qubit")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if any(q > self.n_qubits for q in g.qubits):
                raise ValueError(f"{g} addresses a qubit beyond {self.n_qubits}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def counts(self) -> Counter:
        return Counter(g.kind for g in self.gates)

    def global_phase(self) -> float:
        return sum(g.angle for g in self.gates if g.kind == "GLOBAL_PHASE")

    def then(self, other: "Circuit | Iterable[Gate]") -> "Circuit":
        """Circuit applying ``self`` first and ``other`` afterwards."""
        extra = other.gates if isinstance(other, Circuit) else tuple(other)
        n = max(self.n_qubits, other.n_qubits) if isinstance(other, Circuit) else self.n_qubits
        return Circuit(n, self.gates + extra)


def cnot_count(c: Circuit) -> int:
    return sum(1 for g in c.gates if g.kind == "CNOT")


@dataclass(frozen=True)
class MultiplexedRotation:
    """Uniformly controlled rotation ``sum_j |j><j| (x) exp(1j*angles[j]*sigma)``.

    ``controls[0]`` is the most significant bit of the pattern index ``j``.
    """

    axis: str
    target: int
    controls: tuple[int, ...]
    angles: tuple[float, ...]

    def __post_init__(self):
        if self.axis not in ("X", "Z"):
            raise ValueError(f"unsupported axis {self.axis!r}")
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))
        if len(self.angles) != 1 << len(self.controls):
            raise ValueError(
                f"{len(self.controls)} controls need {1 << len(self.controls)} angles, "
                f"got {len(self.angles)}"
            )
        wires = (self.target, *self.controls)
        if len(set(wires)) != len(wires) or min(wires) < 1:
            raise ValueError(f"invalid qubit assignment target={self.target} controls={self.controls}")

    @property
    def n_qubits(self) -> int:
        return max((self.target, *self.controls))

    def matrix(self, n_qubits: int | None = None) -> np.ndarray:
        """Dense matrix on ``n_qubits`` qubits (identity on unlisted ones)."""
        n = n_qubits or self.n_qubits
        d = 1 << n
        idx = np.arange(d)
        bit = lambda q: (idx >> (n - q)) & 1  # noqa: E731
        j = np.zeros(d, dtype=int)
        for c in self.controls:
            j = (j << 1) | bit(c)
        theta = np.asarray(self.angles)[j]
        out = np.zeros((d, d), dtype=complex)
        partner = idx ^ (1 << (n - self.target))
        t = bit(self.target)
        cos, sin = np.cos(theta), np.sin(theta)
        out[idx, idx] = cos + (1j * sin * np.where(t == 0, 1, -1) if self.axis == "Z" else 0)
        if self.axis == "X":
            out[partner, idx] = 1j * sin
        return out


def gray_code(k: int) -> list[int]:
    """Reflected binary Gray code of length ``2**k`` as integers."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return [i ^ (i >> 1) for i in range(1 << k)]
