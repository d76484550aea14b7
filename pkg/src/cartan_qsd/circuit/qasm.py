"""Text formats for circuits: an OpenQASM 2.0 subset and a plain gate list."""

from __future__ import annotations

import re

from cartan_qsd.circuit.gates import Circuit, Gate, cnot, global_phase

_QASM_HEADER = ('OPENQASM 2.0;', 'include "qelib1.inc";')


def _fmt(x: float) -> str:
    s = f"{x:.15g}"
    return "0" if s == "-0" else s


def export_qasm(c: Circuit) -> str:
    """Render ``c`` as OpenQASM 2.0 using ``cx``, ``rx``, ``ry``, ``rz``.

    Internal ``R(theta) = exp(1j*theta*sigma)`` becomes the standard
    ``r(-2*theta)``. Global phase has no QASM statement and is written as a
    ``// global_phase`` comment at its position in the gate list. Qubit ``k``
    maps to wire ``q[k-1]``.
    """
    lines = [*_QASM_HEADER, f"qreg q[{c.n_qubits}];"]
    for g in c.gates:
        if g.kind == "CNOT":
            lines.append(f"cx q[{g.qubits[0] - 1}],q[{g.qubits[1] - 1}];")
        elif g.kind == "GLOBAL_PHASE":
            lines.append(f"// global_phase {_fmt(g.angle)}")
        else:
            lines.append(f"{g.kind.lower()}({_fmt(-2 * g.angle)}) q[{g.qubits[0] - 1}];")
    return "\n".join(lines) + "\n"


_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_RE_QREG = re.compile(r"^qreg\s+q\s*\[\s*(\d+)\s*\]\s*;$")
_RE_CX = re.compile(r"^cx\s+q\s*\[\s*(\d+)\s*\]\s*,\s*q\s*\[\s*(\d+)\s*\]\s*;$")
_RE_ROT = re.compile(rf"^(rx|ry|rz)\s*\(\s*({_NUM})\s*\)\s*q\s*\[\s*(\d+)\s*\]\s*;$")
_RE_PHASE = re.compile(rf"^//\s*global_phase\s+({_NUM})$")


def import_qasm(text: str) -> Circuit:
    """Parse the subset written by :func:`export_qasm`.

    Raises:
        ValueError: on any statement outside that subset.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) < 3 or [re.sub(r"\s+", " ", ln) for ln in lines[:2]] != list(_QASM_HEADER):
        raise ValueError("missing OPENQASM 2.0 header")
    m = _RE_QREG.match(lines[2])
    if not m:
        raise ValueError(f"expected qreg declaration, got {lines[2]!r}")
    n = int(m.group(1))
    gates = []
    for ln in lines[3:]:
        if m := _RE_CX.match(ln):
            gates.append(cnot(int(m.group(1)) + 1, int(m.group(2)) + 1))
        elif m := _RE_ROT.match(ln):
            kind = m.group(1).upper()
            gates.append(Gate(kind, (int(m.group(3)) + 1,), -float(m.group(2)) / 2))
        elif m := _RE_PHASE.match(ln):
            gates.append(global_phase(float(m.group(1))))
        else:
            raise ValueError(f"unsupported QASM statement {ln!r}")
    return Circuit(n, tuple(gates))


def export_gatelist(c: Circuit) -> str:
    """One gate per line with full-precision angles in the internal convention."""
    lines = [f"qubits {c.n_qubits}"]
    for g in c.gates:
        fields = [g.kind, *map(str, g.qubits)]
        if g.kind != "CNOT":
            fields.append(repr(g.angle))
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def import_gatelist(text: str) -> Circuit:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2 or lines[0][0] != "qubits":
        raise ValueError("gate list must start with 'qubits <n>'")
    n = int(lines[0][1])
    gates = []
    for fields in lines[1:]:
        kind = fields[0]
        if kind == "CNOT":
            if len(fields) != 3:
                raise ValueError(f"bad CNOT line {' '.join(fields)!r}")
            gates.append(cnot(int(fields[1]), int(fields[2])))
        elif kind == "GLOBAL_PHASE":
            if len(fields) != 2:
                raise ValueError(f"bad GLOBAL_PHASE line {' '.join(fields)!r}")
            gates.append(global_phase(float(fields[1])))
        else:
            if len(fields) != 3:
                raise ValueError(f"bad rotation line {' '.join(fields)!r}")
            gates.append(Gate(kind, (int(fields[1]),), float(fields[2])))
    return Circuit(n, tuple(gates))


def load_circuit(text: str) -> Circuit:
    """Parse either format, chosen by the first non-blank line."""
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if first.startswith("OPENQASM"):
        return import_qasm(text)
    return import_gatelist(text)
