"""Command-line front end: ``cartan-qsd {decompose,random,verify,stats}``.

Exit codes: 0 success, 1 residual or count check failed, 2 parse, usage or
dimension-mismatch error, 3 non-unitary input, 4 decomposition failure.
Errors go to stderr as a single ``error=<kind> detail=<message>`` line.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass

import numpy as np

from cartan_qsd.circuit import (
    MAX_SIMULATION_QUBITS,
    Circuit,
    circuit_to_unitary,
    cnot_count,
    export_gatelist,
    export_qasm,
    load_circuit,
)
from cartan_qsd.decomp import MAX_DECOMPOSITION_QUBITS, cnot_formula, qsd
from cartan_qsd.errors import DecompositionError, NonUnitaryError
from cartan_qsd.matcore import (
    ACCEPTANCE_TOL,
    MAX_RANDOM_QUBITS,
    UNITARITY_TOL,
    check_unitary,
    haar_random_unitary,
    num_qubits,
    phase_aligned_distance,
)
from cartan_qsd.matfile import MatrixFormatError, dumps_matrix, load_matrix

TOL_ENV = "CARTAN_QSD_TOL"

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_USAGE = 2
EXIT_NONUNITARY = 3
EXIT_STRUCTURE = 4


class CliError(Exception):
    def __init__(self, kind: str, detail: str, status: int):
        super().__init__(detail)
        self.kind = kind
        self.status = status


@dataclass(frozen=True)
class Tolerances:
    unitarity: float
    acceptance: float

    def bound(self, n: int) -> float:
        """Residual bound for an ``n``-qubit reconstruction."""
        return self.acceptance * (1 << n)


def resolve_tolerances(flag: float | None, environ=os.environ) -> Tolerances:
    """``--tol`` wins over the environment variable, which wins over defaults."""
    value = flag
    if value is None and environ.get(TOL_ENV):
        try:
            value = float(environ[TOL_ENV])
        except ValueError:
            raise CliError("usage", f"{TOL_ENV}={environ[TOL_ENV]!r} is not a number", EXIT_USAGE) from None
    if value is None:
        return Tolerances(UNITARITY_TOL, ACCEPTANCE_TOL)
    if not np.isfinite(value) or value <= 0:
        raise CliError("usage", f"tolerance must be positive and finite, got {value}", EXIT_USAGE)
    return Tolerances(value, value)


@dataclass
class RunReport:
    n_qubits: int
    cnot_count: int
    total_gate_count: int
    reconstruction_residual: float
    elapsed_ms: float
    formula_count: int

    @property
    def match(self) -> bool:
        return self.cnot_count == self.formula_count

    def render(self) -> str:
        fields = [
            ("n_qubits", self.n_qubits),
            ("cnot_count", self.cnot_count),
            ("total_gate_count", self.total_gate_count),
            ("reconstruction_residual", f"{self.reconstruction_residual:.6e}"),
            ("elapsed_ms", f"{self.elapsed_ms:.3f}"),
            ("formula_count", self.formula_count),
            ("match", str(self.match).lower()),
        ]
        return "".join(f"{k}={v}\n" for k, v in fields)


def _report(c: Circuit, residual: float, elapsed_ms: float) -> RunReport:
    return RunReport(
        n_qubits=c.n_qubits,
        cnot_count=cnot_count(c),
        total_gate_count=sum(1 for g in c.gates if g.kind != "GLOBAL_PHASE"),
        reconstruction_residual=residual,
        elapsed_ms=elapsed_ms,
        formula_count=cnot_formula(c.n_qubits),
    )


def _read_matrix(path: str, tol: Tolerances) -> np.ndarray:
    try:
        m = load_matrix(path)
    except OSError as exc:
        raise CliError("io", f"cannot read {path}: {exc.strerror}", EXIT_USAGE) from None
    except MatrixFormatError as exc:
        raise CliError("parse", f"{path}: {exc}", EXIT_USAGE) from None
    try:
        num_qubits(m)
    except ValueError as exc:
        raise CliError("parse", f"{path}: {exc}", EXIT_USAGE) from None
    try:
        check_unitary(m, tol.unitarity)
    except NonUnitaryError as exc:
        raise CliError("nonunitary", f"{path}: {exc}", EXIT_NONUNITARY) from None
    return m


def _nearest_unitary(m: np.ndarray) -> np.ndarray:
    """Polar factor; lets inputs accepted at a loose ``--tol`` enter the engine."""
    left, _, right = np.linalg.svd(m)
    return left @ right


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError("io", f"cannot write {path}: {exc.strerror}", EXIT_USAGE) from None


def _residual(m: np.ndarray, c: Circuit) -> float:
    if c.n_qubits > MAX_SIMULATION_QUBITS:
        raise CliError(
            "usage",
            f"residual check refused above the simulation cap of {MAX_SIMULATION_QUBITS} qubits",
            EXIT_USAGE,
        )
    return phase_aligned_distance(m, circuit_to_unitary(c))


def cmd_decompose(args, tol: Tolerances) -> int:
    m = _read_matrix(args.input, tol)
    n = num_qubits(m)
    if n > args.max_qubits:
        raise CliError("usage", f"{n} qubits exceeds the decomposition cap of {args.max_qubits}", EXIT_USAGE)
    start = time.perf_counter()
    try:
        c = qsd(_nearest_unitary(m), max_qubits=args.max_qubits)
    except DecompositionError as exc:
        raise CliError("structure", f"{type(exc).__name__}: {exc}", EXIT_STRUCTURE) from None
    elapsed = (time.perf_counter() - start) * 1e3
    text = export_qasm(c) if args.format == "qasm" else export_gatelist(c)
    _write(args.out, text)
    residual = _residual(m, c) if args.check else float("nan")
    report = _report(c, residual, elapsed)
    # keep the circuit alone on stdout when it is written there
    (sys.stderr if args.out == "-" else sys.stdout).write(report.render())
    if args.check and not residual <= tol.bound(n):
        return EXIT_CHECK
    return EXIT_OK


def cmd_random(args, tol: Tolerances) -> int:
    if not 1 <= args.n_qubits <= MAX_RANDOM_QUBITS:
        raise CliError("usage", f"n_qubits must be in [1, {MAX_RANDOM_QUBITS}], got {args.n_qubits}", EXIT_USAGE)
    _write(args.out, dumps_matrix(haar_random_unitary(args.n_qubits, args.seed)))
    return EXIT_OK


def cmd_verify(args, tol: Tolerances) -> int:
    m = _read_matrix(args.matrix, tol)
    try:
        with open(args.circuit, encoding="utf-8") as fh:
            c = load_circuit(fh.read())
    except OSError as exc:
        raise CliError("io", f"cannot read {args.circuit}: {exc.strerror}", EXIT_USAGE) from None
    except ValueError as exc:
        raise CliError("parse", f"{args.circuit}: {exc}", EXIT_USAGE) from None
    n = num_qubits(m)
    if c.n_qubits != n:
        raise CliError("mismatch", f"matrix acts on {n} qubits but circuit on {c.n_qubits}", EXIT_USAGE)
    start = time.perf_counter()
    residual = _residual(m, c)
    report = _report(c, residual, (time.perf_counter() - start) * 1e3)
    sys.stdout.write(report.render())
    return EXIT_OK if residual <= tol.bound(n) else EXIT_CHECK


def cmd_stats(args, tol: Tolerances) -> int:
    if not 2 <= args.n_max <= args.max_qubits:
        raise CliError("usage", f"n_max must be in [2, {args.max_qubits}], got {args.n_max}", EXIT_USAGE)
    status = EXIT_OK
    sys.stdout.write("n cnot_count formula_count residual\n")
    for n in range(2, args.n_max + 1):
        u = haar_random_unitary(n, args.seed)
        try:
            c = qsd(u, max_qubits=args.max_qubits)
        except DecompositionError as exc:
            raise CliError("structure", f"n={n}: {type(exc).__name__}: {exc}", EXIT_STRUCTURE) from None
        residual = _residual(u, c)
        measured, formula = cnot_count(c), cnot_formula(n)
        sys.stdout.write(f"{n} {measured} {formula} {residual:.3e}\n")
        if measured != formula or not residual <= tol.bound(n):
            status = EXIT_CHECK
    return status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("usage", message, EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--tol", type=float, default=None, help=f"tolerance override (env {TOL_ENV})")
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--out", default="-", help="output path, '-' for stdout")
    shared.add_argument("--format", choices=("qasm", "gatelist"), default="qasm")
    shared.add_argument("--check", action="store_true", help="simulate the circuit and report the residual")
    shared.add_argument("--max-qubits", type=int, default=MAX_DECOMPOSITION_QUBITS)

    parser = _Parser(prog="cartan-qsd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("decompose", parents=[shared], help="matrix file to circuit")
    p.add_argument("input")
    p.set_defaults(func=cmd_decompose)
    p = sub.add_parser("random", parents=[shared], help="write a seeded Haar-random matrix")
    p.add_argument("n_qubits", type=int)
    p.set_defaults(func=cmd_random)
    p = sub.add_parser("verify", parents=[shared], help="compare a matrix with a circuit")
    p.add_argument("matrix")
    p.add_argument("circuit")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("stats", parents=[shared], help="CNOT counts against the closed form")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        tol = resolve_tolerances(args.tol)
        return args.func(args, tol)
    except CliError as exc:
        detail = " ".join(str(exc).split())
        print(f"error={exc.kind} detail={detail}", file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
