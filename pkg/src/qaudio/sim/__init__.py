"""Dense statevector simulator for the representation gate set.

Gates are H, X, and Ry(angle), each with any number of polarized controls.
A negative control triggers on |0> and is simulated natively (equivalent to
conjugating a positive control with X gates). Basis index bit k corresponds
to qubit k, with qubit 0 the least significant bit.

Shot sampling is multinomial over |amplitude|^2 using numpy's default
PCG64 generator; identical (state, shots, seed) triples give identical
histograms regardless of platform.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from ..circuit import Circuit, GateOp, RegisterLayout, bitstring
from ..errors import QubitBudgetError
from .kernels import KERNEL_BACKEND, apply_gate_kernel

DEFAULT_MAX_QUBITS = 26
_NORM_TOL = 1e-12
_SQRT1_2 = 1.0 / math.sqrt(2.0)


def max_qubits() -> int:
    """Simulator qubit budget; QAUDIO_MAX_QUBITS overrides the default of 26."""
    env = os.environ.get("QAUDIO_MAX_QUBITS")
    return int(env) if env else DEFAULT_MAX_QUBITS


@dataclass(frozen=True, eq=False)
class StateVector:
    """2^n complex amplitudes with unit norm.

    The constructor takes ownership of the buffer and marks it read-only;
    use :meth:`from_amplitudes` to copy and validate external data.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.amplitudes, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0 or arr.size & (arr.size - 1):
            raise ValueError("amplitude count must be a power of two")
        arr.flags.writeable = False
        object.__setattr__(self, "amplitudes", arr)

    @property
    def n_qubits(self) -> int:
        return self.amplitudes.size.bit_length() - 1

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @classmethod
    def zero(cls, n_qubits: int) -> "StateVector":
        amps = np.zeros(1 << n_qubits, dtype=np.complex128)
        amps[0] = 1.0
        return cls(amps)

    @classmethod
    def from_amplitudes(cls, values, tol: float = _NORM_TOL) -> "StateVector":
        amps = np.array(values, dtype=np.complex128)
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > tol:
            raise ValueError(f"state is not normalized: sum |amp|^2 = {norm_sq!r}")
        return cls(amps)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def gate_matrix(op: GateOp) -> tuple[complex, complex, complex, complex]:
    """Row-major 2x2 matrix entries for a gate. Ry(2*theta) rotates
    |0> to cos(theta)|0> + sin(theta)|1>."""
    if op.kind == "h":
        return _SQRT1_2, _SQRT1_2, _SQRT1_2, -_SQRT1_2
    if op.kind == "x":
        return 0.0, 1.0, 1.0, 0.0
    half = op.angle / 2.0
    c, s = math.cos(half), math.sin(half)
    return c, -s, s, c


def _control_masks(op: GateOp) -> tuple[int, int]:
    cmask = 0
    cval = 0
    for q, polarity in op.controls:
        cmask |= 1 << q
        if polarity:
            cval |= 1 << q
    return cmask, cval


def _apply_inplace(amps: np.ndarray, n_qubits: int, op: GateOp) -> None:
    if op.max_qubit >= n_qubits:
        raise ValueError(f"op {op} out of range for {n_qubits} qubits")
    m00, m01, m10, m11 = gate_matrix(op)
    cmask, cval = _control_masks(op)
    apply_gate_kernel(amps, n_qubits, m00, m01, m10, m11, op.target, cmask, cval)


def apply_gate(state: StateVector, op: GateOp) -> StateVector:
    """Unitary action of one gate; returns a new state."""
    amps = state.amplitudes.copy()
    _apply_inplace(amps, state.n_qubits, op)
    return StateVector(amps)


def run_circuit(circuit: Circuit, budget: int | None = None) -> StateVector:
    """Apply the circuit's gates in order, starting from |0...0>."""
    n = circuit.n_qubits
    limit = budget if budget is not None else max_qubits()
    if n > limit:
        raise QubitBudgetError(f"circuit needs {n} qubits, budget is {limit}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    for op in circuit.ops:
        _apply_inplace(amps, n, op)
    return StateVector(amps)


@dataclass(frozen=True, eq=False)
class MeasurementHistogram:
    """Outcome bitstring -> count, with the shot total and register layout."""

    counts: dict[str, int]
    shots: int
    register_layout: RegisterLayout | None = None

    def __post_init__(self):
        if self.shots < 1:
            raise ValueError("shots must be >= 1")
        total = sum(self.counts.values())
        if total != self.shots:
            raise ValueError(f"counts sum to {total}, expected {self.shots} shots")
        widths = {len(k) for k in self.counts}
        if len(widths) > 1:
            raise ValueError("histogram keys have mixed lengths")


def sample(
    state: StateVector,
    shots: int,
    seed: int = 0,
    layout: RegisterLayout | None = None,
) -> MeasurementHistogram:
    """Multinomial sampling from |amplitude|^2. Deterministic in the seed."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    probs = state.probabilities()
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    draws = rng.multinomial(shots, probs)
    n = state.n_qubits
    counts = {bitstring(i, n): int(c) for i, c in enumerate(draws) if c}
    return MeasurementHistogram(counts, shots, layout)


def exact_probabilities(state: StateVector) -> dict[str, float]:
    """Infinite-shot limit: bitstring -> probability, zero entries omitted."""
    probs = state.probabilities()
    n = state.n_qubits
    return {bitstring(i, n): float(p) for i, p in enumerate(probs) if p > 0.0}
