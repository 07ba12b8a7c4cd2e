"""Probability-amplitude codec: samples become statevector amplitudes.

Mapping (for samples a_i in [-1, 1]):

    alpha_i = sqrt(((a_i + 1) / 2) / g),    g = sum_k (a_k + 1) / 2

so the measurement histogram is a shifted, scaled copy of the signal and
retrieval is a_i = 2 g p_i - 1. The constant g travels classically with the
circuit; it is not recoverable from the quantum state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..circuit import Circuit, GateOp, RegisterLayout
from ..errors import DegenerateSignalError

_NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class QpamEncoding:
    """N nonnegative probability amplitudes and the normalization constant g."""

    alphas: np.ndarray
    g: float

    def __post_init__(self):
        arr = np.asarray(self.alphas, dtype=np.float64)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("alphas must be a nonempty 1-D array")
        if np.any(arr < 0):
            raise ValueError("alphas must be nonnegative")
        if abs(np.sum(arr**2) - 1.0) > _NORM_TOL:
            raise ValueError("alphas are not normalized")
        arr.flags.writeable = False
        object.__setattr__(self, "alphas", arr)

    @property
    def n_samples(self) -> int:
        return self.alphas.size


def qpam_map(samples) -> QpamEncoding:
    """Shift to [0, 1], normalize by the sum g, and take the square root."""
    a = np.asarray(samples, dtype=np.float64)
    shifted = (a + 1.0) / 2.0
    g = float(np.sum(shifted))
    if g <= 0.0:
        raise DegenerateSignalError(
            "all samples at -1: the shifted sum is 0 and cannot normalize"
        )
    return QpamEncoding(np.sqrt(shifted / g), g)


def qpam_state(encoding: QpamEncoding) -> np.ndarray:
    """Closed-form statevector (direct injection mode): the alphas themselves."""
    return encoding.alphas.astype(np.complex128)


def qpam_layout(n_samples: int) -> RegisterLayout:
    n = (n_samples - 1).bit_length()
    if (1 << n) != n_samples:
        raise ValueError(f"sample count must be a power of two, got {n_samples}")
    return RegisterLayout.build(n)


def qpam_prepare(encoding: QpamEncoding) -> Circuit:
    """Circuit placing alpha_i on basis state |i>.

    Synthesized as a binary-split tree of multiplexed Ry rotations: the
    level-l rotation on time qubit n-1-l splits the probability mass of one
    l-bit prefix between its two children. All amplitudes are nonnegative
    reals, so no phase stage is needed and the simulated state matches the
    closed form exactly (up to float roundoff). Emits N - 1 rotations.
    """
    N = encoding.n_samples
    layout = qpam_layout(N)
    n = layout.time.size

    # masses[l][p] = probability mass of the length-l prefix p
    masses = [None] * (n + 1)
    masses[n] = encoding.alphas**2
    for level in range(n - 1, -1, -1):
        masses[level] = masses[level + 1].reshape(-1, 2).sum(axis=1)

    ops = []
    for level in range(n):
        qubit = n - 1 - level
        for prefix in range(1 << level):
            w0 = masses[level + 1][2 * prefix]
            w1 = masses[level + 1][2 * prefix + 1]
            angle = 2.0 * math.atan2(math.sqrt(w1), math.sqrt(w0))
            # prefix bit j (MSB first) conditions qubit n-1-j
            controls = tuple(
                (n - 1 - j, (prefix >> (level - 1 - j)) & 1) for j in range(level)
            )
            ops.append(GateOp("ry", qubit, controls, angle))

    return Circuit(layout, tuple(ops), "qpam", {"N": N, "g": encoding.g})


def qpam_decode(weights, g, n_time_qubits: int) -> np.ndarray:
    """Retrieve samples from histogram weights: a_i = 2 g p_i - 1.

    ``weights`` maps time-register bitstrings to counts or probabilities;
    p_i is the weight fraction, so raw counts and normalized probabilities
    decode identically. Unobserved indexes decode faithfully to -1.

    ``g="auto"`` renormalizes from the output instead of using the encoder's
    constant: the weights are treated as unnormalized and g is the sum of
    the normalized bins, which is always 1.
    """
    total = float(sum(weights.values()))
    if total <= 0.0:
        raise ValueError("histogram has no counts")
    N = 1 << n_time_qubits
    p = np.zeros(N)
    for key, w in weights.items():
        p[int(key, 2) if key else 0] = w / total
    g_val = 1.0 if g == "auto" else float(g)
    return 2.0 * g_val * p - 1.0
