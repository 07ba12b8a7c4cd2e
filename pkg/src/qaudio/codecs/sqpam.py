"""Single-qubit angle codec: samples become Ry rotation angles on one
dedicated amplitude qubit entangled with the time register.

    theta_i = arcsin(sqrt((a_i + 1) / 2))        in [0, pi/2]

    |A> = (1/sqrt(N)) sum_i (cos theta_i |0> + sin theta_i |1>) (x) |i>

Retrieval reads both bins of the amplitude qubit per time index:

    a_i = 2 p_i(1) / (p_i(0) + p_i(1)) - 1

The per-index ratio cancels the 1/N prefactor and is robust to count
fluctuations. The multichannel variant (msqpam) adds a channel register
above the amplitude qubit and stores one angle vector per channel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..circuit import Circuit, RegisterLayout, hadamard_wall, value_setting_ry


@dataclass(frozen=True, eq=False)
class SqpamEncoding:
    """Angle matrix, one row per channel. Mono signals have a single row."""

    thetas: np.ndarray

    def __post_init__(self):
        arr = np.array(self.thetas, dtype=np.float64, ndmin=2)
        if arr.ndim != 2 or arr.size < 1:
            raise ValueError("thetas must be 1-D or 2-D and nonempty")
        if np.any(arr < 0) or np.any(arr > np.pi / 2 + 1e-12):
            raise ValueError("angles must lie in [0, pi/2]")
        arr.flags.writeable = False
        object.__setattr__(self, "thetas", arr)

    @property
    def channels(self) -> int:
        return self.thetas.shape[0]

    @property
    def n_samples(self) -> int:
        return self.thetas.shape[1]


def sqpam_map(samples) -> SqpamEncoding:
    """theta_i = arcsin(sqrt((a_i + 1) / 2)); all of [-1, 1] is legal here."""
    a = np.asarray(samples, dtype=np.float64)
    return SqpamEncoding(np.arcsin(np.sqrt(np.clip((a + 1.0) / 2.0, 0.0, 1.0))))


def sqpam_layout(n_samples: int, channels: int = 1) -> RegisterLayout:
    n = (n_samples - 1).bit_length()
    if (1 << n) != n_samples:
        raise ValueError(f"sample count must be a power of two, got {n_samples}")
    c = (channels - 1).bit_length()
    if (1 << c) != channels:
        raise ValueError(f"channel count must be a power of two, got {channels}")
    return RegisterLayout.build(n, 1, c)


def sqpam_state(encoding: SqpamEncoding) -> np.ndarray:
    """Closed-form statevector of the defining superposition."""
    C, N = encoding.thetas.shape
    n = (N - 1).bit_length()
    amps = np.zeros(2 * N * C, dtype=np.complex128)
    scale = 1.0 / np.sqrt(N * C)
    cos = np.cos(encoding.thetas) * scale
    sin = np.sin(encoding.thetas) * scale
    for j in range(C):
        base = j << (n + 1)
        amps[base : base + N] = cos[j]
        amps[base + N : base + 2 * N] = sin[j]
    return amps


def sqpam_prepare(encoding: SqpamEncoding) -> Circuit:
    """Hadamard wall, then one value-setting Ry(2 theta) per index.

    A zero-amplitude sample still needs its rotation (theta = pi/4 for
    a = 0), so no gates are skipped; the circuit always holds N*C rotations.
    """
    C, N = encoding.thetas.shape
    layout = sqpam_layout(N, C)
    ops = hadamard_wall(layout)
    for j in range(C):
        ch = j if layout.channel is not None else None
        for i in range(N):
            ops.append(value_setting_ry(layout, i, 2.0 * encoding.thetas[j, i], ch))
    scheme = "msqpam" if C > 1 else "sqpam"
    metadata = {"N": N}
    if C > 1:
        metadata["C"] = C
    return Circuit(layout, tuple(ops), scheme, metadata)


def sqpam_decode(weights, layout: RegisterLayout) -> tuple[np.ndarray, np.ndarray]:
    """Per-index sine/cosine ratio retrieval.

    Returns (samples, unobserved), both shaped (channels, N). A time index
    with no counts at all decodes as 0.0 and is flagged: absence there
    signals undersampling, not amplitude information.
    """
    N = 1 << layout.time.size
    C = 1 << (layout.channel.size if layout.channel else 0)
    acc = np.zeros((C, 2, N))
    for key, w in weights.items():
        i = layout.extract(key, "time")
        gamma = layout.extract(key, "amplitude")
        j = layout.extract(key, "channel")
        acc[j, gamma, i] += w
    totals = acc.sum(axis=1)
    unobserved = totals <= 0.0
    safe = np.where(unobserved, 1.0, totals)
    samples = 2.0 * acc[:, 1, :] / safe - 1.0
    samples[unobserved] = 0.0
    return samples, unobserved
