"""State-modulation codec family: quantized samples become multi-qubit
binary words entangled with the time register.

    |A> = (1/sqrt(N C)) sum_j sum_i |c_j> (x) |word_ij> (x) |i>

Word interpretation is the scheme's number scheme: signed two's complement
(qsm, mqsm), unsigned (uqsm), or fixed point (fpqsm). Preparation is a
Hadamard wall plus one multi-controlled X per 1-bit of each code word, the
control pattern selecting the (channel, time) index. Retrieval is
deterministic on the quantized grid: for each index the most frequent
amplitude pattern wins (majority vote), which with exact probabilities
reduces to unique-pair parsing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import audio
from ..audio import QuantizedAudio, bits_to_word, word_range
from ..circuit import Circuit, RegisterLayout, bitstring, hadamard_wall, value_setting_x
from ..schemes import normalize_scheme, quant_kind


@dataclass(frozen=True, eq=False)
class QsmEncoding:
    """Code words (one row per channel) plus depth and scheme."""

    words: np.ndarray
    depth: int
    scheme: str = "qsm"
    integer_bits: int | None = None

    def __post_init__(self):
        scheme = normalize_scheme(self.scheme)
        kind = quant_kind(scheme)
        if kind is None:
            raise ValueError(f"{scheme} is not a state-modulation scheme")
        object.__setattr__(self, "scheme", scheme)
        arr = np.array(self.words, dtype=np.int64, ndmin=2)
        if arr.size == 0:
            raise ValueError("words must be nonempty")
        lo, hi = word_range(self.depth, kind)
        if arr.min() < lo or arr.max() > hi:
            raise ValueError(f"words outside {kind} range [{lo}, {hi}] for q={self.depth}")
        if kind == audio.FIXED_POINT and self.integer_bits is None:
            raise ValueError("fpqsm requires integer_bits")
        arr.flags.writeable = False
        object.__setattr__(self, "words", arr)

    @property
    def channels(self) -> int:
        return self.words.shape[0]

    @property
    def n_samples(self) -> int:
        return self.words.shape[1]

    @property
    def kind(self) -> str:
        return quant_kind(self.scheme)


def qsm_layout(n_samples: int, depth: int, channels: int = 1) -> RegisterLayout:
    n = (n_samples - 1).bit_length()
    if (1 << n) != n_samples:
        raise ValueError(f"sample count must be a power of two, got {n_samples}")
    c = (channels - 1).bit_length()
    if (1 << c) != channels:
        raise ValueError(f"channel count must be a power of two, got {channels}")
    return RegisterLayout.build(n, depth, c)


def qsm_state(encoding: QsmEncoding) -> np.ndarray:
    """Closed-form statevector: N*C equal amplitudes 1/sqrt(N*C)."""
    C, N = encoding.words.shape
    n = (N - 1).bit_length()
    q = encoding.depth
    amps = np.zeros((1 << (n + q)) * C, dtype=np.complex128)
    scale = 1.0 / np.sqrt(N * C)
    mask = (1 << q) - 1
    for j in range(C):
        for i in range(N):
            pattern = int(encoding.words[j, i]) & mask
            amps[(j << (n + q)) | (pattern << n) | i] = scale
    return amps


def qsm_prepare(encoding: QsmEncoding) -> Circuit:
    """Hadamard wall plus value-setting X gates, one per 1-bit of each word.

    All-zero words need no gates at all, so the multi-controlled X count of
    the circuit equals the total popcount of the code-word bit patterns.
    """
    C, N = encoding.words.shape
    q = encoding.depth
    layout = qsm_layout(N, q, C)
    ops = hadamard_wall(layout)
    mask = (1 << q) - 1
    for j in range(C):
        ch = j if layout.channel is not None else None
        for i in range(N):
            pattern = int(encoding.words[j, i]) & mask
            for b in range(q):
                if (pattern >> b) & 1:
                    ops.append(value_setting_x(layout, i, b, ch))
    scheme = "mqsm" if C > 1 else encoding.scheme
    metadata = {"N": N, "q": q}
    if C > 1:
        metadata["C"] = C
    if encoding.integer_bits is not None:
        metadata["integer_bits"] = encoding.integer_bits
    return Circuit(layout, tuple(ops), scheme, metadata)


def qsm_decode(
    weights,
    layout: RegisterLayout,
    depth: int,
    scheme: str = "qsm",
    integer_bits: int | None = None,
    sample_rate: int = 44100,
) -> tuple[QuantizedAudio, np.ndarray]:
    """Majority-vote retrieval of code words from histogram weights.

    Returns (quantized audio, unobserved flags). Indexes never observed
    decode as word 0 and are flagged. Ties break toward the smallest
    amplitude pattern so decoding is deterministic.
    """
    scheme = normalize_scheme(scheme)
    kind = quant_kind(scheme)
    N = 1 << layout.time.size
    C = 1 << (layout.channel.size if layout.channel else 0)
    q = depth
    best = {}  # (j, i) -> (weight, pattern)
    for key, w in weights.items():
        if w <= 0:
            continue
        i = layout.extract(key, "time")
        pattern = layout.extract(key, "amplitude")
        j = layout.extract(key, "channel")
        cur = best.get((j, i))
        if cur is None or (w, -pattern) > (cur[0], -cur[1]):
            best[(j, i)] = (w, pattern)
    words = np.zeros((C, N), dtype=np.int64)
    unobserved = np.ones((C, N), dtype=bool)
    for (j, i), (_, pattern) in best.items():
        words[j, i] = bits_to_word(bitstring(pattern, q), kind)
        unobserved[j, i] = False
    qa = QuantizedAudio(
        words,
        q,
        kind,
        integer_bits if kind == audio.FIXED_POINT else None,
        sample_rate,
    )
    return qa, unobserved


def mqsm_interleave(channels, depth: int) -> QsmEncoding:
    """Stack per-channel signals into one multichannel encoding.

    Channel sequences must share one length; the channel count is padded to
    a power of two with silent (all-zero-word) channels. Samples are
    quantized per channel under the signed two's-complement scheme.
    """
    rows = [np.asarray(ch, dtype=np.float64) for ch in channels]
    lengths = {r.shape[-1] for r in rows}
    if len(lengths) != 1:
        raise ValueError(f"channel lengths differ: {sorted(lengths)}")
    C = len(rows)
    padded_c = 1 << (C - 1).bit_length()
    data = np.zeros((padded_c, lengths.pop()))
    for j, row in enumerate(rows):
        data[j] = row
    qa = audio.quantize(audio.DigitalAudio(data), depth, audio.TWOS_COMPLEMENT)
    return QsmEncoding(qa.words, depth, "mqsm")
