"""Encoder/decoder pairs per representation scheme, plus a uniform
audio -> circuit -> histogram -> audio dispatch used by the CLI.

Accepted scheme names (case-insensitive): qpam, sqpam, qsm, uqsm, fpqsm,
mqsm, msqpam.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import audio as _audio
from ..audio import DigitalAudio, QuantizedAudio, dequantize, quantize, zero_pad_pow2
from ..circuit import Circuit
from ..schemes import SCHEMES, is_multichannel, normalize_scheme, quant_kind
from .qpam import QpamEncoding, qpam_decode, qpam_map, qpam_prepare, qpam_state
from .qsm import QsmEncoding, mqsm_interleave, qsm_decode, qsm_layout, qsm_prepare, qsm_state
from .sqpam import SqpamEncoding, sqpam_decode, sqpam_layout, sqpam_map, sqpam_prepare, sqpam_state

__all__ = [
    "SCHEMES",
    "DecodeResult",
    "QpamEncoding",
    "QsmEncoding",
    "SqpamEncoding",
    "decode",
    "encode",
    "mqsm_interleave",
    "pad_channels",
    "qpam_decode",
    "qpam_map",
    "qpam_prepare",
    "qpam_state",
    "qsm_decode",
    "qsm_layout",
    "qsm_prepare",
    "qsm_state",
    "sqpam_decode",
    "sqpam_layout",
    "sqpam_map",
    "sqpam_prepare",
    "sqpam_state",
]


def pad_channels(data: np.ndarray, requested: int | None) -> np.ndarray:
    have = data.shape[0]
    want = max(have, requested or have)
    target = 1 << (want - 1).bit_length()
    if target == have:
        return data
    padded = np.zeros((target, data.shape[1]))
    padded[:have] = data
    return padded


def encode(
    signal: DigitalAudio,
    scheme: str,
    depth: int = 8,
    integer_bits: int | None = None,
    channels: int | None = None,
) -> Circuit:
    """Map a signal onto a preparation circuit for the given scheme.

    Samples are zero-padded to a power-of-two length first. Multichannel
    schemes (mqsm, msqpam) additionally pad the channel count to a power of
    two with silent channels; the other schemes require mono input.
    ``channels`` forces a larger channel register than the input has.
    """
    scheme = normalize_scheme(scheme)
    padded = zero_pad_pow2(signal)
    if not is_multichannel(scheme):
        if padded.n_channels != 1:
            raise ValueError(
                f"{scheme} is single-channel; use mqsm or msqpam for "
                f"{padded.n_channels}-channel audio"
            )
        if channels not in (None, 1):
            raise ValueError(f"{scheme} does not take a channel register")

    if scheme == "qpam":
        circuit = qpam_prepare(qpam_map(padded.mono))
    elif scheme == "sqpam":
        circuit = sqpam_prepare(sqpam_map(padded.mono))
    elif scheme == "msqpam":
        data = pad_channels(padded.samples, channels)
        circuit = sqpam_prepare(sqpam_map(data))
    elif scheme == "mqsm":
        data = pad_channels(padded.samples, channels)
        qa = quantize(DigitalAudio(data, padded.sample_rate), depth, _audio.TWOS_COMPLEMENT)
        circuit = qsm_prepare(QsmEncoding(qa.words, depth, "mqsm"))
    else:
        kind = quant_kind(scheme)
        if kind == _audio.FIXED_POINT and integer_bits is None:
            integer_bits = 0
        qa = quantize(padded, depth, kind, integer_bits)
        circuit = qsm_prepare(QsmEncoding(qa.words, depth, scheme, qa.integer_bits))

    return circuit.with_metadata(sample_rate=padded.sample_rate)


@dataclass(frozen=True, eq=False)
class DecodeResult:
    """Reconstructed audio plus retrieval diagnostics.

    ``words`` carries the recovered code words for state-modulation schemes
    (None otherwise). ``unobserved`` flags (channel, index) positions that
    were never measured and therefore decoded without information.
    """

    audio: DigitalAudio
    words: QuantizedAudio | None
    unobserved: np.ndarray


def _weights(counts_or_hist) -> dict[str, float]:
    counts = getattr(counts_or_hist, "counts", counts_or_hist)
    return dict(counts)


def decode(counts_or_hist, circuit: Circuit, g=None) -> DecodeResult:
    """Reconstruct audio from a measurement histogram (or exact probabilities).

    Decode parameters come from the circuit metadata. For qpam, ``g``
    overrides the encoder's constant; pass "auto" for the output-side
    renormalization mode.
    """
    weights = _weights(counts_or_hist)
    scheme = normalize_scheme(circuit.scheme)
    meta = circuit.metadata
    rate = int(meta.get("sample_rate", 44100))

    if scheme == "qpam":
        samples = qpam_decode(weights, meta["g"] if g is None else g, circuit.layout.time.size)
        return DecodeResult(
            DigitalAudio(samples, rate), None, np.zeros((1, samples.size), dtype=bool)
        )
    if scheme in ("sqpam", "msqpam"):
        samples, unobserved = sqpam_decode(weights, circuit.layout)
        return DecodeResult(DigitalAudio(samples, rate), None, unobserved)

    qa, unobserved = qsm_decode(
        weights,
        circuit.layout,
        int(meta["q"]),
        scheme,
        meta.get("integer_bits"),
        rate,
    )
    return DecodeResult(dequantize(qa), qa, unobserved)
