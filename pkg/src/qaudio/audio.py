"""Digital audio containers, quantization schemes, and bit-level word codecs.

Amplitudes are dimensionless floats with nominal range [-1, 1]. Integer code
words use one of three number schemes: ``unsigned``, ``twos_complement``
(MSB is the sign bit and x + (-x) wraps to zero), or ``fixed_point`` (the
whole q-bit word read as a two's-complement integer scaled by
2**-(q - m - 1), where m is the integer-bit count).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

UNSIGNED = "unsigned"
TWOS_COMPLEMENT = "twos_complement"
FIXED_POINT = "fixed_point"

NUMBER_SCHEMES = (UNSIGNED, TWOS_COMPLEMENT, FIXED_POINT)


def index_to_time(k: int, sample_rate: int) -> float:
    """Convert a sample index into seconds: t_k = k / sample_rate."""
    if sample_rate <= 0:
        raise ValueError(f"sample_rate must be positive, got {sample_rate}")
    if k < 0:
        raise ValueError(f"sample index must be nonnegative, got {k}")
    return k / sample_rate


@dataclass(frozen=True, eq=False)
class DigitalAudio:
    """Float samples with a sample rate; the classical endpoint of round trips.

    ``samples`` is always a read-only (channels, n_samples) float64 array.
    1-D input is promoted to a single channel.
    """

    samples: np.ndarray
    sample_rate: int = 44100

    def __post_init__(self):
        arr = np.array(self.samples, dtype=np.float64, ndmin=2)
        if arr.ndim != 2:
            raise ValueError(f"samples must be 1-D or 2-D, got shape {arr.shape}")
        if arr.shape[1] == 0:
            raise ValueError("audio must contain at least one sample")
        if self.sample_rate <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    @property
    def n_channels(self) -> int:
        return self.samples.shape[0]

    @property
    def n_samples(self) -> int:
        return self.samples.shape[1]

    def channel(self, j: int) -> np.ndarray:
        return self.samples[j]

    @property
    def mono(self) -> np.ndarray:
        """The single channel of a mono signal."""
        if self.n_channels != 1:
            raise ValueError(f"audio has {self.n_channels} channels, not mono")
        return self.samples[0]

    def duration(self) -> float:
        return index_to_time(self.n_samples, self.sample_rate)


def zero_pad_pow2(audio: DigitalAudio) -> DigitalAudio:
    """Pad every channel with zeros up to the next power-of-two length.

    Input already at a power-of-two length is returned unchanged.
    """
    n = audio.n_samples
    target = 1 << (n - 1).bit_length()
    if target == n:
        return audio
    padded = np.zeros((audio.n_channels, target))
    padded[:, :n] = audio.samples
    return DigitalAudio(padded, audio.sample_rate)


def word_range(depth: int, scheme: str = TWOS_COMPLEMENT) -> tuple[int, int]:
    """Inclusive (lo, hi) of representable code words for a scheme."""
    _check_scheme(depth, scheme)
    if scheme == UNSIGNED:
        return 0, (1 << depth) - 1
    return -(1 << (depth - 1)), (1 << (depth - 1)) - 1


def _check_scheme(depth: int, scheme: str, integer_bits: int | None = None):
    if scheme not in NUMBER_SCHEMES:
        raise ValueError(f"unknown number scheme {scheme!r}")
    if depth < 1:
        raise ValueError(f"bit depth must be >= 1, got {depth}")
    if scheme == FIXED_POINT and integer_bits is not None:
        if integer_bits < 0 or integer_bits + 1 > depth:
            raise ValueError(
                f"fixed point needs integer_bits + 1 <= depth, "
                f"got m={integer_bits}, q={depth}"
            )


@dataclass(frozen=True, eq=False)
class QuantizedAudio:
    """Integer code words under a declared bit depth and number scheme."""

    words: np.ndarray
    depth: int
    scheme: str = TWOS_COMPLEMENT
    integer_bits: int | None = None
    sample_rate: int = 44100
    clipped: int = 0

    def __post_init__(self):
        _check_scheme(self.depth, self.scheme, self.integer_bits)
        if self.scheme == FIXED_POINT and self.integer_bits is None:
            raise ValueError("fixed_point scheme requires integer_bits")
        arr = np.array(self.words, dtype=np.int64, ndmin=2)
        lo, hi = word_range(self.depth, self.scheme)
        if arr.size and (arr.min() < lo or arr.max() > hi):
            raise ValueError(
                f"code words out of {self.scheme} range [{lo}, {hi}] for q={self.depth}"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "words", arr)

    @property
    def n_channels(self) -> int:
        return self.words.shape[0]

    @property
    def n_samples(self) -> int:
        return self.words.shape[1]


def _round_half_away(x: np.ndarray) -> np.ndarray:
    # np.round ties to even; the quantizer rounds ties away from zero so the
    # grid stays symmetric around 0.
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def quantize(
    audio: DigitalAudio,
    depth: int,
    scheme: str = TWOS_COMPLEMENT,
    integer_bits: int | None = None,
) -> QuantizedAudio:
    """Round amplitudes onto the integer grid of the given scheme.

    Two's complement uses the symmetric full scale +-1 <-> +-(2**(q-1) - 1),
    so negating every code word stays in range (polarity inversion is exact).
    Out-of-range amplitudes clamp, counted in ``clipped``, with a warning.
    """
    _check_scheme(depth, scheme, integer_bits)
    a = audio.samples
    if scheme == TWOS_COMPLEMENT:
        full = (1 << (depth - 1)) - 1
        raw = _round_half_away(a * full)
        lo, hi = -full, full
    elif scheme == UNSIGNED:
        full = (1 << depth) - 1
        raw = _round_half_away((a + 1.0) / 2.0 * full)
        lo, hi = 0, full
    else:
        if integer_bits is None:
            integer_bits = 0
        scale = 1 << (depth - integer_bits - 1)
        raw = _round_half_away(a * scale)
        lo, hi = word_range(depth, scheme)
    words = np.clip(raw, lo, hi)
    clipped = int(np.count_nonzero(words != raw))
    if clipped:
        warnings.warn(f"{clipped} sample(s) clipped to the representable range")
    return QuantizedAudio(
        words.astype(np.int64),
        depth,
        scheme,
        integer_bits if scheme == FIXED_POINT else None,
        audio.sample_rate,
        clipped,
    )


def dequantize(qa: QuantizedAudio) -> DigitalAudio:
    """Map code words back to float amplitudes (inverse of the quantizer grid)."""
    w = qa.words.astype(np.float64)
    if qa.scheme == TWOS_COMPLEMENT:
        a = w / ((1 << (qa.depth - 1)) - 1)
    elif qa.scheme == UNSIGNED:
        a = 2.0 * w / ((1 << qa.depth) - 1) - 1.0
    else:
        a = w / (1 << (qa.depth - qa.integer_bits - 1))
    return DigitalAudio(a, qa.sample_rate)


def word_to_bits(word: int, depth: int, scheme: str = TWOS_COMPLEMENT) -> str:
    """q-bit string for a code word, MSB first.

    Two's complement (and fixed point, which shares the bit pattern) uses the
    MSB as the sign bit, so e.g. -2 at q=4 is "1110".
    """
    _check_scheme(depth, scheme)
    lo, hi = word_range(depth, scheme)
    if not lo <= word <= hi:
        raise ValueError(f"word {word} outside {scheme} range [{lo}, {hi}]")
    return format(int(word) & ((1 << depth) - 1), f"0{depth}b")


def bits_to_word(bits: str, scheme: str = TWOS_COMPLEMENT, depth: int | None = None) -> int:
    """Inverse of :func:`word_to_bits`; the word length is len(bits)."""
    if scheme not in NUMBER_SCHEMES:
        raise ValueError(f"unknown number scheme {scheme!r}")
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"not a bitstring: {bits!r}")
    if depth is not None and len(bits) != depth:
        raise ValueError(f"expected {depth} bits, got {len(bits)}")
    u = int(bits, 2)
    if scheme == UNSIGNED:
        return u
    if bits[0] == "1":
        return u - (1 << len(bits))
    return u


def fixed_point_value(word: int, depth: int, integer_bits: int) -> float:
    """Value of a fixed-point word: signed integer / 2**fractional_bits."""
    _check_scheme(depth, FIXED_POINT, integer_bits)
    return word / (1 << (depth - integer_bits - 1))


def binary_add(a: str, b: str) -> str:
    """Bitwise binary addition of two equal-length words, overflow discarded.

    Under two's complement this realizes x + (-x) = 0.
    """
    if len(a) != len(b):
        raise ValueError(f"word lengths differ: {len(a)} vs {len(b)}")
    total = (int(a, 2) + int(b, 2)) & ((1 << len(a)) - 1)
    return format(total, f"0{len(a)}b")
