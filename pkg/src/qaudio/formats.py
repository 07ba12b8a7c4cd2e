"""Audio file I/O: CSV (the canonical desk-test format) and 16-bit PCM WAV.

CSV layout: one header line ``sample_rate,<int>``, then one row per frame
with one decimal-float column per channel. The CSV round trip is lossless
(floats are written with shortest round-trip repr).

WAV support is deliberately narrow: RIFF little-endian, PCM format code 1,
16 bits per sample, mono or stereo. Parse failures are reported distinctly
as malformed header / unsupported encoding / truncated payload.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .audio import DigitalAudio
from .errors import (
    AudioFormatError,
    MalformedHeaderError,
    TruncatedPayloadError,
    UnsupportedEncodingError,
)

_PCM_FORMAT_CODE = 1


def load_audio(path, fmt: str | None = None) -> DigitalAudio:
    """Read an audio file; format inferred from the extension unless given."""
    fmt = fmt or _infer_format(path)
    if fmt == "csv":
        return load_csv(path)
    if fmt == "wav":
        return load_wav(path)
    raise AudioFormatError(f"unsupported audio format {fmt!r}")


def save_audio(audio: DigitalAudio, path, fmt: str | None = None) -> None:
    fmt = fmt or _infer_format(path)
    if fmt == "csv":
        save_csv(audio, path)
    elif fmt == "wav":
        save_wav(audio, path)
    else:
        raise AudioFormatError(f"unsupported audio format {fmt!r}")


def _infer_format(path) -> str:
    return Path(path).suffix.lstrip(".").lower()


def load_csv(path) -> DigitalAudio:
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip()
        parts = header.split(",")
        if len(parts) != 2 or parts[0] != "sample_rate":
            raise MalformedHeaderError(f"expected 'sample_rate,<int>' header, got {header!r}")
        try:
            rate = int(parts[1])
        except ValueError:
            raise MalformedHeaderError(f"bad sample rate {parts[1]!r}") from None
        rows = []
        for lineno, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            try:
                rows.append([float(v) for v in line.split(",")])
            except ValueError:
                raise AudioFormatError(f"bad sample value on line {lineno}") from None
    if not rows:
        raise TruncatedPayloadError("no sample rows after the header")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise AudioFormatError("rows have inconsistent channel counts")
    frames = np.array(rows)  # (n_samples, channels)
    return DigitalAudio(frames.T, rate)


def save_csv(audio: DigitalAudio, path) -> None:
    lines = [f"sample_rate,{audio.sample_rate}"]
    for frame in audio.samples.T:
        lines.append(",".join(repr(float(v)) for v in frame))
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_wav(path) -> DigitalAudio:
    """Decode 16-bit PCM WAV; samples become floats via division by 2**15."""
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < 12 or data[:4] != b"RIFF":
        raise MalformedHeaderError("file does not start with a RIFF header")
    if data[8:12] != b"WAVE":
        raise MalformedHeaderError("RIFF form type is not WAVE")

    fmt = None
    payload = None
    pos = 12
    while pos + 8 <= len(data):
        cid = data[pos : pos + 4]
        (size,) = struct.unpack_from("<I", data, pos + 4)
        body_start = pos + 8
        if cid == b"fmt ":
            if size < 16 or body_start + 16 > len(data):
                raise MalformedHeaderError("fmt chunk too short")
            fmt = struct.unpack_from("<HHIIHH", data, body_start)
        elif cid == b"data":
            if body_start + size > len(data):
                raise TruncatedPayloadError(
                    f"data chunk declares {size} bytes, file has {len(data) - body_start}"
                )
            payload = data[body_start : body_start + size]
        pos = body_start + size + (size & 1)  # chunks are word-aligned

    if fmt is None:
        raise MalformedHeaderError("missing fmt chunk")
    audio_format, channels, rate, _, _, bits = fmt
    if audio_format != _PCM_FORMAT_CODE:
        raise UnsupportedEncodingError(f"format code {audio_format}, only PCM (1) supported")
    if bits != 16:
        raise UnsupportedEncodingError(f"{bits}-bit samples, only 16-bit supported")
    if channels not in (1, 2):
        raise UnsupportedEncodingError(f"{channels} channels, only mono/stereo supported")
    if payload is None:
        raise TruncatedPayloadError("missing data chunk")
    if len(payload) % (2 * channels):
        raise TruncatedPayloadError("data chunk is not a whole number of frames")

    ints = np.frombuffer(payload, dtype="<i2").astype(np.float64)
    frames = ints.reshape(-1, channels)
    return DigitalAudio(frames.T / 32768.0, rate)


def save_wav(audio: DigitalAudio, path) -> None:
    if audio.n_channels not in (1, 2):
        raise AudioFormatError("WAV output supports mono or stereo only")
    scaled = np.clip(np.round(audio.samples.T * 32768.0), -32768, 32767)
    payload = scaled.astype("<i2").tobytes()
    channels = audio.n_channels
    byte_rate = audio.sample_rate * channels * 2
    header = b"RIFF" + struct.pack("<I", 36 + len(payload)) + b"WAVE"
    fmt = b"fmt " + struct.pack(
        "<IHHIIHH", 16, _PCM_FORMAT_CODE, channels, audio.sample_rate, byte_rate, channels * 2, 16
    )
    with open(path, "wb") as fh:
        fh.write(header + fmt + b"data" + struct.pack("<I", len(payload)) + payload)
