"""Scheme registry and resource accounting.

Space and preparation cost per scheme (n = ceil(log2 N) time qubits,
q = bit depth, C = channels):

    qpam     n qubits                O(N) basic instructions      Probabilistic
    sqpam    n + 1                   O(N^2)                       Probabilistic
    qsm      n + q                   O(q N log N)                 Deterministic
    uqsm     n + q                   O(q N log N)                 Deterministic
    fpqsm    n + q                   O(q N log N)                 Deterministic
    mqsm     n + q + ceil(log2 C)    O(C q N log N)               Deterministic
    msqpam   n + 1 + ceil(log2 C)    O(C N^2)                     Probabilistic

Value-setting operations are counted as one multi-controlled gate per
addressed index: N - 1 rotations for qpam's preparation tree, N for sqpam,
and N per channel for the state-modulation family.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import audio

SCHEMES = ("qpam", "sqpam", "qsm", "uqsm", "fpqsm", "mqsm", "msqpam")

_QUANT_KIND = {
    "qsm": audio.TWOS_COMPLEMENT,
    "mqsm": audio.TWOS_COMPLEMENT,
    "uqsm": audio.UNSIGNED,
    "fpqsm": audio.FIXED_POINT,
}

_MULTICHANNEL = ("mqsm", "msqpam")
_COEFFICIENT_BASED = ("qpam", "sqpam", "msqpam")


def normalize_scheme(name: str) -> str:
    """Canonical lower-case scheme name; raises on anything unknown."""
    canon = str(name).strip().lower()
    if canon not in SCHEMES:
        raise ValueError(f"unknown scheme {name!r}; expected one of {', '.join(SCHEMES)}")
    return canon


def quant_kind(scheme: str) -> str | None:
    """Number scheme used by the quantizer, or None for angle/amplitude codecs."""
    return _QUANT_KIND.get(normalize_scheme(scheme))


def is_multichannel(scheme: str) -> bool:
    return normalize_scheme(scheme) in _MULTICHANNEL


def uses_depth(scheme: str) -> bool:
    return normalize_scheme(scheme) in _QUANT_KIND


def retrieval_class(scheme: str) -> str:
    return "Probabilistic" if normalize_scheme(scheme) in _COEFFICIENT_BASED else "Deterministic"


def _log2_exact(value: int, what: str) -> int:
    n = int(value).bit_length() - 1
    if value < 1 or (1 << n) != value:
        raise ValueError(f"{what} must be a power of two, got {value}")
    return n


@dataclass(frozen=True)
class ResourceReport:
    scheme: str
    n_samples: int
    depth: int | None
    channels: int
    qubits: int
    value_setting_ops: int
    basic_instructions: int
    complexity_class: str
    retrieval: str


def resource_report(
    scheme: str, n_samples: int, depth: int | None = None, channels: int = 1
) -> ResourceReport:
    """Space and preparation-cost figures for one scheme at given sizes."""
    scheme = normalize_scheme(scheme)
    n = _log2_exact(n_samples, "n_samples")
    c = _log2_exact(channels, "channels") if channels > 1 else 0
    if channels > 1 and not is_multichannel(scheme):
        raise ValueError(f"{scheme} is single-channel")
    q = depth
    if uses_depth(scheme):
        if q is None:
            raise ValueError(f"{scheme} needs a bit depth")
    else:
        q = None

    N, C = n_samples, channels
    if scheme == "qpam":
        qubits = n
        vs_ops = N - 1
        basic = N
        klass = "O(N)"
    elif scheme == "sqpam":
        qubits = n + 1
        vs_ops = N
        basic = N * N
        klass = "O(N^2)"
    elif scheme in ("qsm", "uqsm", "fpqsm"):
        qubits = n + q
        vs_ops = N
        basic = q * N * n
        klass = "O(q N log N)"
    elif scheme == "mqsm":
        qubits = n + q + c
        vs_ops = N * C
        basic = C * q * N * n
        klass = "O(C q N log N)"
    else:  # msqpam
        qubits = n + 1 + c
        vs_ops = N * C
        basic = C * N * N
        klass = "O(C N^2)"

    return ResourceReport(
        scheme, N, q, C, qubits, vs_ops, basic, klass, retrieval_class(scheme)
    )
