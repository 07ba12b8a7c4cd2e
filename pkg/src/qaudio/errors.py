"""Exception types shared across the package."""


class QAudioError(Exception):
    """Base class for all qaudio errors."""


class AudioFormatError(QAudioError):
    """An audio file could not be read or written."""


class MalformedHeaderError(AudioFormatError):
    """File header is not a valid RIFF/WAVE or CSV header."""


class UnsupportedEncodingError(AudioFormatError):
    """File uses an encoding outside the supported subset (16-bit PCM)."""


class TruncatedPayloadError(AudioFormatError):
    """File ends before the declared payload is complete."""


class DegenerateSignalError(QAudioError):
    """Signal rejected by an encoder, e.g. the all minus-one input whose
    shifted sum is zero and cannot be normalized."""


class QubitBudgetError(QAudioError):
    """Circuit needs more qubits than the simulator budget allows."""
