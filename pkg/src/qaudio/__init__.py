"""qaudio: quantum audio representations on an embedded statevector engine.

Encode digital audio into one of seven representation schemes (qpam, sqpam,
qsm, uqsm, fpqsm, mqsm, msqpam), prepare explicit gate circuits, simulate
them with shot-based measurement, and reconstruct the audio from the
histogram.
"""

from .analysis import ReconstructionReport, compare, scheme_comparison_table
from .audio import (
    DigitalAudio,
    QuantizedAudio,
    bits_to_word,
    dequantize,
    index_to_time,
    quantize,
    word_to_bits,
    zero_pad_pow2,
)
from .circuit import Circuit, GateOp, RegisterLayout, circuit_from_json, circuit_to_json
from .codecs import DecodeResult, decode, encode
from .errors import (
    AudioFormatError,
    DegenerateSignalError,
    QAudioError,
    QubitBudgetError,
)
from .formats import load_audio, save_audio
from .qasm import export_qasm, parse_qasm
from .schemes import SCHEMES, resource_report
from .sim import MeasurementHistogram, StateVector, exact_probabilities, run_circuit, sample

__version__ = "0.1.0"

__all__ = [
    "AudioFormatError",
    "Circuit",
    "DecodeResult",
    "DegenerateSignalError",
    "DigitalAudio",
    "GateOp",
    "MeasurementHistogram",
    "QAudioError",
    "QuantizedAudio",
    "QubitBudgetError",
    "ReconstructionReport",
    "RegisterLayout",
    "SCHEMES",
    "StateVector",
    "bits_to_word",
    "circuit_from_json",
    "circuit_to_json",
    "compare",
    "decode",
    "dequantize",
    "encode",
    "exact_probabilities",
    "export_qasm",
    "index_to_time",
    "load_audio",
    "parse_qasm",
    "quantize",
    "resource_report",
    "run_circuit",
    "sample",
    "save_audio",
    "scheme_comparison_table",
    "word_to_bits",
    "zero_pad_pow2",
]
