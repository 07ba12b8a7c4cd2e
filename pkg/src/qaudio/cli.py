"""Batch CLI wiring the pipeline end to end.

Subcommands: encode, simulate, decode, roundtrip, report, export-qasm.
Identical invocations (including --seed) produce byte-identical outputs.

Exit codes: 0 success, 2 input error, 3 degenerate signal, 4 qubit budget
exceeded, 1 anything else. Failures print one machine-readable line to
stderr of the form ``error: <kind>: <message>``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import analysis, codecs, formats, schemes
from .audio import FIXED_POINT, DigitalAudio, dequantize, quantize, zero_pad_pow2
from .circuit import circuit_from_json, circuit_to_json
from .errors import AudioFormatError, DegenerateSignalError, QubitBudgetError
from .qasm import export_qasm
from .sim import exact_probabilities, run_circuit, sample

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_BUDGET = 4

DEFAULT_DEPTH = 8
DEFAULT_SEED = 0


@dataclass(frozen=True)
class RunConfig:
    """Resolved options of one pipeline run."""

    scheme: str
    depth: int
    shots: int | None
    seed: int
    exact: bool
    input_path: str
    output_path: str
    channels: int | None = None
    integer_bits: int | None = None

    def __post_init__(self):
        if not self.exact and self.shots is not None and self.shots < 1:
            raise ValueError("shots must be >= 1 unless running exact")


def _write_text(path, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def _read_text(path) -> str:
    return Path(path).read_text(encoding="ascii")


def _default_shots(n_qubits: int) -> int:
    # 4^n measurements of an n-qubit state is the usual good-approximation
    # rule of thumb for histogram retrieval.
    return 4**n_qubits


def _measure(circuit, exact: bool, shots: int | None, seed: int):
    state = run_circuit(circuit)
    if exact:
        return exact_probabilities(state), None
    if shots is None:
        shots = _default_shots(circuit.n_qubits)
    return sample(state, shots, seed, circuit.layout).counts, shots


def cmd_encode(args) -> int:
    signal = formats.load_audio(args.input)
    circuit = codecs.encode(signal, args.scheme, args.depth, args.integer_bits, args.channels)
    _write_text(args.output, circuit_to_json(circuit, indent=2) + "\n")
    return EXIT_OK


def cmd_simulate(args) -> int:
    circuit = circuit_from_json(_read_text(args.circuit))
    weights, _ = _measure(circuit, args.exact, args.shots, args.seed)
    _write_text(args.output, analysis.histogram_to_csv(weights))
    return EXIT_OK


def cmd_decode(args) -> int:
    circuit = circuit_from_json(_read_text(args.circuit))
    weights = analysis.histogram_from_csv(_read_text(args.histogram))
    result = codecs.decode(weights, circuit)
    formats.save_audio(result.audio, args.output)
    return EXIT_OK


def _reference_signal(signal: DigitalAudio, scheme: str, depth: int,
                      integer_bits: int | None, channels: int | None) -> DigitalAudio:
    """What a perfect round trip would return: the padded input, snapped to
    the quantizer grid for state-modulation schemes."""
    scheme = schemes.normalize_scheme(scheme)
    padded = zero_pad_pow2(signal)
    data = padded.samples
    if schemes.is_multichannel(scheme):
        data = codecs.pad_channels(data, channels)
    reference = DigitalAudio(data, padded.sample_rate)
    kind = schemes.quant_kind(scheme)
    if kind is None:
        return reference
    if kind == FIXED_POINT and integer_bits is None:
        integer_bits = 0
    return dequantize(quantize(reference, depth, kind, integer_bits))


def cmd_roundtrip(args) -> int:
    config = RunConfig(
        args.scheme, args.depth, args.shots, args.seed, args.exact,
        args.input, args.output, args.channels, args.integer_bits,
    )
    signal = formats.load_audio(config.input_path)
    circuit = codecs.encode(
        signal, config.scheme, config.depth, config.integer_bits, config.channels
    )
    weights, shots = _measure(circuit, config.exact, config.shots, config.seed)
    result = codecs.decode(weights, circuit)
    formats.save_audio(result.audio, config.output_path)
    reference = _reference_signal(
        signal, config.scheme, config.depth, config.integer_bits, config.channels
    )
    report = analysis.compare(
        reference, result.audio,
        scheme=schemes.normalize_scheme(config.scheme),
        shots=shots, unobserved=result.unobserved,
    )
    print(report.text())
    return EXIT_OK


def cmd_report(args) -> int:
    rows = analysis.scheme_comparison_table(args.samples, args.depth, args.channels or 1)
    if args.format == "csv":
        sys.stdout.write(analysis.comparison_csv(rows))
    else:
        print(analysis.comparison_text(rows))
    return EXIT_OK


def cmd_export_qasm(args) -> int:
    circuit = circuit_from_json(_read_text(args.circuit))
    _write_text(args.output, export_qasm(circuit, lower=args.lower))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qaudio",
        description="Encode, simulate and retrieve quantum audio representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scheme_opts(p):
        p.add_argument("--scheme", required=True, help="|".join(schemes.SCHEMES))
        p.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                       help="bit depth q for state-modulation schemes (default 8)")
        p.add_argument("--channels", type=int, default=None,
                       help="channel register size for mqsm/msqpam")
        p.add_argument("--integer-bits", type=int, default=None,
                       help="integer bits m for fpqsm (default 0)")

    def add_shot_opts(p):
        p.add_argument("--shots", type=int, default=None,
                       help="measurement shots (default 4^n_qubits)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--exact", action="store_true",
                       help="use exact probabilities instead of sampling")

    p = sub.add_parser("encode", help="audio file -> circuit JSON")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    add_scheme_opts(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("simulate", help="circuit JSON -> histogram CSV")
    p.add_argument("--circuit", required=True)
    p.add_argument("--output", required=True)
    add_shot_opts(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("decode", help="histogram CSV + circuit JSON -> audio file")
    p.add_argument("--circuit", required=True)
    p.add_argument("--histogram", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("roundtrip", help="encode, simulate, decode, and report")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    add_scheme_opts(p)
    add_shot_opts(p)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("report", help="scheme comparison table")
    p.add_argument("--samples", type=int, required=True, help="audio length N (power of two)")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--channels", type=int, default=1)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("export-qasm", help="circuit JSON -> OpenQASM 3 text")
    p.add_argument("--circuit", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--lower", action="store_true",
                   help="re-materialize negative controls as X sandwiches")
    p.set_defaults(func=cmd_export_qasm)

    return parser


def _fail(kind: str, exc: BaseException, code: int) -> int:
    print(f"error: {kind}: {exc}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateSignalError as exc:
        return _fail("degenerate-signal", exc, EXIT_DEGENERATE)
    except QubitBudgetError as exc:
        return _fail("qubit-budget", exc, EXIT_BUDGET)
    except (AudioFormatError, FileNotFoundError, ValueError) as exc:
        return _fail("input", exc, EXIT_INPUT)
    except OSError as exc:
        return _fail("io", exc, EXIT_OTHER)


if __name__ == "__main__":
    sys.exit(main())
