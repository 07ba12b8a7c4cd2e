"""CLI pipeline: composition, determinism, exit codes."""

import numpy as np
import pytest

from conftest import WORKED_SAMPLES
from qaudio import DigitalAudio, codecs, dequantize, quantize
from qaudio.cli import EXIT_BUDGET, EXIT_DEGENERATE, EXIT_INPUT, EXIT_OK, main
from qaudio.formats import load_audio, save_csv
from qaudio.sim import run_circuit, sample


@pytest.fixture
def worked_csv(tmp_path):
    path = tmp_path / "in.csv"
    save_csv(DigitalAudio(WORKED_SAMPLES, 44100), path)
    return path


def test_roundtrip_qsm_exact_is_bit_exact_on_grid(worked_csv, tmp_path, capsys):
    out = tmp_path / "out.csv"
    code = main([
        "roundtrip", "--input", str(worked_csv), "--scheme", "qsm",
        "--depth", "3", "--exact", "--output", str(out),
    ])
    assert code == EXIT_OK
    assert "max_abs_error: 0.0" in capsys.readouterr().out
    decoded = load_audio(out)
    grid = dequantize(quantize(DigitalAudio(WORKED_SAMPLES, 44100), 3))
    np.testing.assert_array_equal(decoded.samples, grid.samples)


def test_roundtrip_qpam_exact(worked_csv, tmp_path, capsys):
    out = tmp_path / "out.csv"
    code = main([
        "roundtrip", "--input", str(worked_csv), "--scheme", "qpam",
        "--exact", "--output", str(out),
    ])
    assert code == EXIT_OK
    assert "scheme: qpam" in capsys.readouterr().out
    decoded = load_audio(out)
    assert np.max(np.abs(decoded.mono - WORKED_SAMPLES)) <= 1e-9


def test_pipeline_matches_library_composition(worked_csv, tmp_path):
    circ_path = tmp_path / "c.json"
    hist_path = tmp_path / "h.csv"
    out_path = tmp_path / "out.csv"
    assert main(["encode", "--input", str(worked_csv), "--scheme", "sqpam",
                 "--output", str(circ_path)]) == EXIT_OK
    assert main(["simulate", "--circuit", str(circ_path), "--shots", "4096",
                 "--seed", "7", "--output", str(hist_path)]) == EXIT_OK
    assert main(["decode", "--circuit", str(circ_path), "--histogram", str(hist_path),
                 "--output", str(out_path)]) == EXIT_OK

    signal = DigitalAudio(WORKED_SAMPLES, 44100)
    circuit = codecs.encode(signal, "sqpam")
    hist = sample(run_circuit(circuit), 4096, seed=7, layout=circuit.layout)
    expected = codecs.decode(hist, circuit)
    np.testing.assert_array_equal(load_audio(out_path).samples, expected.audio.samples)


def test_identical_invocations_are_byte_identical(worked_csv, tmp_path):
    files = []
    for tag in ("a", "b"):
        circ = tmp_path / f"c_{tag}.json"
        hist = tmp_path / f"h_{tag}.csv"
        out = tmp_path / f"o_{tag}.csv"
        main(["encode", "--input", str(worked_csv), "--scheme", "qsm",
              "--depth", "3", "--output", str(circ)])
        main(["simulate", "--circuit", str(circ), "--shots", "2048",
              "--seed", "1", "--output", str(hist)])
        main(["decode", "--circuit", str(circ), "--histogram", str(hist),
              "--output", str(out)])
        files.append((circ.read_bytes(), hist.read_bytes(), out.read_bytes()))
    assert files[0] == files[1]


def test_default_shot_count_is_four_to_the_n(worked_csv, tmp_path):
    circ = tmp_path / "c.json"
    hist = tmp_path / "h.csv"
    main(["encode", "--input", str(worked_csv), "--scheme", "qpam", "--output", str(circ)])
    main(["simulate", "--circuit", str(circ), "--seed", "0", "--output", str(hist)])
    from qaudio.analysis import histogram_from_csv

    counts = histogram_from_csv(hist.read_text())
    assert sum(counts.values()) == 4**3


def test_degenerate_signal_exit_code(tmp_path, capsys):
    path = tmp_path / "flat.csv"
    save_csv(DigitalAudio([-1.0, -1.0, -1.0, -1.0], 8000), path)
    code = main(["roundtrip", "--input", str(path), "--scheme", "qpam",
                 "--exact", "--output", str(tmp_path / "o.csv")])
    assert code == EXIT_DEGENERATE
    assert capsys.readouterr().err.startswith("error: degenerate-signal:")


def test_budget_exit_code(worked_csv, tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QAUDIO_MAX_QUBITS", "2")
    code = main(["roundtrip", "--input", str(worked_csv), "--scheme", "qpam",
                 "--exact", "--output", str(tmp_path / "o.csv")])
    assert code == EXIT_BUDGET
    assert "qubit-budget" in capsys.readouterr().err


def test_input_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("not,a,header\n")
    code = main(["encode", "--input", str(bad), "--scheme", "qpam",
                 "--output", str(tmp_path / "c.json")])
    assert code == EXIT_INPUT
    assert capsys.readouterr().err.startswith("error: input:")


def test_missing_file_exit_code(tmp_path):
    assert main(["encode", "--input", str(tmp_path / "nope.csv"), "--scheme", "qpam",
                 "--output", str(tmp_path / "c.json")]) == EXIT_INPUT


def test_report_reproduces_qubit_counts(capsys):
    assert main(["report", "--samples", "64", "--depth", "16"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    table = {line.split()[0]: line.split()[1] for line in lines[1:]}
    assert table["qpam"] == "6"
    assert table["sqpam"] == "7"
    assert table["qsm"] == "22"


def test_report_csv_format(capsys):
    assert main(["report", "--samples", "8", "--depth", "3", "--format", "csv"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "scheme,qubits,value_setting_ops,basic_instructions,complexity,retrieval"


def test_export_qasm_round_trip(worked_csv, tmp_path):
    circ = tmp_path / "c.json"
    qasm = tmp_path / "c.qasm"
    main(["encode", "--input", str(worked_csv), "--scheme", "sqpam", "--output", str(circ)])
    assert main(["export-qasm", "--circuit", str(circ), "--output", str(qasm)]) == EXIT_OK
    from qaudio.circuit import circuit_from_json
    from qaudio.qasm import parse_qasm

    circuit = circuit_from_json(circ.read_text())
    n, ops = parse_qasm(qasm.read_text())
    assert n == circuit.n_qubits
    assert ops == circuit.ops


def test_wav_roundtrip_through_cli(tmp_path, capsys):
    from qaudio.formats import save_wav

    wav_in = tmp_path / "in.wav"
    wav_out = tmp_path / "out.wav"
    save_wav(DigitalAudio(WORKED_SAMPLES, 44100), wav_in)
    code = main(["roundtrip", "--input", str(wav_in), "--scheme", "qsm",
                 "--depth", "8", "--exact", "--output", str(wav_out)])
    assert code == EXIT_OK
    assert load_audio(wav_out).n_samples == 8
