"""Circuit container, value-setting construction, JSON wire format, resources."""

import json

import numpy as np
import pytest

from qaudio.circuit import (
    Circuit,
    GateOp,
    QubitRange,
    RegisterLayout,
    circuit_from_json,
    circuit_to_json,
    hadamard_wall,
    lower_negative_controls,
    value_setting_ry,
    value_setting_x,
)
from qaudio.schemes import resource_report
from qaudio.sim import run_circuit


class TestGateOp:
    def test_target_cannot_be_control(self):
        with pytest.raises(ValueError):
            GateOp("x", 1, ((1, 1),))

    def test_duplicate_controls_rejected(self):
        with pytest.raises(ValueError):
            GateOp("x", 0, ((1, 1), (1, 0)))

    def test_angle_only_for_ry(self):
        with pytest.raises(ValueError):
            GateOp("h", 0, angle=1.0)
        with pytest.raises(ValueError):
            GateOp("ry", 0)


class TestValueSetting:
    def test_index_one_positive_control(self):
        # N=2: selecting index 1 needs a plain positive control on t0
        layout = RegisterLayout.build(1, 1)
        op = value_setting_ry(layout, 1, 0.5)
        assert op.controls == ((0, 1),)

    def test_index_zero_negative_control(self):
        # the X sandwich is absorbed as a negative polarity
        layout = RegisterLayout.build(1, 1)
        op = value_setting_ry(layout, 0, 0.5)
        assert op.controls == ((0, 0),)

    def test_index_two_mixed_controls(self):
        # N=4, index 2 = |10>: t1 positive, t0 negative
        layout = RegisterLayout.build(2, 1)
        op = value_setting_ry(layout, 2, 0.5)
        assert dict(op.controls) == {0: 0, 1: 1}

    def test_channel_controls_added(self):
        layout = RegisterLayout.build(2, 3, 1)
        op = value_setting_x(layout, 1, amp_bit=2, channel_index=1)
        assert op.target == 4  # amplitude register starts at qubit 2
        assert dict(op.controls) == {0: 1, 1: 0, 5: 1}

    def test_index_out_of_range(self):
        layout = RegisterLayout.build(2, 1)
        with pytest.raises(ValueError):
            value_setting_ry(layout, 4, 0.5)


class TestHadamardWall:
    def test_three_time_qubits(self):
        ops = hadamard_wall(RegisterLayout.build(3))
        assert [op.target for op in ops] == [0, 1, 2]
        assert all(op.kind == "h" for op in ops)

    def test_single_sample_has_no_wall(self):
        assert hadamard_wall(RegisterLayout.build(0, 1)) == []

    def test_channel_register_included(self):
        ops = hadamard_wall(RegisterLayout.build(3, 3, 1))
        assert [op.target for op in ops] == [0, 1, 2, 6]


class TestLayout:
    def test_registers_must_be_contiguous(self):
        with pytest.raises(ValueError):
            RegisterLayout(QubitRange(0, 2), QubitRange(3, 4))

    def test_extract_slices_key(self):
        layout = RegisterLayout.build(3, 2, 1)
        # key prints channel, amplitude, time left to right
        key = "1" + "10" + "011"
        assert layout.extract(key, "time") == 3
        assert layout.extract(key, "amplitude") == 2
        assert layout.extract(key, "channel") == 1

    def test_extract_missing_register_is_zero(self):
        layout = RegisterLayout.build(2)
        assert layout.extract("01", "channel") == 0


class TestJson:
    def _sample_circuit(self):
        layout = RegisterLayout.build(2, 1)
        ops = hadamard_wall(layout) + [value_setting_ry(layout, i, 0.1 * (i + 1)) for i in range(4)]
        return Circuit(layout, tuple(ops), "sqpam", {"N": 4, "sample_rate": 8000})

    def test_round_trip_identity(self):
        circuit = self._sample_circuit()
        again = circuit_from_json(circuit_to_json(circuit))
        assert again.ops == circuit.ops
        assert again.layout == circuit.layout
        assert again.scheme == circuit.scheme
        assert again.metadata == circuit.metadata

    def test_wire_shape(self):
        doc = json.loads(circuit_to_json(self._sample_circuit()))
        assert set(doc) == {"scheme", "n_qubits", "layout", "metadata", "ops"}
        assert doc["layout"]["time"] == [0, 2]
        assert doc["layout"]["amplitude"] == [2, 3]
        assert "channel" not in doc["layout"]
        ry = doc["ops"][-1]
        assert set(ry) == {"kind", "target", "controls", "angle"}
        assert ry["controls"] == [[0, 1], [1, 1]]

    def test_angles_round_trip_exactly(self):
        circuit = self._sample_circuit()
        again = circuit_from_json(circuit_to_json(circuit))
        assert [op.angle for op in again.ops] == [op.angle for op in circuit.ops]

    def test_bad_json_rejected(self):
        with pytest.raises(ValueError):
            circuit_from_json('{"scheme": "qpam"}')


class TestLowering:
    def test_only_positive_controls_remain(self):
        layout = RegisterLayout.build(2, 1)
        ops = [value_setting_ry(layout, 0, 0.7)]
        lowered = lower_negative_controls(ops)
        assert all(p == 1 for op in lowered for _, p in op.controls)
        assert [op.kind for op in lowered] == ["x", "x", "ry", "x", "x"]

    def test_lowered_circuit_is_equivalent(self):
        layout = RegisterLayout.build(2, 1)
        ops = hadamard_wall(layout) + [value_setting_ry(layout, i, 0.3 + i) for i in range(4)]
        direct = Circuit(layout, tuple(ops), "sqpam", {"N": 4})
        lowered = Circuit(layout, tuple(lower_negative_controls(ops)), "sqpam", {"N": 4})
        np.testing.assert_allclose(
            run_circuit(direct).amplitudes, run_circuit(lowered).amplitudes, atol=1e-12
        )


class TestResources:
    def test_block_of_64_samples(self):
        # 64-sample block at 16-bit depth: 6 / 7 / 22 qubits
        assert resource_report("qpam", 64).qubits == 6
        assert resource_report("sqpam", 64).qubits == 7
        assert resource_report("qsm", 64, depth=16).qubits == 22

    def test_65536_samples(self):
        assert resource_report("qpam", 65536).qubits == 16
        assert resource_report("sqpam", 65536).qubits == 17
        assert resource_report("qsm", 65536, depth=16).qubits == 32

    def test_instruction_estimates(self):
        assert resource_report("qpam", 64).basic_instructions == 64
        assert resource_report("sqpam", 64).basic_instructions == 4096
        assert resource_report("qsm", 64, depth=16).basic_instructions == 6144
        assert resource_report("sqpam", 65536).basic_instructions == 4294967296
        assert resource_report("qsm", 65536, depth=16).basic_instructions == 16777216

    def test_multichannel_space(self):
        assert resource_report("mqsm", 64, depth=16, channels=4).qubits == 6 + 16 + 2
        assert resource_report("msqpam", 64, channels=2).qubits == 6 + 1 + 1

    def test_value_setting_counts(self):
        assert resource_report("qpam", 8).value_setting_ops == 7
        assert resource_report("sqpam", 8).value_setting_ops == 8
        assert resource_report("mqsm", 8, depth=3, channels=2).value_setting_ops == 16

    def test_retrieval_classes(self):
        assert resource_report("qpam", 8).retrieval == "Probabilistic"
        assert resource_report("qsm", 8, depth=3).retrieval == "Deterministic"

    def test_non_power_of_two_rejected(self):
        with pytest.raises(ValueError):
            resource_report("qpam", 48)
