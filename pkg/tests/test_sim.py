"""Simulator gate semantics, sampling, and unitarity properties."""

import math

import numpy as np
import pytest

from qaudio.circuit import Circuit, GateOp, RegisterLayout, bitstring
from qaudio.errors import QubitBudgetError
from qaudio.sim import (
    MeasurementHistogram,
    StateVector,
    apply_gate,
    exact_probabilities,
    run_circuit,
    sample,
)

SQ2 = 1.0 / math.sqrt(2.0)


def random_state(rng, n):
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return StateVector(amps / np.linalg.norm(amps))


def random_op(rng, n):
    kind = rng.choice(["h", "x", "ry"])
    target = int(rng.integers(0, n))
    others = [q for q in range(n) if q != target]
    rng.shuffle(others)
    k = int(rng.integers(0, min(3, len(others)) + 1))
    controls = tuple((q, int(rng.integers(0, 2))) for q in others[:k])
    angle = float(rng.uniform(0, 2 * np.pi)) if kind == "ry" else None
    return GateOp(kind, target, controls, angle)


class TestGateAction:
    def test_hadamard_on_zero(self):
        out = apply_gate(StateVector.zero(1), GateOp("h", 0))
        np.testing.assert_allclose(out.amplitudes, [SQ2, SQ2])

    def test_ry_double_angle_convention(self):
        # Ry(2 theta)|0> = cos(theta)|0> + sin(theta)|1>
        theta = 0.3
        out = apply_gate(StateVector.zero(1), GateOp("ry", 0, angle=2 * theta))
        np.testing.assert_allclose(out.amplitudes, [math.cos(theta), math.sin(theta)])

    def test_x_is_involution(self):
        rng = np.random.default_rng(1)
        state = random_state(rng, 3)
        twice = apply_gate(apply_gate(state, GateOp("x", 1)), GateOp("x", 1))
        np.testing.assert_allclose(twice.amplitudes, state.amplitudes, atol=1e-15)

    def test_double_controlled_ry_hits_only_index_two(self):
        # on the uniform 2-qubit time state with the target |0>, controls
        # (t1 positive, t0 negative) rotate only the |10> branch
        theta = 0.4
        layout = RegisterLayout.build(2, 1)
        prep = [GateOp("h", 0), GateOp("h", 1)]
        op = GateOp("ry", 2, ((0, 0), (1, 1)), 2 * theta)
        state = run_circuit(Circuit(layout, tuple(prep + [op]), "sqpam", {"N": 4}))
        expected = np.zeros(8, dtype=complex)
        expected[[0, 1, 3]] = 0.5
        expected[2] = 0.5 * math.cos(theta)
        expected[2 + 4] = 0.5 * math.sin(theta)
        np.testing.assert_allclose(state.amplitudes, expected, atol=1e-15)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            apply_gate(StateVector.zero(2), GateOp("x", 5))


class TestRunCircuit:
    def test_empty_circuit(self):
        state = run_circuit(Circuit(RegisterLayout.build(3), (), "qpam", {"N": 8}))
        expected = np.zeros(8)
        expected[0] = 1.0
        np.testing.assert_array_equal(state.amplitudes, expected)

    def test_hadamard_wall_uniform(self):
        ops = tuple(GateOp("h", q) for q in range(3))
        state = run_circuit(Circuit(RegisterLayout.build(3), ops, "qpam", {"N": 8}))
        np.testing.assert_allclose(state.amplitudes, np.full(8, 1 / math.sqrt(8)))

    def test_budget_enforced(self):
        circuit = Circuit(RegisterLayout.build(5), (), "qpam", {"N": 32})
        with pytest.raises(QubitBudgetError):
            run_circuit(circuit, budget=4)

    def test_budget_env_override(self, monkeypatch):
        monkeypatch.setenv("QAUDIO_MAX_QUBITS", "3")
        circuit = Circuit(RegisterLayout.build(4), (), "qpam", {"N": 16})
        with pytest.raises(QubitBudgetError):
            run_circuit(circuit)

    def test_zero_qubit_circuit(self):
        layout = RegisterLayout.build(0)
        state = run_circuit(Circuit(layout, (), "qpam", {"N": 1}))
        np.testing.assert_array_equal(state.amplitudes, [1.0])


class TestSampling:
    def test_deterministic_state(self):
        hist = sample(StateVector.zero(3), 100, seed=5)
        assert hist.counts == {"000": 100}

    def test_uniform_converges(self):
        ops = tuple(GateOp("h", q) for q in range(3))
        state = run_circuit(Circuit(RegisterLayout.build(3), ops, "qpam", {"N": 8}))
        hist = sample(state, 10**6, seed=11)
        for key in (bitstring(i, 3) for i in range(8)):
            assert abs(hist.counts[key] / 10**6 - 0.125) < 0.005

    def test_seed_reproducibility(self):
        rng = np.random.default_rng(3)
        state = random_state(rng, 4)
        a = sample(state, 4096, seed=42)
        b = sample(state, 4096, seed=42)
        assert a.counts == b.counts

    def test_zero_shots_rejected(self):
        with pytest.raises(ValueError):
            sample(StateVector.zero(1), 0)

    def test_histogram_invariants(self):
        with pytest.raises(ValueError):
            MeasurementHistogram({"00": 3}, 4)


class TestExactProbabilities:
    def test_equal_superposition(self):
        probs = exact_probabilities(StateVector.from_amplitudes([SQ2, SQ2]))
        np.testing.assert_allclose([probs["0"], probs["1"]], [0.5, 0.5])

    def test_sine_cosine_pair(self):
        theta = 0.7
        state = apply_gate(StateVector.zero(1), GateOp("ry", 0, angle=2 * theta))
        probs = exact_probabilities(state)
        np.testing.assert_allclose(probs["0"], math.cos(theta) ** 2)
        np.testing.assert_allclose(probs["1"], math.sin(theta) ** 2)

    def test_zero_entries_omitted(self):
        probs = exact_probabilities(StateVector.zero(3))
        assert probs == {"000": 1.0}


class TestUnitarity:
    def test_norm_preserved_random_gates(self):
        rng = np.random.default_rng(9)
        n = 6
        amps = random_state(rng, n).amplitudes.copy()
        state = StateVector(amps)
        for _ in range(200):
            state = apply_gate(state, random_op(rng, n))
        assert abs(state.norm - 1.0) < 1e-12

    def test_gate_inverses(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            state = random_state(rng, 4)
            q = int(rng.integers(0, 4))
            theta = float(rng.uniform(0, 2 * np.pi))
            for pair in (
                (GateOp("h", q), GateOp("h", q)),
                (GateOp("x", q), GateOp("x", q)),
                (GateOp("ry", q, angle=theta), GateOp("ry", q, angle=-theta)),
            ):
                out = apply_gate(apply_gate(state, pair[0]), pair[1])
                np.testing.assert_allclose(out.amplitudes, state.amplitudes, atol=1e-12)

    def test_negative_control_equals_x_conjugation(self):
        # exhaustive over 3 qubits: all target/control pairs, all basis states
        for target in range(3):
            for control in range(3):
                if control == target:
                    continue
                for basis in range(8):
                    amps = np.zeros(8, dtype=complex)
                    amps[basis] = 1.0
                    neg = apply_gate(StateVector(amps.copy()), GateOp("ry", target, ((control, 0),), 0.9))
                    conj = StateVector(amps.copy())
                    conj = apply_gate(conj, GateOp("x", control))
                    conj = apply_gate(conj, GateOp("ry", target, ((control, 1),), 0.9))
                    conj = apply_gate(conj, GateOp("x", control))
                    np.testing.assert_allclose(neg.amplitudes, conj.amplitudes, atol=1e-15)

    def test_multicontrol_identity_off_pattern(self):
        # a fully controlled gate must leave every non-matching basis state alone
        for n in (2, 3, 4):
            target = 0
            controls = tuple((q, q % 2) for q in range(1, n))
            op = GateOp("ry", target, controls, 1.1)
            pattern = {q: p for q, p in controls}
            for basis in range(1 << n):
                amps = np.zeros(1 << n, dtype=complex)
                amps[basis] = 1.0
                out = apply_gate(StateVector(amps), op)
                matches = all((basis >> q) & 1 == p for q, p in pattern.items())
                if not matches:
                    expected = np.zeros(1 << n, dtype=complex)
                    expected[basis] = 1.0
                    np.testing.assert_array_equal(out.amplitudes, expected)
