"""Register-aware circuit container shared by the encoders and the simulator.

Qubit 0 is the least significant index bit. Histogram keys and basis labels
print the highest-numbered qubit leftmost, so a state |a>|t| with the
amplitude register above the time register reads amplitude bits left of
time bits, matching the usual ket notation.

Negative control polarity stands for the X-conjugated control trick (flip,
control on |1>, flip back); it is stored directly on the control instead of
materializing the X gates. ``lower_negative_controls`` re-materializes them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

POSITIVE = 1
NEGATIVE = 0

GATE_KINDS = ("h", "x", "ry")


def bitstring(value: int, width: int) -> str:
    """MSB-first binary string of ``value``; empty for width 0."""
    return format(value, f"0{width}b") if width else ""


@dataclass(frozen=True)
class GateOp:
    """One gate: H, X, or Ry(angle), with optional polarized controls.

    ``controls`` holds (qubit, polarity) pairs; polarity 1 triggers on |1>,
    polarity 0 on |0>.
    """

    kind: str
    target: int
    controls: tuple[tuple[int, int], ...] = ()
    angle: float | None = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if (self.kind == "ry") != (self.angle is not None):
            raise ValueError("angle is required for ry and forbidden otherwise")
        ctrls = tuple((int(q), int(p)) for q, p in self.controls)
        object.__setattr__(self, "controls", ctrls)
        if self.target < 0 or any(q < 0 for q, _ in ctrls):
            raise ValueError("qubit indices must be nonnegative")
        qubits = [q for q, _ in ctrls]
        if len(set(qubits)) != len(qubits):
            raise ValueError("control qubits must be distinct")
        if self.target in qubits:
            raise ValueError(f"target {self.target} also appears as a control")
        if any(p not in (POSITIVE, NEGATIVE) for _, p in ctrls):
            raise ValueError("control polarity must be 0 or 1")

    @property
    def max_qubit(self) -> int:
        return max([self.target] + [q for q, _ in self.controls])


@dataclass(frozen=True)
class QubitRange:
    """Half-open qubit index range [start, stop)."""

    start: int
    stop: int

    def __post_init__(self):
        if self.start < 0 or self.stop < self.start:
            raise ValueError(f"bad qubit range [{self.start}, {self.stop})")

    @property
    def size(self) -> int:
        return self.stop - self.start

    def __iter__(self):
        return iter(range(self.start, self.stop))


@dataclass(frozen=True)
class RegisterLayout:
    """Named qubit ranges: time, then optional amplitude, then optional channel.

    Ranges are contiguous and in that order, time starting at qubit 0.
    """

    time: QubitRange
    amplitude: QubitRange | None = None
    channel: QubitRange | None = None

    def __post_init__(self):
        if self.time.start != 0:
            raise ValueError("time register must start at qubit 0")
        expected = self.time.stop
        if self.amplitude is not None:
            if self.amplitude.start != expected:
                raise ValueError("amplitude register must follow the time register")
            expected = self.amplitude.stop
        if self.channel is not None:
            if self.channel.start != expected:
                raise ValueError("channel register must follow the previous register")

    @property
    def n_qubits(self) -> int:
        last = self.channel or self.amplitude or self.time
        return last.stop

    def register(self, name: str) -> QubitRange | None:
        return getattr(self, name)

    def extract(self, key: str, name: str) -> int:
        """Integer value of a register inside a full histogram key."""
        reg = self.register(name)
        if reg is None or reg.size == 0:
            return 0
        n = self.n_qubits
        if len(key) != n:
            raise ValueError(f"key {key!r} does not cover {n} qubits")
        return int(key[n - reg.stop : n - reg.start], 2)

    @classmethod
    def build(cls, n_time: int, n_amplitude: int = 0, n_channel: int = 0) -> "RegisterLayout":
        amp = QubitRange(n_time, n_time + n_amplitude) if n_amplitude else None
        ch_start = n_time + n_amplitude
        ch = QubitRange(ch_start, ch_start + n_channel) if n_channel else None
        return cls(QubitRange(0, n_time), amp, ch)


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over a register layout, plus decode-time metadata.

    Metadata carries the classical side channel: N always, and q / C / g /
    integer_bits / sample_rate where the scheme needs them.
    """

    layout: RegisterLayout
    ops: tuple[GateOp, ...]
    scheme: str
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        n = self.layout.n_qubits
        for op in self.ops:
            if op.max_qubit >= n:
                raise ValueError(f"op {op} references a qubit outside the {n}-qubit layout")

    @property
    def n_qubits(self) -> int:
        return self.layout.n_qubits

    def with_metadata(self, **extra) -> "Circuit":
        return replace(self, metadata={**self.metadata, **extra})

    def gate_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for op in self.ops:
            counts[op.kind] = counts.get(op.kind, 0) + 1
        return counts


def hadamard_wall(layout: RegisterLayout) -> list[GateOp]:
    """One H per time qubit, and per channel qubit when present."""
    ops = [GateOp("h", q) for q in layout.time]
    if layout.channel is not None:
        ops += [GateOp("h", q) for q in layout.channel]
    return ops


def _index_controls(
    layout: RegisterLayout, time_index: int, channel_index: int | None
) -> tuple[tuple[int, int], ...]:
    # Polarity is negative exactly on qubits whose bit of the index is 0,
    # absorbing the X-sandwich into the control condition.
    n = layout.time.size
    if not 0 <= time_index < (1 << n):
        raise ValueError(f"time index {time_index} out of range for {n} qubits")
    controls = [(layout.time.start + b, (time_index >> b) & 1) for b in range(n)]
    if channel_index is not None:
        if layout.channel is None:
            if channel_index != 0:
                raise ValueError("layout has no channel register")
        else:
            c = layout.channel.size
            if not 0 <= channel_index < (1 << c):
                raise ValueError(f"channel index {channel_index} out of range")
            controls += [(layout.channel.start + b, (channel_index >> b) & 1) for b in range(c)]
    return tuple(controls)


def value_setting_ry(
    layout: RegisterLayout,
    time_index: int,
    angle: float,
    channel_index: int | None = None,
) -> GateOp:
    """Multi-controlled Ry(angle) on the amplitude qubit, selecting one index."""
    if layout.amplitude is None or layout.amplitude.size != 1:
        raise ValueError("value-setting Ry needs a 1-qubit amplitude register")
    return GateOp(
        "ry",
        layout.amplitude.start,
        _index_controls(layout, time_index, channel_index),
        float(angle),
    )


def value_setting_x(
    layout: RegisterLayout,
    time_index: int,
    amp_bit: int,
    channel_index: int | None = None,
) -> GateOp:
    """Multi-controlled X on amplitude qubit ``amp_bit``, selecting one index."""
    if layout.amplitude is None or not 0 <= amp_bit < layout.amplitude.size:
        raise ValueError(f"amplitude bit {amp_bit} outside the amplitude register")
    return GateOp(
        "x",
        layout.amplitude.start + amp_bit,
        _index_controls(layout, time_index, channel_index),
    )


def lower_negative_controls(ops) -> list[GateOp]:
    """Re-materialize X sandwiches: every negative control becomes X, positive
    control, X. The result contains only positive-polarity controls."""
    lowered: list[GateOp] = []
    for op in ops:
        flips = [q for q, p in op.controls if p == NEGATIVE]
        lowered += [GateOp("x", q) for q in flips]
        lowered.append(
            GateOp(op.kind, op.target, tuple((q, POSITIVE) for q, _ in op.controls), op.angle)
        )
        lowered += [GateOp("x", q) for q in flips]
    return lowered


# ---------------------------------------------------------------------------
# JSON wire format


def circuit_to_json(circuit: Circuit, indent: int | None = None) -> str:
    layout: dict = {"time": [circuit.layout.time.start, circuit.layout.time.stop]}
    for name in ("amplitude", "channel"):
        reg = circuit.layout.register(name)
        if reg is not None:
            layout[name] = [reg.start, reg.stop]
    ops = []
    for op in circuit.ops:
        entry: dict = {"kind": op.kind, "target": op.target, "controls": [list(c) for c in op.controls]}
        if op.angle is not None:
            entry["angle"] = op.angle
        ops.append(entry)
    doc = {
        "scheme": circuit.scheme,
        "n_qubits": circuit.n_qubits,
        "layout": layout,
        "metadata": circuit.metadata,
        "ops": ops,
    }
    return json.dumps(doc, indent=indent, sort_keys=True)


def circuit_from_json(text: str) -> Circuit:
    doc = json.loads(text)
    try:
        layout = RegisterLayout(
            QubitRange(*doc["layout"]["time"]),
            QubitRange(*doc["layout"]["amplitude"]) if "amplitude" in doc["layout"] else None,
            QubitRange(*doc["layout"]["channel"]) if "channel" in doc["layout"] else None,
        )
        ops = tuple(
            GateOp(
                entry["kind"],
                entry["target"],
                tuple((q, p) for q, p in entry["controls"]),
                entry.get("angle"),
            )
            for entry in doc["ops"]
        )
        circuit = Circuit(layout, ops, doc["scheme"], dict(doc["metadata"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"invalid circuit JSON: {exc}") from None
    if circuit.n_qubits != doc["n_qubits"]:
        raise ValueError("n_qubits does not match the layout")
    return circuit
