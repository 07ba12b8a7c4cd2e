"""OpenQASM 3 export, and a parser for the emitted subset.

Gates are written over one flat register ``q`` with ``ctrl @`` / ``negctrl @``
modifiers; modifier order matches operand order, target last. Angles use the
shortest round-trip float repr, so parse(export(c)) reproduces the gate list
exactly. Pass ``lower=True`` to re-materialize negative controls as X
sandwiches instead of negctrl modifiers.
"""

from __future__ import annotations

import re

from .circuit import Circuit, GateOp, lower_negative_controls

_HEADER = 'OPENQASM 3.0;\ninclude "stdgates.inc";\n'

_GATE_RE = re.compile(
    r"^\s*((?:(?:ctrl|negctrl)\s*@\s*)*)(h|x|ry)\s*(?:\(([^)]*)\))?\s*([^;]+);\s*$"
)
_MOD_RE = re.compile(r"(ctrl|negctrl)")
_QUBIT_RE = re.compile(r"^q\[(\d+)\]$")
_DECL_RE = re.compile(r"^\s*qubit\[(\d+)\]\s+q;\s*$")


def format_gate(op: GateOp) -> str:
    mods = "".join("ctrl @ " if p else "negctrl @ " for _, p in op.controls)
    name = op.kind if op.angle is None else f"ry({op.angle!r})"
    operands = [f"q[{q}]" for q, _ in op.controls] + [f"q[{op.target}]"]
    return f"{mods}{name} {', '.join(operands)};"


def export_qasm(circuit: Circuit, lower: bool = False) -> str:
    ops = lower_negative_controls(circuit.ops) if lower else circuit.ops
    lines = [_HEADER + f"qubit[{circuit.n_qubits}] q;"]
    lines += [format_gate(op) for op in ops]
    return "\n".join(lines) + "\n"


def parse_qasm(text: str) -> tuple[int, tuple[GateOp, ...]]:
    """Parse text produced by :func:`export_qasm`; returns (n_qubits, ops)."""
    n_qubits = None
    ops: list[GateOp] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//")[0].strip()
        if not line or line.startswith(("OPENQASM", "include")):
            continue
        decl = _DECL_RE.match(line)
        if decl:
            n_qubits = int(decl.group(1))
            continue
        m = _GATE_RE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
        mods, kind, angle_txt, operand_txt = m.groups()
        polarities = [mod == "ctrl" for mod in _MOD_RE.findall(mods)]
        operands = []
        for tok in operand_txt.split(","):
            qm = _QUBIT_RE.match(tok.strip())
            if not qm:
                raise ValueError(f"line {lineno}: bad operand {tok.strip()!r}")
            operands.append(int(qm.group(1)))
        if len(operands) != len(polarities) + 1:
            raise ValueError(f"line {lineno}: {len(polarities)} modifiers for {len(operands)} operands")
        controls = tuple((q, int(p)) for q, p in zip(operands, polarities))
        angle = float(angle_txt) if angle_txt is not None else None
        ops.append(GateOp(kind, operands[-1], controls, angle))
    if n_qubits is None:
        raise ValueError("missing qubit declaration")
    return n_qubits, tuple(ops)
