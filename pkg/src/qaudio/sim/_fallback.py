"""Pure numpy gate kernel, same contract as the compiled one in _core.pyx.

Control bits are consumed by basic integer indexing, so the update touches
only the selected subspace (a view into the state buffer).
"""

import numpy as np


def apply_gate_kernel(amps, n_qubits, m00, m01, m10, m11, target, cmask, cval):
    view = amps.reshape((2,) * n_qubits)
    sel = [slice(None)] * n_qubits
    for q in range(n_qubits):
        if (cmask >> q) & 1:
            sel[n_qubits - 1 - q] = (cval >> q) & 1  # qubit q lives on axis n-1-q
    sub = view[tuple(sel)]
    t_axis = n_qubits - 1 - target
    t_sub = t_axis - sum(1 for ax in range(t_axis) if not isinstance(sel[ax], slice))
    sub = np.moveaxis(sub, t_sub, 0)
    a0 = sub[0].copy()
    sub[0] *= m00
    sub[0] += m01 * sub[1]
    sub[1] *= m11
    sub[1] += m10 * a0
