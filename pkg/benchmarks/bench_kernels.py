#!/usr/bin/env python3
"""Benchmark the compiled gate kernel against the numpy fallback.

Applies the same random gate sequence to the same initial state with each
backend, checks they agree, and reports throughput. The workload mimics the
encoders: a Hadamard wall plus many heavily controlled value-setting gates,
with a few lightly controlled gates mixed in.

    python benchmarks/bench_kernels.py --qubits 16 --gates 2000
"""

import argparse
import math
import time

import numpy as np

from qaudio.sim import _fallback

try:
    from qaudio.sim import _core
except ImportError:
    _core = None


def build_workload(n_qubits, n_gates, seed):
    rng = np.random.default_rng(seed)
    gates = []
    for q in range(n_qubits):
        gates.append((_h_matrix(), q, 0, 0))
    while len(gates) < n_gates:
        target = int(rng.integers(0, n_qubits))
        others = [q for q in range(n_qubits) if q != target]
        rng.shuffle(others)
        if rng.random() < 0.7:
            k = len(others)  # value-setting style: fully controlled
        else:
            k = int(rng.integers(0, min(3, len(others)) + 1))
        cmask = cval = 0
        for q in others[:k]:
            cmask |= 1 << q
            if rng.random() < 0.5:
                cval |= 1 << q
        theta = rng.uniform(0, 2 * np.pi)
        m = (math.cos(theta), -math.sin(theta), math.sin(theta), math.cos(theta))
        gates.append((m, target, cmask, cval))
    return gates


def _h_matrix():
    s = 1 / math.sqrt(2)
    return (s, s, s, -s)


def run(kernel, gates, n_qubits, repeats):
    best = math.inf
    final = None
    for _ in range(repeats):
        amps = np.zeros(1 << n_qubits, dtype=np.complex128)
        amps[0] = 1.0
        start = time.perf_counter()
        for m, target, cmask, cval in gates:
            kernel(amps, n_qubits, m[0], m[1], m[2], m[3], target, cmask, cval)
        best = min(best, time.perf_counter() - start)
        final = amps
    return best, final


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--qubits", type=int, default=16)
    parser.add_argument("--gates", type=int, default=2000)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    gates = build_workload(args.qubits, args.gates, args.seed)
    backends = [("numpy", _fallback.apply_gate_kernel)]
    if _core is not None:
        backends.append(("cython", _core.apply_gate_kernel))
    else:
        print("compiled kernel not built; benchmarking the fallback only")

    results = {}
    print(f"{args.qubits} qubits, {len(gates)} gates, best of {args.repeats}")
    print(f"{'backend':<8} {'seconds':>10} {'gates/s':>12}")
    for name, kernel in backends:
        seconds, state = run(kernel, gates, args.qubits, args.repeats)
        results[name] = state
        print(f"{name:<8} {seconds:>10.4f} {len(gates) / seconds:>12.0f}")

    if len(results) == 2:
        diff = float(np.max(np.abs(results["numpy"] - results["cython"])))
        print(f"max |numpy - cython| = {diff:.3e}")
        assert diff < 1e-12


if __name__ == "__main__":
    main()
