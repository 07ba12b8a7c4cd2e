# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled gate kernel.

Applies a 2x2 matrix to one target qubit over every basis-state pair whose
control bits match (cmask, cval). Only the selected subspace is visited:
the free (non-target, non-control) bits are enumerated as submasks, so a
fully controlled value-setting gate touches exactly two amplitudes.
"""


def apply_gate_kernel(double complex[::1] amps, int n_qubits,
                      double complex m00, double complex m01,
                      double complex m10, double complex m11,
                      int target, unsigned long long cmask,
                      unsigned long long cval):
    cdef unsigned long long tbit = 1ULL << target
    cdef unsigned long long dim = 1ULL << n_qubits
    cdef unsigned long long free_mask = (dim - 1) & ~(cmask | tbit)
    cdef unsigned long long sub = 0
    cdef unsigned long long i0, i1
    cdef double complex a0, a1
    while True:
        i0 = cval | sub
        i1 = i0 | tbit
        a0 = amps[i0]
        a1 = amps[i1]
        amps[i0] = m00 * a0 + m01 * a1
        amps[i1] = m10 * a0 + m11 * a1
        if sub == free_mask:
            break
        sub = (sub - free_mask) & free_mask  # next submask of free_mask
