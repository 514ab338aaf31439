#!/usr/bin/env python3
"""Benchmark the compiled drive kernel against the NumPy fallback.

The workload mirrors the hot path of a phase diagram: momentum-space
determinants det(U(k) -/+ I) on a dense k-grid for a grid of drive
amplitudes.  Run after `python setup.py build_ext --inplace` (or an
editable install); without the extension only the fallback is timed.
"""

import time

import numpy as np

from floqssh import _kernels_py

try:
    from floqssh import _kernels
except ImportError:
    _kernels = None

W, GAMMA, Q, T1, T2 = 1.0, 1.5, 2.0, 0.7, 0.7
KS = np.linspace(0.0, 2 * np.pi, 4096, endpoint=False)
FS = np.linspace(0.05, 1.2, 120)


def workload(impl):
    acc = 0.0
    for f in FS:
        for zeta in (1.0, -1.0):
            dets = impl.drive_det_shift(KS, W, GAMMA, f, Q * f, T1, T2, zeta)
            acc += float(np.abs(dets).min())
    return acc


def time_backend(name, impl, repeats=3):
    workload(impl)  # warm up
    best = min(
        (lambda t0: (workload(impl), time.perf_counter() - t0)[1])(time.perf_counter())
        for _ in range(repeats)
    )
    evals = len(KS) * len(FS) * 2
    print(f"{name:>8}: {best:8.3f} s  ({evals / best / 1e6:6.2f} M k-points/s)")
    return best


def main():
    print(f"workload: {len(FS)} drive points x {len(KS)} momenta x 2 shifts")
    t_py = time_backend("numpy", _kernels_py)
    if _kernels is None:
        print("compiled: not built (python setup.py build_ext --inplace)")
        return
    t_cy = time_backend("cython", _kernels)
    ref = workload(_kernels_py)
    got = workload(_kernels)
    print(f"speedup : {t_py / t_cy:.2f}x   (results agree to {abs(ref - got):.2e})")


if __name__ == "__main__":
    main()
