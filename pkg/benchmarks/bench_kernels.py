"""Timing comparison of the compiled and pure kernel backends.

Runs the protocol-level hot paths and the underlying kernels under
each backend and prints a table of per-call times with the speedup.
Usage: python3 benchmarks/bench_kernels.py [repeats]
"""

import math
import sys
import time

import wbroadcast as wb
from wbroadcast import reports

R3 = 1.0 / math.sqrt(3.0)
SKEWED = {"alpha": 0.6, "beta": 0.48, "gamma": 0.64, "x": 1.0, "y": 0.5}


def time_call(fn, repeats):
    fn()  # warm up
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def build_cases():
    p = wb.WParams(R3, R3, R3)
    m = wb.CloningMachine(1.0, 0.5)
    s9 = wb.run_protocol(p, m)
    rho9 = wb.density_of(s9)
    uuu = wb.enumerate_outcomes(s9)[0]
    r156 = wb.branch_reduced(uuu, {wb.QubitLabel.Data1, wb.QubitLabel.Data5, wb.QubitLabel.Data6}, weighted=True)
    r6 = wb.partial_trace(rho9, set(wb.DATA_LABEL_ORDER))
    cfg = reports.ProtocolConfig.from_mapping(dict(SKEWED))
    return [
        ("run_protocol (512-dim ket)", lambda: wb.run_protocol(p, m)),
        ("density_of (512x512 outer)", lambda: wb.density_of(s9)),
        ("partial_trace 9->6 qubits", lambda: wb.partial_trace(rho9, set(wb.DATA_LABEL_ORDER))),
        ("enumerate_outcomes (8 branches)", lambda: wb.enumerate_outcomes(s9)),
        ("hermitian_eigenvalues 64x64", lambda: wb.hermitian_eigenvalues(r6.matrix)),
        ("bipartite_cuts (3 PPT spectra)", lambda: wb.bipartite_cuts(r156)),
        ("kron 8x8 by 8x8", lambda: wb.kron(r156.matrix, wb.CMatrix.identity(8))),
        ("matmul 64x64", lambda: wb.matmul(r6.matrix, r6.matrix)),
        ("frobenius_distance 512x512", lambda: wb.frobenius_distance(rho9.matrix, rho9.matrix)),
        ("cmd_verify (full report)", lambda: reports.cmd_verify(cfg)),
    ]


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    names = wb.available_backends()
    if "compiled" not in names:
        print("compiled backend not available; nothing to compare")
        return
    cases = build_cases()
    results = {}
    for backend in ("pure", "compiled"):
        wb.use_backend(backend)
        for label, fn in cases:
            results[(backend, label)] = time_call(fn, repeats)
    wb.use_backend("compiled")
    width = max(len(label) for label, _ in cases)
    print("%-*s %12s %12s %9s" % (width, "kernel path", "pure", "compiled", "speedup"))
    for label, _ in cases:
        tp = results[("pure", label)]
        tc = results[("compiled", label)]
        print(
            "%-*s %10.3f ms %10.3f ms %8.1fx"
            % (width, label, tp * 1e3, tc * 1e3, tp / tc)
        )


if __name__ == "__main__":
    main()
