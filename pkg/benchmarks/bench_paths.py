"""Times the compiled minimal-path kernel against the pure-Python twin.

Run from the repository root after installing the package:

    python benchmarks/bench_paths.py

Both kernels are called directly (bypassing the cache), their outputs
are compared for equality, and best-of-three wall times are reported.
"""

from __future__ import annotations

import time

from circmdd import _paths_py, build_family, build_network

try:
    from circmdd import _paths_c
except ImportError:
    _paths_c = None


def cases():
    yield "C992(33,161,801) [family q=5 lift]", build_network(992, [33, 161, 801])
    yield "C2003(1,59)", build_network(2003, [1, 59])
    yield "C17822(135,1475,16215) [family q=11 lift]", build_family(11).lifted
    yield "C30011(7,4003)", build_network(30011, [7, 4003])


def best_of(fn, reps=3):
    best = float("inf")
    result = None
    for _ in range(reps):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    if _paths_c is None:
        print("compiled kernel not built; timing the pure twin only")
    header = f"{'network':44s} {'pure':>9s} {'compiled':>9s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for label, net in cases():
        t_py, out_py = best_of(lambda: _paths_py.minimal_path_table(net.n, net.steps))
        if _paths_c is None:
            print(f"{label:44s} {t_py:8.3f}s {'-':>9s} {'-':>8s}")
            continue
        t_c, out_c = best_of(lambda: _paths_c.minimal_path_table(net.n, net.steps))
        if out_py != out_c:
            raise SystemExit(f"kernel outputs differ on {label}")
        print(f"{label:44s} {t_py:8.3f}s {t_c:8.3f}s {t_py / t_c:7.1f}x")
    print("outputs identical across kernels")


if __name__ == "__main__":
    main()
