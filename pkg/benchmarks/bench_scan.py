"""Compare the compiled and pure-Python finite-field scan kernels.

    python benchmarks/bench_scan.py [--primes 31 101] [--repeat 3]
"""

import argparse
import time

from hexagrammum import kernels
from hexagrammum.labelling import REPRESENTATIVES
from hexagrammum.solver import _reduce_mod, representative_system


def time_backend(backend, systems, prime, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for polys in systems:
            kernels.common_zeros(polys, prime, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--primes", type=int, nargs="+", default=[31, 101])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default {kernels.BACKEND})")
    for prime in args.primes:
        systems = [
            [_reduce_mod(m, prime) for m in representative_system(case).minors] for case in REPRESENTATIVES
        ]
        times = {b: time_backend(b, systems, prime, args.repeat) for b in backends}
        row = "  ".join(f"{b}={t:.3f}s" for b, t in times.items())
        if "compiled" in times:
            row += f"  speedup={times['python'] / times['compiled']:.1f}x"
        print(f"prime {prime:4d}, 9 systems: {row}")


if __name__ == "__main__":
    main()
