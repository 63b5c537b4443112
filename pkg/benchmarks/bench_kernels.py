"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs under both backends; the table reports
the best wall time and the largest difference between the two outputs.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from artifact._kernels import backends
from artifact.ntheory import primitive_root
from artifact.ring import split_prime

P = 99_991  # a prime = 1 mod 3


def _cases():
    pi, _ = split_prime(P, "cubic")
    rho, _ = split_prime(13, "cubic")
    return {
        "gammaincc": lambda k: [k.gammaincc(0.25, x) for x in np.linspace(0.01, 30, 2000)],
        "v_weights": lambda k: k.v_weights(0.25, 316.2, 3000),
        "char_exponents": lambda k: k.char_exponents([13, P], [rho.omega_image, pi.omega_image], 3, 50_000),
        "weight_buckets": lambda k: k.weight_buckets(
            k.char_exponents([P], [pi.omega_image], 3, 50_000), np.linspace(1, 0, 50_001), 3
        ),
        "gauss_periods": lambda k: k.gauss_periods(P, primitive_root(P), 3),
    }


def _best(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    found = backends()
    if "compiled" not in found:
        print("compiled extension not built; only the fallback is available")
    print(f"{'kernel':<16}{'python [s]':>12}{'compiled [s]':>14}{'speedup':>10}{'max |diff|':>12}")
    for name, case in _cases().items():
        t_py, out_py = _best(lambda: case(found["python"]), args.repeat)
        if "compiled" in found:
            t_c, out_c = _best(lambda: case(found["compiled"]), args.repeat)
            diff = float(np.max(np.abs(np.asarray(out_py, dtype=complex) - np.asarray(out_c, dtype=complex))))
            print(f"{name:<16}{t_py:>12.4f}{t_c:>14.5f}{t_py / t_c:>10.1f}{diff:>12.2e}")
        else:
            print(f"{name:<16}{t_py:>12.4f}{'-':>14}{'-':>10}{'-':>12}")


if __name__ == "__main__":
    main()
