"""Compare the compiled and pure-python row-reduction kernels.

Run: python3 benchmarks/bench_kernel.py
"""

import time

import numpy as np

from bgd import _kernel_py

try:
    from bgd import _kernel_cy
except ImportError:
    _kernel_cy = None

SIZES = [(64, 64), (128, 128), (256, 256), (512, 256), (243, 729)]
P = 3
REPS = 5


def bench(kernel, mat):
    best = float("inf")
    for _ in range(REPS):
        t0 = time.perf_counter()
        kernel.rref_mod(mat.copy(), P)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(20260826)
    print(f"{'shape':>12} {'numpy':>10} {'cython':>10} {'speedup':>8}")
    for shape in SIZES:
        mat = rng.integers(0, P, size=shape).astype(np.int64)
        t_py = bench(_kernel_py, mat)
        if _kernel_cy is None:
            print(f"{str(shape):>12} {t_py * 1e3:9.2f}ms {'n/a':>10} {'':>8}")
            continue
        t_cy = bench(_kernel_cy, mat)
        r_py, p_py = _kernel_py.rref_mod(mat.copy(), P)
        r_cy, p_cy = _kernel_cy.rref_mod(mat.copy(), P)
        assert np.array_equal(r_py, r_cy) and p_py == p_cy, shape
        print(
            f"{str(shape):>12} {t_py * 1e3:9.2f}ms {t_cy * 1e3:9.2f}ms "
            f"{t_py / t_cy:7.1f}x"
        )


if __name__ == "__main__":
    main()
