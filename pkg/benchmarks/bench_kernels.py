"""Compare the compiled and pure-Python kernel backends.

Times the raw kernels on random Gaussian-integer data, then a whole
oracle computation and a full formula cross-check through the public API.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--size 8]
"""
from __future__ import annotations

import argparse
import random
import timeit

from drazinkit import kernels
from drazinkit.block import block_bdc
from drazinkit.core import drazin_oracle
from drazinkit.generate import generate_batch
from drazinkit.matrix import Matrix


def _flat(rng, n, bound, complex_):
    re = [rng.randint(-bound, bound) for _ in range(n)]
    im = [rng.randint(-bound, bound) for _ in range(n)] if complex_ else None
    return re, im


def workloads(size: int):
    rng = random.Random(2024)
    ar, ai = _flat(rng, size * size, 9, True)
    br, bi = _flat(rng, size * size, 9, True)
    rr, _ = _flat(rng, size * size, 9, False)
    singular = Matrix.from_rows([[rng.randint(-3, 3) for _ in range(size)] for _ in range(size - 2)]
                                + [[0] * size, [0] * size])
    singular = singular @ Matrix.from_rows([[rng.randint(-1, 1) for _ in range(size)] for _ in range(size)])
    batch = generate_batch("bdc", 5, 20)
    return {
        "matmul complex": lambda: kernels.matmul(ar, ai, br, bi, size, size, size),
        "matmul real": lambda: kernels.matmul(rr, None, rr, None, size, size, size),
        "gauss_jordan complex": lambda: kernels.gauss_jordan(list(ar), list(ai), size, size),
        "gauss_jordan real": lambda: kernels.gauss_jordan(list(rr), None, size, size),
        "drazin_oracle": lambda: drazin_oracle(singular),
        "bdc formula x20": lambda: [block_bdc(inst.blocks) for inst in batch],
    }


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--size", type=int, default=8)
    args = parser.parse_args(argv)

    backends = sorted(kernels.BACKENDS)
    if "compiled" not in backends:
        print("compiled backend not built; only timing the pure-Python kernels")
    jobs = workloads(args.size)
    print(f"{'workload':<24}" + "".join(f"{b:>14}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, job in jobs.items():
        times = {}
        for b in backends:
            kernels.use_backend(b)
            number = max(1, int(0.2 / max(timeit.timeit(job, number=1), 1e-6)))
            times[b] = min(timeit.repeat(job, number=number, repeat=args.repeat)) / number
        line = f"{name:<24}" + "".join(f"{times[b] * 1e3:>11.3f} ms" for b in backends)
        if len(backends) == 2:
            line += f"{times['python'] / times['compiled']:>11.2f}x"
        print(line)
    kernels.use_backend("compiled" if "compiled" in backends else "python")


if __name__ == "__main__":
    main()
