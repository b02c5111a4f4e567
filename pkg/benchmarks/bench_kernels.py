#!/usr/bin/env python3
"""Benchmark the compiled composition kernel against the pure-Python one.

Two views:

* kernel level: time glue_labels on every ordered pair of degree-4 diagrams,
  importing both implementations side by side;
* end to end:  time the generator closure at degree 5 in subprocesses, one
  with the default backend and one with BLOCKPERM_PURE=1.

Usage: python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import os
import subprocess
import sys
import time

from blockperm import _glue_py
from blockperm.monoid import enumerate_ubp, to_labels

try:
    from blockperm import _glue as _glue_cy
except ImportError:
    _glue_cy = None


def kernel_benchmark(repeats: int) -> None:
    pairs = [to_labels(f) for f in enumerate_ubp(4)]
    work = [
        (ft, fb, gt, gb) for (ft, fb) in pairs for (gt, gb) in pairs
    ]
    print(f"kernel workload: {len(work)} glue calls per repeat, {repeats} repeats")

    def run(glue):
        start = time.perf_counter()
        for _ in range(repeats):
            for ft, fb, gt, gb in work:
                glue(ft, fb, gt, gb)
        return time.perf_counter() - start

    py_time = run(_glue_py.glue_labels)
    total = repeats * len(work)
    print(f"  pure python: {py_time:.3f}s  ({total / py_time:,.0f} glues/s)")
    if _glue_cy is None:
        print("  compiled kernel not built; skipping")
        return
    cy_time = run(_glue_cy.glue_labels)
    print(f"  cython:      {cy_time:.3f}s  ({total / cy_time:,.0f} glues/s)")
    print(f"  speedup:     {py_time / cy_time:.1f}x")


CLOSURE_SNIPPET = (
    "import time; from blockperm import kernel_backend; "
    "from blockperm.monoid import closure_from_generators; "
    "t=time.perf_counter(); n=len(closure_from_generators(5)); "
    "print(f'{kernel_backend()}: closure at degree 5 "
    "({n} elements) in {time.perf_counter()-t:.3f}s')"
)


def end_to_end_benchmark() -> None:
    print("end to end (subprocesses):")
    for env_extra in ({}, {"BLOCKPERM_PURE": "1"}):
        env = dict(os.environ, **env_extra)
        out = subprocess.run(
            [sys.executable, "-c", CLOSURE_SNIPPET],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        print("  " + out.stdout.strip())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    kernel_benchmark(args.repeats)
    end_to_end_benchmark()


if __name__ == "__main__":
    main()
