"""Compare the compiled rank kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Times ``boundary_rank`` on the boundary maps of a few cyclic polytopes and
the full Hochster computation, once per backend.
"""

from __future__ import annotations

import argparse
import contextlib
import time

from simplexbounds import kernels
from simplexbounds.oracle import cyclic_polytope_boundary, hochster_betti, polygon


@contextlib.contextmanager
def backend(name: str):
    saved = kernels._compiled
    if name == "python":
        kernels._compiled = None
    try:
        yield
    finally:
        kernels._compiled = saved


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def boundary_workload(c, p):
    layers = c.faces_by_size

    def run():
        for k in range(1, len(layers)):
            kernels.boundary_rank(layers[k], layers[k - 1], p)

    return run


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    names = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    if len(names) == 1:
        print("compiled extension not available; timing the Python backend only")

    cases = [
        ("boundary ranks C(12,6), char 0", boundary_workload(cyclic_polytope_boundary(12, 6), 0)),
        ("boundary ranks C(12,6), char 2", boundary_workload(cyclic_polytope_boundary(12, 6), 2)),
        ("hochster C(10,5), char 0", lambda: hochster_betti(cyclic_polytope_boundary(10, 5))),
        ("hochster C(12,4), char 0", lambda: hochster_betti(cyclic_polytope_boundary(12, 4))),
        ("hochster 12-gon, char 2", lambda: hochster_betti(polygon(12), 2)),
    ]

    print(f"{'workload':36s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn in cases:
        timings = []
        for name in names:
            with backend(name):
                timings.append(best_of(fn, args.repeat))
        row = f"{label:36s}" + "".join(f"{t:11.3f}s" for t in timings)
        if len(timings) == 2:
            row += f"{timings[0] / timings[1]:11.1f}x"
        print(row)

    # sanity: both backends agree on the workload they were timed on
    c = cyclic_polytope_boundary(10, 5)
    with backend("python"):
        reference = hochster_betti(c)
    assert hochster_betti(c) == reference


if __name__ == "__main__":
    main()
