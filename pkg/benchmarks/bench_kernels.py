"""Timing comparison of the compiled and pure-Python graph kernels.

Runs reachability closure and simple-cycle enumeration over a mixed corpus
with both backends, checks that the outputs are identical, and reports the
best-of-N wall time per backend.  Exits cleanly when the compiled extension
is unavailable (pure-Python timings are still printed).

Usage: python3 benchmarks/bench_kernels.py [--repeat 5] [--random 400]
"""

import argparse
from time import perf_counter

from groupoid_spectrum._kernels import _graphcore_py
from groupoid_spectrum.corpus import enumerate_validated_simple, random_corpus

try:
    from groupoid_spectrum._kernels import _graphcore
except ImportError:
    _graphcore = None


def build_workload(random_count: int) -> list[tuple[int, list[tuple[int, int]]]]:
    graphs = list(enumerate_validated_simple(4, 7))
    graphs += list(random_corpus(random_count, seed=5, max_vertices=12))
    return [(len(g.vertices), list(g.arc_indices)) for g in graphs]


def run_backend(impl, workload) -> tuple[float, float, list]:
    t0 = perf_counter()
    masks = [impl.reach_masks(n, arcs) for n, arcs in workload]
    t_reach = perf_counter() - t0
    t0 = perf_counter()
    cycles = [impl.simple_cycles(n, arcs) for n, arcs in workload]
    t_cycles = perf_counter() - t0
    return t_reach, t_cycles, [masks, cycles]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    parser.add_argument("--random", type=int, default=400, help="random graphs to add")
    args = parser.parse_args()

    workload = build_workload(args.random)
    edges = sum(len(arcs) for _, arcs in workload)
    print(f"workload: {len(workload)} graphs, {edges} edges total")

    results = {}
    outputs = {}
    backends = [("python", _graphcore_py)] + ([("cython", _graphcore)] if _graphcore else [])
    for name, impl in backends:
        best = (float("inf"), float("inf"))
        for _ in range(args.repeat):
            t_reach, t_cycles, out = run_backend(impl, workload)
            best = (min(best[0], t_reach), min(best[1], t_cycles))
            outputs[name] = out
        results[name] = best
        print(f"{name:>7}: reach {best[0] * 1e3:8.1f} ms   cycles {best[1] * 1e3:8.1f} ms")

    if _graphcore is None:
        print("compiled backend not built; skipping comparison")
        return 0

    assert outputs["python"] == outputs["cython"], "backend outputs differ"
    for idx, label in ((0, "reach"), (1, "cycles")):
        ratio = results["python"][idx] / results["cython"][idx]
        print(f"{label}: cython is {ratio:.1f}x the pure-Python speed")
    print("outputs identical across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
