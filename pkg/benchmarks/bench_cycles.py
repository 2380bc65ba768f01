"""Compare the compiled and pure-Python cycle-counting kernels.

Usage: python benchmarks/bench_cycles.py [--repeat N]
"""
import argparse
import time

from tss.cycles import KERNELS, CycleBudget, count_simple_cycles
from tss.expr import evaluate, parse
from tss.graph import build_tss

CASES = [
    ("berkeley (x) berkeley", 1_000_001),
    ("gr4 (x) px", 1_000_001),
    ("berkeley (x) sapos12", 1_000_001),
    ("grover(3)", 1_000_001),
    ("berkeley ^(x) 3", 1_000_001),
    ("had16", 100_001),
    ("had16", 1_000_001),
    ("px ^(x) 12", 1_000_001),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = sorted(KERNELS)
    print(f"{'expression':<24}{'cap':>10}{'cycles':>10}" + "".join(f"{b + ' [s]':>14}" for b in backends)
          + ("   speedup" if len(backends) == 2 else ""))
    for expr, cap in CASES:
        g = build_tss(evaluate(parse(expr)))
        budget = CycleBudget(cap)
        timings = {}
        counts = set()
        for b in backends:
            t, (count, capped) = best_of(lambda: count_simple_cycles(g, budget, backend=b), args.repeat)
            timings[b] = t
            counts.add((count, capped))
        assert len(counts) == 1, f"kernels disagree on {expr}: {counts}"
        count, capped = counts.pop()
        line = f"{expr:<24}{cap:>10}{str(count) + ('+' if capped else ''):>10}"
        line += "".join(f"{timings[b]:>14.4f}" for b in backends)
        if len(backends) == 2:
            line += f"{timings['python'] / max(timings['cython'], 1e-9):>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
