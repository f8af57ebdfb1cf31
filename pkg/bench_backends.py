#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-python fallback.

Each workload runs in a fresh subprocess so backend selection (the
CUBIC2F_NO_NUMBA env var, read at import time) and JIT warm-up are
isolated.  Reported numba times exclude compilation (one warm-up pass).

Usage: python3 bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "classify_heawood": """
from cubic2f.constructions import named
from cubic2f.matchings import classify
g = named("Heawood")
def run():
    return classify(g, mode="exhaustive", prune=False).two_factor_count
""",
    "classify_pappus": """
from cubic2f.constructions import named
from cubic2f.matchings import classify
g = named("Pappus")
def run():
    return classify(g, mode="exhaustive", prune=False).two_factor_count
""",
    "generate_n18": """
from cubic2f.generate import generate
def run():
    return generate(18)
""",
    "cyclic_edge_conn_gray": """
from cubic2f.connectivity import cyclic_edge_connectivity
from cubic2f.constructions import named
g = named("Gray")
def run():
    return cyclic_edge_connectivity(g)
""",
    "heuristic_matchings_n30": """
from cubic2f.generate import random_cubic_bipartite
from cubic2f.matchings import heuristic_matching
gs = [random_cubic_bipartite(30, seed=s) for s in range(10)]
def run():
    return sum(len(heuristic_matching(g, seed=0)) for g in gs)
""",
}

DRIVER = """
import json, sys, time
from cubic2f.backend import backend_name
{setup}
run()  # warm-up / JIT compile
times = []
for _ in range({repeat}):
    t0 = time.perf_counter()
    result = run()
    times.append(time.perf_counter() - t0)
print(json.dumps({{"backend": backend_name(), "best": min(times), "result": repr(result)}}))
"""


def run_one(setup, repeat, use_numba):
    env = dict(os.environ)
    env["CUBIC2F_NO_NUMBA"] = "" if use_numba else "1"
    code = DRIVER.format(setup=setup, repeat=repeat)
    p = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    if p.returncode != 0:
        raise RuntimeError(p.stderr)
    return json.loads(p.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"{'workload':<28}{'numba':>10}{'python':>10}{'speedup':>9}")
    for name, setup in WORKLOADS.items():
        fast = run_one(setup, args.repeat, use_numba=True)
        slow = run_one(setup, args.repeat, use_numba=False)
        assert fast["result"] == slow["result"], f"{name}: backends disagree"
        ratio = slow["best"] / fast["best"] if fast["best"] > 0 else float("inf")
        print(f"{name:<28}{fast['best']:>9.3f}s{slow['best']:>9.3f}s{ratio:>8.1f}x")


if __name__ == "__main__":
    main()
