"""Time the Cython kernels against the pure-Python fallback.

The backend is fixed at import, so every measurement runs in a fresh
interpreter (which also keeps the engine caches cold).

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

SETUP = r"""
import json, random, time
from lcperturb import kernels
from lcperturb.lab import PerturbationSpec, corpus, estimate_N, run_experiment
from lcperturb.mora import std_basis
from lcperturb.poly import Ring

def random_poly(R, rng, lo, hi, terms):
    f = R.zero()
    for _ in range(terms):
        e = [0] * R.nvars
        for _ in range(rng.randint(lo, hi)):
            e[rng.randrange(R.nvars)] += 1
        f = f + R.monomial(e, rng.randrange(1, R.p))
    return f

def standard_bases():
    R = Ring("xyz")
    rng = random.Random(1)
    for _ in range(10):
        std_basis([random_poly(R, rng, 2, 6, 8) for _ in range(3)], R.S)

def battery():
    for e in corpus():
        if e.battery:
            N = estimate_N(e.gens, e.ring)
            run_experiment(PerturbationSpec(e.gens, N=N, trials=20, seed=42))

t = time.perf_counter()
WORKLOAD()
print(json.dumps({"backend": kernels.BACKEND, "seconds": time.perf_counter() - t}))
"""

WORKLOADS = ("standard_bases", "battery")


def measure(workload, pure):
    env = dict(os.environ)
    env.pop("LCPERTURB_PURE", None)
    if pure:
        env["LCPERTURB_PURE"] = "1"
    code = SETUP.replace("WORKLOAD", workload)
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser(description="Compare kernel backends.")
    ap.add_argument("--repeat", type=int, default=3, help="best of this many runs")
    args = ap.parse_args(argv)
    print(f"{'workload':<16}{'cython':>10}{'python':>10}{'speedup':>10}")
    for w in WORKLOADS:
        fast = [measure(w, False) for _ in range(args.repeat)]
        slow = [measure(w, True) for _ in range(args.repeat)]
        if fast[0]["backend"] != "cython":
            print("note: compiled kernels not built; both columns use the fallback")
        a = min(r["seconds"] for r in fast)
        b = min(r["seconds"] for r in slow)
        print(f"{w:<16}{a:>9.3f}s{b:>9.3f}s{b / a:>9.2f}x")


if __name__ == "__main__":
    main()
