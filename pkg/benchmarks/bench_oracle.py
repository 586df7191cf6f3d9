"""Compare the numba and numpy oracle backends.

Runs the same deterministic maximization workload in a subprocess per
backend (the backend is fixed at import time by TOEPLITZ_BOUNDS_BACKEND)
and reports wall time plus agreement of the results.

Usage: python benchmarks/bench_oracle.py [--samples N] [--repeats K]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = """
import json, time
import toeplitz_bounds as tb
from toeplitz_bounds.bounds import ClassKind
from toeplitz_bounds.oracle import OracleConfig, maximize

samples, repeats = {samples}, {repeats}
cases = [
    (ClassKind.STARLIKE, 2.0, 2.0, "t22"),
    (ClassKind.STARLIKE, 2.0, 2.0, "t31"),
    (ClassKind.CONVEX, 1.0, 0.5, "t22"),
    (ClassKind.CONVEX, 4 / 3, 2 / 3, "t31"),
    (ClassKind.STARLIKE, 1.0, -0.9, "t22"),
]
cfg = OracleConfig(samples=samples, seed=7)
# warm-up pass so jit compilation is not billed to the timing loop
for kind, b1, b2, fn in cases:
    maximize(kind, b1, b2, fn, OracleConfig(samples=1000, seed=7))
t0 = time.perf_counter()
sups = []
for _ in range(repeats):
    sups = [maximize(k, b1, b2, fn, cfg).sup_estimate for k, b1, b2, fn in cases]
elapsed = time.perf_counter() - t0
print(json.dumps({{"backend": tb.BACKEND, "seconds": elapsed, "sups": sups}}))
"""


def run_backend(backend: str, samples: int, repeats: int) -> dict:
    env = dict(os.environ, TOEPLITZ_BOUNDS_BACKEND=backend)
    code = WORKLOAD.format(samples=samples, repeats=repeats)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    results = {}
    for backend in ("numpy", "numba"):
        try:
            results[backend] = run_backend(backend, args.samples, args.repeats)
        except subprocess.CalledProcessError as exc:
            print(f"{backend}: failed\n{exc.stderr}", file=sys.stderr)

    for backend, res in results.items():
        per_run = res["seconds"] / args.repeats
        print(f"{backend:>6}: {res['seconds']:.3f}s total, {per_run:.3f}s per sweep")
    if len(results) == 2:
        a, b = results["numpy"], results["numba"]
        speedup = a["seconds"] / b["seconds"]
        print(f"numba speedup: {speedup:.2f}x")
        worst = max(abs(x - y) for x, y in zip(a["sups"], b["sups"]))
        print(f"max |numpy - numba| over suprema: {worst:.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
