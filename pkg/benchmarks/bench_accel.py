"""Compare the numba-compiled kernels against the pure-numpy fallback.

Runs the two hot paths (GF(2) echelon / rank and the randomized distance
probe) in subprocesses, once with the default compiled kernels and once with
``COPYCUP_NO_NUMBA=1``, and prints a timing table.  The randomized probe uses
different RNG streams on the two paths, so distances are compared as upper
bounds, not trial-by-trial.

Usage: python benchmarks/bench_accel.py [--trials N]
"""

import argparse
import json
import os
import subprocess
import sys
import textwrap

WORKLOAD = textwrap.dedent(
    """
    import json, time
    import numpy as np
    from copycup import _accel
    from copycup.complexes import build_product_code, distance_upper_randomized
    from copycup.gf2 import BitMatrix, rank
    from copycup.groups import FiniteGroup, GroupAlgebraElement

    trials = {trials}
    out = {{"numba": _accel.USING_NUMBA}}

    rng = np.random.default_rng(0)
    mats = [BitMatrix.from_dense(rng.integers(0, 2, size=(512, 1024), dtype=np.uint8))
            for _ in range(8)]
    rank(BitMatrix.from_dense(rng.integers(0, 2, size=(8, 8), dtype=np.uint8)))  # JIT warmup
    t0 = time.perf_counter()
    ranks = [rank(m) for m in mats]
    out["echelon_s"] = time.perf_counter() - t0
    out["ranks"] = ranks

    g = FiniteGroup(orders=[9, 8])
    x, y = g.from_exponents([1, 0]), g.from_exponents([0, 1])
    p1 = GroupAlgebraElement(g, (0, g.from_exponents([4, 0]), g.from_exponents([8, 0])))
    p2 = GroupAlgebraElement(g, (0, g.from_exponents([1, 4]), g.from_exponents([2, 0])))
    code = build_product_code([p1, p2])
    t0 = time.perf_counter()
    out["d_upper"] = distance_upper_randomized(code, trials, seed=0)
    out["rand_upper_s"] = time.perf_counter() - t0
    print(json.dumps(out))
    """
)


def run(no_numba: bool, trials: int) -> dict:
    env = dict(os.environ)
    env.pop("COPYCUP_NO_NUMBA", None)
    if no_numba:
        env["COPYCUP_NO_NUMBA"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", WORKLOAD.format(trials=trials)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=2000)
    args = parser.parse_args()

    compiled = run(no_numba=False, trials=args.trials)
    fallback = run(no_numba=True, trials=args.trials)

    assert compiled["numba"] and not fallback["numba"], "env flag not honored"
    assert compiled["ranks"] == fallback["ranks"], "rank results differ between paths"

    print(f"{'kernel':<28}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    for key, label in [
        ("echelon_s", "echelon/rank (8x 512x1024)"),
        ("rand_upper_s", f"rand distance ({args.trials} trials)"),
    ]:
        a, b = compiled[key], fallback[key]
        print(f"{label:<28}{a:>11.3f}s{b:>11.3f}s{b / a:>9.1f}x")
    print(
        f"distance upper bounds: numba={compiled['d_upper']} "
        f"numpy={fallback['d_upper']} (streams differ; both are valid bounds)"
    )


if __name__ == "__main__":
    main()
