#!/usr/bin/env python3
"""Compare the compiled treasury kernel against the numpy fallback.

Times the hot path (one full-ensemble evolution per rate) and a complete
equilibrium solve under each backend, and verifies the two backends agree
bit-for-bit on the way.

Run:  python benchmarks/bench_kernels.py [--n 2500] [--rates 200]
"""

import argparse
import os
import time

import numpy as np


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=2500)
    parser.add_argument("--rates", type=int, default=200)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    from crediteq import build_ensemble, load_preset
    from crediteq._kernels import np_backend

    try:
        from crediteq._kernels import _evolve
    except ImportError:
        _evolve = None

    cfg = load_preset("case-a")
    ens = build_ensemble(cfg.plan, args.n, cfg.horizon, cfg.sim.seed)
    from crediteq.treasury import term_debt_series

    d_l, c = term_debt_series(cfg.debt.loans, cfg.horizon)
    grid = np.linspace(0.001, 0.999, args.rates)

    backends = [("numpy", np_backend)]
    if _evolve is not None:
        backends.append(("cython", _evolve))
    else:
        print("compiled kernel not available; timing the fallback only")

    def sweep(mod):
        out = []
        for r in grid:
            out.append(
                mod.evolve_batch(
                    ens.f_matrix, c, d_l, cfg.debt.d_s0, float(r), cfg.plan.t_ss,
                    cfg.horizon, 0, cfg.alpha, cfg.policy.lgd,
                )
            )
        return out

    results = {}
    for name, mod in backends:
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            out = sweep(mod)
            best = min(best, time.perf_counter() - t0)
        results[name] = (best, out)
        per_call = best / args.rates * 1e3
        print(f"{name:7s} sweep of {args.rates} rates x {args.n} paths: "
              f"{best:.3f}s  ({per_call:.2f} ms/rate)")

    if len(results) == 2:
        a, b = results["numpy"][1], results["cython"][1]
        agree = all(
            np.array_equal(x[0], y[0])
            and np.array_equal(x[1], y[1])
            and np.array_equal(x[2], y[2])
            for x, y in zip(a, b)
        )
        speedup = results["numpy"][0] / results["cython"][0]
        print(f"backends bit-identical: {agree}; speedup: {speedup:.1f}x")

    # end-to-end solve timing per backend (fresh process would be cleaner;
    # forcing the fallback via env var only works before import, so spawn)
    import subprocess
    import sys

    for env_val, label in (("0", "cython"), ("1", "numpy")):
        if env_val == "0" and _evolve is None:
            continue
        env = dict(os.environ, CREDITEQ_FORCE_NUMPY=env_val)
        code = (
            "import time; from crediteq import load_preset, solve_scenario;"
            "cfg=load_preset('case-a'); t0=time.perf_counter();"
            "r=solve_scenario(cfg);"
            "print(f'full solve: {time.perf_counter()-t0:.2f}s  "
            "r_min={r.r_min:.6f}')"
        )
        proc = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        print(f"{label:7s} {proc.stdout.strip() or proc.stderr.strip()}")


if __name__ == "__main__":
    main()
