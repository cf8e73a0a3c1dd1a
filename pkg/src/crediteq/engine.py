"""Scenario driver: ensembles, equilibrium reports, debt capacity, what-ifs.

One entry point per CLI/service verb, all deterministic given the scenario
(config + seed).  Ensembles are cached per (plan, n, horizon, seed) so
repeated solves against the same scenario reuse the simulated paths.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass, replace

from . import __version__ as _version
from . import _kernels
from .config import ScenarioConfig
from .equilibrium import (
    MaxDebtResult,
    classify_slope,
    max_sustainable_debt,
    solve_rmax,
    solve_stable,
    solve_unstable,
)
from .fcf import SIGMA_SEMANTICS, PathEnsemble, build_ensemble
from .pricing import PdCurve, ReturnCurve, curve_table, estimate_pd, rate_from_pd
from .treasury import DebtSchedule


class EnsembleCache:
    """Bounded LRU of path ensembles keyed by (plan, n, horizon, seed)."""

    def __init__(self, maxsize: int = 8) -> None:
        self._store: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.maxsize = maxsize
        self.hits = 0
        self.misses = 0

    def get(self, cfg: ScenarioConfig) -> PathEnsemble:
        key = (cfg.plan, cfg.sim.n, cfg.horizon, cfg.sim.seed)
        with self._lock:
            if key in self._store:
                self._store.move_to_end(key)
                self.hits += 1
                return self._store[key]
        ensemble = build_ensemble(cfg.plan, cfg.sim.n, cfg.horizon, cfg.sim.seed)
        with self._lock:
            self.misses += 1
            self._store[key] = ensemble
            while len(self._store) > self.maxsize:
                self._store.popitem(last=False)
        return ensemble


_default_cache = EnsembleCache()


@dataclass(frozen=True)
class EquilibriumReport:
    r_min: "float | None"
    r_fix: "float | None"
    r_max: float
    pd_at_r_min: "float | None"
    pd_curve: PdCurve
    return_curve: ReturnCurve
    negotiation_range: "tuple[float, float] | None"
    verdict: str                      # "equilibrium" | "no-equilibrium"
    fp_iterations: int
    fp_history: tuple
    slope_at_r_min: "float | None"
    slope_at_r_fix: "float | None"
    config: ScenarioConfig

    def manifest(self) -> dict:
        return run_manifest(self.config)


def run_manifest(cfg: ScenarioConfig) -> dict:
    return {
        "config": cfg.to_dict(),
        "config_sha256": cfg.config_hash(),
        "seed": cfg.sim.seed,
        "n": cfg.sim.n,
        "mode": cfg.sim.default_mode.value,
        "sigma_semantics": SIGMA_SEMANTICS,
        "kernel_backend": _kernels.BACKEND,
        "version": _version,
    }


def tau_evaluator(cfg: ScenarioConfig, ensemble: PathEnsemble, debt: "DebtSchedule | None" = None):
    sched = debt if debt is not None else cfg.debt
    t_ss = cfg.plan.t_ss
    horizon = cfg.horizon

    def tau_fn(r: float) -> float:
        p = estimate_pd(ensemble, sched, r, cfg.sim.default_mode, t_ss, horizon)
        return rate_from_pd(p, cfg.policy)

    return tau_fn


def solve_scenario(
    cfg: ScenarioConfig, cache: "EnsembleCache | None" = None
) -> EquilibriumReport:
    """Full equilibrium solve: fixed points, curves, return maximiser."""
    cache = cache or _default_cache
    ensemble = cache.get(cfg)
    tau_fn = tau_evaluator(cfg, ensemble)
    settings = cfg.solver
    r_min, trace = solve_stable(tau_fn, cfg.policy.r_f, settings)
    r_fix = None
    if r_min is not None:
        r_fix = solve_unstable(tau_fn, r_min + settings.unstable_margin, settings)
    pd_c, ret_c = curve_table(
        ensemble, cfg.debt, cfg.policy, cfg.alpha, settings.curve_grid(),
        cfg.sim.default_mode, cfg.plan.t_ss, cfg.horizon,
    )
    r_max = solve_rmax(ret_c)
    pd_at_r_min = None
    if r_min is not None:
        pd_at_r_min = estimate_pd(
            ensemble, cfg.debt, r_min, cfg.sim.default_mode, cfg.plan.t_ss, cfg.horizon
        )
    return EquilibriumReport(
        r_min=r_min,
        r_fix=r_fix,
        r_max=r_max,
        pd_at_r_min=pd_at_r_min,
        pd_curve=pd_c,
        return_curve=ret_c,
        negotiation_range=(r_min, r_max) if r_min is not None else None,
        verdict="equilibrium" if r_min is not None else "no-equilibrium",
        fp_iterations=trace.iterations,
        fp_history=tuple(trace.history),
        slope_at_r_min=classify_slope(pd_c, r_min) if r_min is not None else None,
        slope_at_r_fix=classify_slope(pd_c, r_fix) if r_fix is not None else None,
        config=cfg,
    )


def solve_max_debt(
    cfg: ScenarioConfig, cache: "EnsembleCache | None" = None
) -> MaxDebtResult:
    """Largest initial STNFP keeping an equilibrium, under shared paths."""
    cache = cache or _default_cache
    ensemble = cache.get(cfg)

    def tau_for_debt(d: float):
        return tau_evaluator(cfg, ensemble, debt=replace(cfg.debt, d_s0=d))

    return max_sustainable_debt(
        tau_for_debt, cfg.debt.d_s0, cfg.solver, cfg.policy.r_f
    )


@dataclass(frozen=True)
class CompareReport:
    base: EquilibriumReport
    variant: EquilibriumReport

    def deltas(self) -> dict:
        def diff(a, b):
            return (b - a) if (a is not None and b is not None) else None

        return {
            "r_min": diff(self.base.r_min, self.variant.r_min),
            "r_fix": diff(self.base.r_fix, self.variant.r_fix),
            "r_max": diff(self.base.r_max, self.variant.r_max),
        }


def compare_scenarios(
    base: ScenarioConfig,
    variant: ScenarioConfig,
    cache: "EnsembleCache | None" = None,
) -> CompareReport:
    """Side-by-side solve; scenarios should share (seed, n) for CRN."""
    return CompareReport(
        base=solve_scenario(base, cache), variant=solve_scenario(variant, cache)
    )


def report_to_dict(report: EquilibriumReport) -> dict:
    c = report.pd_curve
    rc = report.return_curve
    return {
        "verdict": report.verdict,
        "r_min": report.r_min,
        "r_fix": report.r_fix,
        "r_max": report.r_max,
        "pd_at_r_min": report.pd_at_r_min,
        "negotiation_range": list(report.negotiation_range)
        if report.negotiation_range
        else None,
        "curves": {
            "rates": c.rates.tolist(),
            "pd": c.pd.tolist(),
            "tau": c.tau.tolist(),
            "rbar": rc.rbar.tolist(),
        },
        "diagnostics": {
            "fp_iterations": report.fp_iterations,
            "fp_history": list(report.fp_history),
            "slope_at_r_min": report.slope_at_r_min,
            "slope_at_r_fix": report.slope_at_r_fix,
            "tau_exceeds_unity": c.tau_exceeds_unity(),
            "alpha": rc.alpha,
        },
        "manifest": report.manifest(),
    }


def max_debt_to_dict(result: MaxDebtResult, cfg: ScenarioConfig) -> dict:
    return {
        "max_debt": result.debt,
        "tangency_rate": result.tangency_rate,
        "r_min_at_bound": result.r_min_at_bound,
        "r_fix_at_bound": result.r_fix_at_bound,
        "bounded": result.bounded,
        "solves": result.solves,
        "manifest": run_manifest(cfg),
    }


def compare_to_dict(report: CompareReport) -> dict:
    return {
        "base": report_to_dict(report.base),
        "variant": report_to_dict(report.variant),
        "deltas": report.deltas(),
    }


def fcf_fan_summary(
    cfg: ScenarioConfig,
    cache: "EnsembleCache | None" = None,
    n_samples: int = 40,
) -> dict:
    """Per-period percentile bands plus a few raw paths for fan charts."""
    import numpy as np

    cache = cache or _default_cache
    ensemble = cache.get(cfg)
    f = ensemble.f_matrix
    levels = (5, 25, 50, 75, 95)
    bands = np.percentile(f, levels, axis=0)
    return {
        "periods": list(range(1, cfg.horizon + 1)),
        "mean": f.mean(axis=0).tolist(),
        "bands": {f"p{lv}": bands[k].tolist() for k, lv in enumerate(levels)},
        "samples": f[: min(n_samples, ensemble.n)].tolist(),
        "manifest": run_manifest(cfg),
    }
