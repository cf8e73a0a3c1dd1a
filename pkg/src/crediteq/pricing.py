"""Rate/PD mapping, Monte Carlo PD estimation, and lender profitability.

All estimators run against a fixed :class:`~crediteq.fcf.PathEnsemble`
(common random numbers), so PD, tau and expected-return values are
deterministic functions of the rate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InvalidConfigError, InvalidRateError, UnpriceableError
from .fcf import FcfPath, PathEnsemble
from .treasury import DebtSchedule, DefaultMode, TreasuryPath, term_debt_series


@dataclass(frozen=True)
class RatePolicy:
    """Risk-free floor and loss given default driving the required rate."""

    r_f: float = 0.01
    lgd: float = 0.6

    def __post_init__(self) -> None:
        if not 0.0 <= self.r_f < 1.0:
            raise InvalidConfigError("policy.risk_free must lie in [0, 1)")
        if not 0.0 < self.lgd <= 1.0:
            raise InvalidConfigError("policy.lgd must lie in (0, 1]")


def rate_from_pd(p: float, policy: RatePolicy) -> float:
    """Required rate covering default probability ``p``.

    ``(r_f + p*LGD) / (1 - p*LGD)``; strictly increasing in ``p`` and equal
    to ``r_f`` at ``p = 0``.
    """
    if not 0.0 <= p <= 1.0:
        raise InvalidConfigError(f"probability must lie in [0, 1], got {p}")
    loss = p * policy.lgd
    if loss >= 1.0:
        raise UnpriceableError(
            f"p*LGD = {loss:.6g} >= 1: no finite rate covers the expected loss"
        )
    return (policy.r_f + loss) / (1.0 - loss)


def _series_for(sched: DebtSchedule, horizon: int) -> tuple[np.ndarray, np.ndarray]:
    return term_debt_series(sched.loans, horizon)


def _check_rate(r: float) -> None:
    if not 0.0 <= r < 1.0:
        raise InvalidRateError(f"rate must lie in [0, 1), got {r}")


def estimate_pd(
    ensemble: PathEnsemble,
    sched: DebtSchedule,
    r: float,
    mode: DefaultMode,
    t_ss: int,
    horizon: int,
) -> float:
    """Fraction of ensemble paths whose treasury defaults at rate ``r``."""
    _check_rate(r)
    d_l, c = _series_for(sched, horizon)
    kernel_mode = (
        _kernels.MODE_ONE_STEP if mode is DefaultMode.ONE_STEP else _kernels.MODE_LITERAL
    )
    defaulted, _, _ = _kernels.evolve_batch(
        ensemble.f_matrix, c, d_l, sched.d_s0, r, t_ss, horizon,
        kernel_mode, 1.01, 1.0, want_returns=False,
    )
    return float(np.count_nonzero(defaulted)) / ensemble.n


def tau(
    r: float,
    ensemble: PathEnsemble,
    sched: DebtSchedule,
    policy: RatePolicy,
    mode: DefaultMode,
    t_ss: int,
    horizon: int,
) -> float:
    """Rate the lender would require given the PD induced by applying ``r``."""
    return rate_from_pd(estimate_pd(ensemble, sched, r, mode, t_ss, horizon), policy)


def path_return(
    path: TreasuryPath,
    fcf: FcfPath,
    sched: DebtSchedule,
    policy: RatePolicy,
    alpha: float,
    r: float,
) -> float:
    """Discounted lender return on one evolved path.

    Sums the bank's per-period receipts through the stop time ``t_end``,
    nets out the initial exposure, and credits the recovery bracket at the
    default time.  Per-period receipts on the short-term side telescope the
    positive part of the STNFP, so for paths whose balance stays positive
    they equal ``C_t + I_S,t`` exactly.
    """
    if alpha <= 1.0:
        raise InvalidConfigError("alpha must be > 1")
    d_s0 = sched.d_s0
    total = 0.0
    disc = 1.0
    horizon = len(path.c_flow)
    for t in range(1, horizon + 1):
        disc = disc / alpha
        d_prev = path.d_s[t - 1]
        d_now = path.d_s[t]
        receipts = (
            (max(d_prev, 0.0) - max(d_now, 0.0))
            + path.i_s[t - 1]
            + path.c_sched[t]
            + path.i_l[t - 1]
        )
        total += receipts * disc
        if t == path.t_end:
            break
    total = total - d_s0 - path.d_l[0]
    if path.default:
        # disc now holds alpha**(-t_end): recovery lands at the default time
        t_def = path.t_end
        d_t = float(path.d_s[t_def])
        d_l_t = float(path.d_l[t_def])
        if d_t <= d_s0:
            recov = (d_t + d_l_t) * (1.0 - policy.lgd)
        else:
            recov = (-(d_t - d_s0) + d_s0 * (1.0 - policy.lgd)) + d_l_t * (1.0 - policy.lgd)
        total += recov * disc
    return total


@dataclass(frozen=True)
class PdCurve:
    """PD and tau sampled on a rate grid against one shared ensemble."""

    rates: np.ndarray
    pd: np.ndarray
    tau: np.ndarray
    n: int

    def tau_exceeds_unity(self) -> bool:
        return bool(np.any(self.tau >= 1.0))


@dataclass(frozen=True)
class ReturnCurve:
    """Expected lender return sampled on a rate grid."""

    rates: np.ndarray
    rbar: np.ndarray
    alpha: float


def _batch_eval(
    ensemble: PathEnsemble,
    sched: DebtSchedule,
    r: float,
    mode: DefaultMode,
    t_ss: int,
    horizon: int,
    alpha: float,
    lgd: float,
) -> tuple[float, float]:
    d_l, c = _series_for(sched, horizon)
    kernel_mode = (
        _kernels.MODE_ONE_STEP if mode is DefaultMode.ONE_STEP else _kernels.MODE_LITERAL
    )
    defaulted, _, ret = _kernels.evolve_batch(
        ensemble.f_matrix, c, d_l, sched.d_s0, r, t_ss, horizon,
        kernel_mode, alpha, lgd, want_returns=True,
    )
    pd = float(np.count_nonzero(defaulted)) / ensemble.n
    return pd, float(ret.mean())


def pd_curve(
    ensemble: PathEnsemble,
    sched: DebtSchedule,
    policy: RatePolicy,
    grid: np.ndarray,
    mode: DefaultMode,
    t_ss: int,
    horizon: int,
) -> PdCurve:
    """PD(r) and tau(r) over ``grid`` using common random numbers."""
    pds = np.empty(len(grid))
    taus = np.empty(len(grid))
    for k, r in enumerate(grid):
        _check_rate(float(r))
        pds[k] = estimate_pd(ensemble, sched, float(r), mode, t_ss, horizon)
        taus[k] = rate_from_pd(pds[k], policy)
    return PdCurve(rates=np.asarray(grid, dtype=float), pd=pds, tau=taus, n=ensemble.n)


def expected_return_curve(
    ensemble: PathEnsemble,
    sched: DebtSchedule,
    policy: RatePolicy,
    alpha: float,
    grid: np.ndarray,
    mode: DefaultMode,
    t_ss: int,
    horizon: int,
) -> ReturnCurve:
    """Empirical mean of the lender return at each grid rate."""
    if alpha <= 1.0:
        raise InvalidConfigError("alpha must be > 1")
    rbar = np.empty(len(grid))
    for k, r in enumerate(grid):
        _check_rate(float(r))
        _, rbar[k] = _batch_eval(
            ensemble, sched, float(r), mode, t_ss, horizon, alpha, policy.lgd
        )
    return ReturnCurve(rates=np.asarray(grid, dtype=float), rbar=rbar, alpha=alpha)


def curve_table(
    ensemble: PathEnsemble,
    sched: DebtSchedule,
    policy: RatePolicy,
    alpha: float,
    grid: np.ndarray,
    mode: DefaultMode,
    t_ss: int,
    horizon: int,
) -> tuple[PdCurve, ReturnCurve]:
    """One pass producing both curves (single kernel sweep per rate)."""
    pds = np.empty(len(grid))
    taus = np.empty(len(grid))
    rbar = np.empty(len(grid))
    for k, r in enumerate(grid):
        _check_rate(float(r))
        pds[k], rbar[k] = _batch_eval(
            ensemble, sched, float(r), mode, t_ss, horizon, alpha, policy.lgd
        )
        taus[k] = rate_from_pd(pds[k], policy)
    rates = np.asarray(grid, dtype=float)
    return (
        PdCurve(rates=rates, pd=pds, tau=taus, n=ensemble.n),
        ReturnCurve(rates=rates, rbar=rbar, alpha=alpha),
    )
