"""Equilibrium-rate solvers over the recursive rate/PD composition.

The map ``tau(r)`` (required rate given the PD induced by ``r``) is
piecewise constant under common random numbers.  Its stable fixed point is
found by fixed-point iteration from the risk-free floor; the unstable one
by scanning ``g(r) = tau(r) - r`` for a sign change and refining with a
bracketing hybrid root finder.  On top of these sit the expected-return
maximiser, the maximum-sustainable-debt search and restructuring what-ifs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidConfigError
from .pricing import PdCurve, ReturnCurve
from .rootfind import brent


@dataclass(frozen=True)
class SolverSettings:
    fp_tolerance: float = 1e-4
    fp_max_iter: int = 200
    bracket_grid: int = 400
    root_tolerance: float = 1e-5
    rate_bounds: tuple[float, float] = (0.001, 0.999)
    curve_points: int = 200
    unstable_margin: float = 0.0025
    debt_resolution: float = 0.01
    debt_cap_factor: float = 64.0

    def __post_init__(self) -> None:
        if self.fp_tolerance <= 0 or self.root_tolerance <= 0:
            raise InvalidConfigError("solver tolerances must be > 0")
        lo, hi = self.rate_bounds
        if not (0.0 < lo < hi < 1.0):
            raise InvalidConfigError("solver.rate_bounds must satisfy 0 < lo < hi < 1")
        if self.bracket_grid < 2 or self.curve_points < 2:
            raise InvalidConfigError("solver grids need at least 2 points")

    def curve_grid(self) -> np.ndarray:
        return np.linspace(self.rate_bounds[0], self.rate_bounds[1], self.curve_points)


@dataclass
class FixedPointTrace:
    iterations: int = 0
    history: list = field(default_factory=list)
    converged: bool = False
    left_domain: bool = False


def solve_stable(
    tau_fn: Callable[[float], float],
    start: float,
    settings: SolverSettings,
) -> tuple["float | None", FixedPointTrace]:
    """Fixed-point iteration ``r_k = tau(r_{k-1})`` from ``start``.

    Returns the converged rate, or None when the iteration leaves (0, 1)
    or exhausts its budget (the no-equilibrium verdict, not an error).
    """
    trace = FixedPointTrace()
    r = start
    trace.history.append(r)
    for _ in range(settings.fp_max_iter):
        r_next = tau_fn(r)
        trace.iterations += 1
        trace.history.append(r_next)
        if not 0.0 < r_next < 1.0:
            trace.left_domain = True
            return None, trace
        if abs(r_next - r) < settings.fp_tolerance:
            trace.converged = True
            return r_next, trace
        r = r_next
    return None, trace


def solve_unstable(
    tau_fn: Callable[[float], float],
    lower: float,
    settings: SolverSettings,
) -> "float | None":
    """First upward crossing of ``tau(r) = r`` above ``lower``.

    Walks ``bracket_grid`` points looking for a negative-to-nonnegative
    transition of ``g(r) = tau(r) - r`` after at least one negative value,
    then refines the bracket with Brent's method.  Returns None when no
    sign change exists (tangency passed, or no unstable fixed point).
    """
    hi = settings.rate_bounds[1]
    if lower >= hi:
        return None

    def g(r: float) -> float:
        return tau_fn(r) - r

    grid = np.linspace(lower, hi, settings.bracket_grid)
    have_neg = False
    prev_r = prev_g = None
    for r in grid:
        val = g(float(r))
        if val < 0.0:
            have_neg = True
            prev_r, prev_g = float(r), val
        elif have_neg:
            return brent(
                g, prev_r, float(r),
                xtol=settings.root_tolerance, fa=prev_g, fb=val,
            )
        else:
            prev_r, prev_g = float(r), val
    return None


def solve_rmax(curve: ReturnCurve) -> float:
    """Grid argmax of the expected return; ties break to the smaller rate."""
    return float(curve.rates[int(np.argmax(curve.rbar))])


def classify_slope(curve: PdCurve, r: float) -> float:
    """Numerical slope of tau across one grid step around ``r``."""
    idx = int(np.searchsorted(curve.rates, r))
    idx = max(1, min(idx, len(curve.rates) - 1))
    dr = curve.rates[idx] - curve.rates[idx - 1]
    return float((curve.tau[idx] - curve.tau[idx - 1]) / dr)


@dataclass(frozen=True)
class MaxDebtResult:
    """Boundary of sustainable initial STNFP.

    ``tangency_rate`` is the centre of the near-zero valley of ``g`` at the
    boundary debt: where the required-rate curve last touches the identity
    line.  ``r_min_at_bound`` / ``r_fix_at_bound`` are the dip edges there
    (they collapse onto each other at exact tangency).  ``bounded`` is False
    when no debt up to the search cap breaks the equilibrium.
    """

    debt: float
    tangency_rate: "float | None"
    r_min_at_bound: "float | None"
    r_fix_at_bound: "float | None"
    bounded: bool
    solves: int


def _dip_scan(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    n: int,
) -> tuple[np.ndarray, np.ndarray]:
    rs = np.linspace(lo, hi, n)
    return rs, np.array([g(float(r)) for r in rs])


def has_equilibrium(
    tau_fn: Callable[[float], float],
    settings: SolverSettings,
    start: float,
) -> bool:
    """A fixed point of tau exists in (0, 1).

    Tries the cheap fixed-point iteration first; if that diverges (it can
    jump over a narrow dip near tangency), falls back to scanning
    ``g = tau - r`` for any non-positive value.
    """
    r_min, _ = solve_stable(tau_fn, start, settings)
    if r_min is not None:
        return True
    lo = start + settings.unstable_margin
    for r in np.linspace(lo, settings.rate_bounds[1], settings.bracket_grid):
        if tau_fn(float(r)) - float(r) <= 0.0:
            return True
    return False


def max_sustainable_debt(
    tau_for_debt: Callable[[float], Callable[[float], float]],
    base_debt: float,
    settings: SolverSettings,
    start: float,
) -> MaxDebtResult:
    """Bisect the initial STNFP between equilibrium and no-equilibrium.

    ``tau_for_debt(d)`` must return a tau evaluator for the scenario with
    initial debt ``d`` sharing one ensemble (common random numbers).
    """
    solves = 0

    def ok(d: float) -> bool:
        nonlocal solves
        solves += 1
        return has_equilibrium(tau_for_debt(d), settings, start)

    if not ok(base_debt):
        raise InvalidConfigError(
            "base scenario has no equilibrium: nothing to expand"
        )
    lo = base_debt
    hi = base_debt * 2.0
    cap = base_debt * settings.debt_cap_factor
    while ok(hi):
        lo = hi
        hi *= 2.0
        if hi > cap:
            return MaxDebtResult(
                debt=cap, tangency_rate=None, r_min_at_bound=None,
                r_fix_at_bound=None, bounded=False, solves=solves,
            )
    while hi - lo > settings.debt_resolution:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    tau_bound = tau_for_debt(lo)

    def g(r: float) -> float:
        return tau_bound(r) - r

    rs, gs = _dip_scan(g, start + settings.unstable_margin,
                       settings.rate_bounds[1], settings.bracket_grid)
    tangency = float(rs[int(np.argmin(gs))])
    r_lo_edge = r_hi_edge = None
    neg = np.where(gs < 0.0)[0]
    if len(neg):
        i0, i1 = int(neg[0]), int(neg[-1])
        if i0 > 0:
            r_lo_edge = brent(g, float(rs[i0 - 1]), float(rs[i0]),
                              xtol=settings.root_tolerance)
        if i1 + 1 < len(rs):
            r_hi_edge = brent(g, float(rs[i1]), float(rs[i1 + 1]),
                              xtol=settings.root_tolerance)
    return MaxDebtResult(
        debt=lo, tangency_rate=tangency, r_min_at_bound=r_lo_edge,
        r_fix_at_bound=r_hi_edge, bounded=True, solves=solves,
    )
