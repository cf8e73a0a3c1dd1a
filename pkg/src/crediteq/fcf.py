"""Free-cash-flow path simulation under analyst bias/uncertainty revisions.

A company plan (revenue growth, cost ratios, tax, working capital, capex)
is perturbed by per-period Gaussian noise on each component.  Paths freeze
at their steady-state period: the value realised at ``t_ss`` is held for
every later period.

The noise columns of a plan are interpreted as *variances* (sigma-squared),
not standard deviations; every output manifest records this choice under
``sigma_semantics``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidConfigError

SIGMA_SEMANTICS = "variance"


@dataclass(frozen=True)
class NoiseSpec:
    """Per-period Gaussian revision: ``eps ~ N(mean, variance)``."""

    mean: float = 0.0
    variance: float = 0.0

    def __post_init__(self) -> None:
        if self.variance < 0:
            raise InvalidConfigError("noise variance must be >= 0")

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)


@dataclass(frozen=True)
class FcfPlan:
    """Company plan parameters plus the analyst's noise revisions.

    ``x_*`` values are per-period fractions; ``t_ss`` is the first period of
    the steady state (the last period in which noise is drawn).
    """

    rev0: float
    x_rev: float
    x_var: float
    fixed_cost_base: float
    x_tax: float
    x_wc: float
    capex_base: float
    t_ss: int
    noise_rev: NoiseSpec = field(default_factory=NoiseSpec)
    noise_var: NoiseSpec = field(default_factory=NoiseSpec)
    noise_fix: NoiseSpec = field(default_factory=NoiseSpec)
    noise_cap: NoiseSpec = field(default_factory=NoiseSpec)

    def __post_init__(self) -> None:
        if self.rev0 <= 0:
            raise InvalidConfigError("plan.rev0 must be > 0")
        for name in ("x_var", "x_tax", "x_wc"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise InvalidConfigError(f"plan.{name} must lie in [0, 1]")
        if self.t_ss < 1:
            raise InvalidConfigError("plan.t_ss must be >= 1")


@dataclass(frozen=True)
class FcfPath:
    """One simulated path: values F_1..F_horizon, constant from ``t_ss`` on."""

    f: np.ndarray
    steady_value: float

    def value_at(self, t: int) -> float:
        """F_t for a 1-based period index."""
        return float(self.f[t - 1])


def sample_fcf_path(plan: FcfPlan, horizon: int, stream: np.random.Generator) -> FcfPath:
    """Draw one FCF path from ``plan`` using the given random stream.

    Noise is drawn per period in a fixed order (revenue, variable cost,
    fixed cost, capex) through ``t_ss``; afterwards the path holds its
    steady-state value.
    """
    if horizon < plan.t_ss:
        raise InvalidConfigError(
            f"horizon ({horizon}) must be >= plan.t_ss ({plan.t_ss})"
        )
    f = np.empty(horizon, dtype=np.float64)
    mu = (plan.noise_rev.mean, plan.noise_var.mean, plan.noise_fix.mean, plan.noise_cap.mean)
    sd = (plan.noise_rev.std, plan.noise_var.std, plan.noise_fix.std, plan.noise_cap.std)
    rev = plan.rev0
    for t in range(1, plan.t_ss + 1):
        z = stream.standard_normal(4)
        e_rev = mu[0] + sd[0] * z[0]
        e_var = mu[1] + sd[1] * z[1]
        e_fix = mu[2] + sd[2] * z[2]
        e_cap = mu[3] + sd[3] * z[3]
        rev = rev * (1.0 + plan.x_rev + e_rev)
        c_var = rev * (plan.x_var - e_var)
        c_fix = plan.fixed_cost_base * (1.0 + e_fix)
        tax = max(0.0, (rev - c_var - c_fix) * plan.x_tax)
        c_wc = plan.x_wc * rev
        cap = plan.capex_base * (1.0 + e_cap)
        f[t - 1] = rev - c_var - c_fix - tax + c_wc - cap
    f[plan.t_ss:] = f[plan.t_ss - 1]
    f.flags.writeable = False
    return FcfPath(f=f, steady_value=float(f[plan.t_ss - 1]))


def zero_noise_path(plan: FcfPlan, horizon: int) -> FcfPath:
    """The deterministic path obtained by pinning every noise at its mean."""

    class _MeanStream:
        def standard_normal(self, n: int) -> np.ndarray:
            return np.zeros(n)

    return sample_fcf_path(plan, horizon, _MeanStream())  # type: ignore[arg-type]


@dataclass(frozen=True)
class PathEnsemble:
    """N paths generated from per-path substreams of one seed.

    The payload matrix is immutable; regenerating with the same
    ``(plan, n, horizon, seed)`` reproduces it bit-for-bit regardless of
    evaluation order.
    """

    f_matrix: np.ndarray  # shape (n, horizon), read-only
    seed: int
    n: int
    horizon: int
    t_ss: int

    @property
    def paths(self) -> tuple[FcfPath, ...]:
        return tuple(self.path(i) for i in range(self.n))

    def path(self, i: int) -> FcfPath:
        row = self.f_matrix[i]
        return FcfPath(f=row, steady_value=float(row[self.t_ss - 1]))


def build_ensemble(plan: FcfPlan, n: int, horizon: int, seed: int) -> PathEnsemble:
    """Simulate ``n`` independent FCF paths.

    Each path uses its own child of ``SeedSequence(seed)``, so the result
    does not depend on generation order and is safe to parallelise.
    """
    if n < 1:
        raise InvalidConfigError("sample count n must be >= 1")
    if horizon < plan.t_ss:
        raise InvalidConfigError(
            f"horizon ({horizon}) must be >= plan.t_ss ({plan.t_ss})"
        )
    children = np.random.SeedSequence(seed).spawn(n)
    f = np.empty((n, horizon), dtype=np.float64)
    for i in range(n):
        stream = np.random.default_rng(children[i])
        f[i, :] = sample_fcf_path(plan, horizon, stream).f
    f.flags.writeable = False
    return PathEnsemble(f_matrix=f, seed=seed, n=n, horizon=horizon, t_ss=plan.t_ss)
