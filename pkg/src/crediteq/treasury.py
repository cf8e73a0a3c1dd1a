"""Treasury evolution: short-term net financial position under a debt schedule.

Period bookkeeping (all series 1-based in period ``t``):

    I_S,t = r * max(0, D_S,t-1)        short-term interest
    I_L,t = r * d_L,t-1                term-loan interest
    S_t   = c_t + I_L,t + I_S,t        debt service
    C_t   = F_t - S_t                  change in STNFP
    D_S,t = D_S,t-1 - C_t

Interest accrues on beginning-of-period balances, and a cash surplus
(negative STNFP) earns nothing.

A path stops scanning for default once the surplus covers every remaining
liability (``D_S,t + d_L,t <= 0``): the company could settle in full, so the
lender's exposure question is closed.  Within the scan window ``(t_ss, T]``
the default trigger is ``C_t <= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InternalError, InvalidConfigError, InvalidRateError
from .fcf import FcfPath


class DefaultMode(Enum):
    """How the default event is detected on a path."""

    LITERAL_SCAN = "literal"
    ONE_STEP = "one-step"

    @classmethod
    def parse(cls, value: "str | DefaultMode") -> "DefaultMode":
        if isinstance(value, DefaultMode):
            return value
        for mode in cls:
            if value == mode.value:
                return mode
        raise InvalidConfigError(
            f"default_mode must be 'literal' or 'one-step', got {value!r}"
        )


@dataclass(frozen=True)
class TermLoan:
    """Bullet issuance repaid with even principal installments."""

    amount: float
    issue_t: int
    first_repay_t: int
    n_installments: int

    def __post_init__(self) -> None:
        if self.amount <= 0:
            raise InvalidConfigError("loan amount must be > 0")
        if self.issue_t < 0:
            raise InvalidConfigError("loan issue_t must be >= 0")
        if self.first_repay_t <= self.issue_t:
            raise InvalidConfigError("loan first_repay_t must be > issue_t")
        if self.n_installments < 1:
            raise InvalidConfigError("loan n_installments must be >= 1")

    @property
    def last_repay_t(self) -> int:
        return self.first_repay_t + self.n_installments - 1


@dataclass(frozen=True)
class DebtSchedule:
    """Initial STNFP plus any number of term loans (flows may overlap)."""

    d_s0: float
    loans: tuple[TermLoan, ...] = ()

    def __post_init__(self) -> None:
        if self.d_s0 <= 0:
            raise InvalidConfigError("debt.initial_stnfp must be > 0")
        object.__setattr__(self, "loans", tuple(self.loans))

    def max_flow_t(self) -> int:
        return max((loan.last_repay_t for loan in self.loans), default=0)


def term_debt_series(
    loans: "tuple[TermLoan, ...] | list[TermLoan]", horizon: int
) -> tuple[np.ndarray, np.ndarray]:
    """Outstanding term principal and net change series.

    Returns ``(d_l, c)`` where ``d_l[t]`` is outstanding principal after
    period ``t``'s flows (index 0..horizon) and ``c[t] = d_l[t-1] - d_l[t]``
    (index 1..horizon, ``c[0]`` unused).  Issuance makes ``c`` negative
    (proceeds in), amortization makes it positive.
    """
    for loan in loans:
        if loan.last_repay_t > horizon:
            raise InvalidConfigError(
                f"horizon ({horizon}) does not cover installments through "
                f"t={loan.last_repay_t}"
            )
    d_l = np.zeros(horizon + 1, dtype=np.float64)
    for loan in loans:
        # outstanding = amount * (n - k) / n after k installments: exact zero at k = n
        start = max(loan.issue_t, 0)
        for t in range(start, horizon + 1):
            k = min(max(t - loan.first_repay_t + 1, 0), loan.n_installments)
            d_l[t] += loan.amount * (loan.n_installments - k) / loan.n_installments
    c = np.zeros(horizon + 1, dtype=np.float64)
    c[1:] = d_l[:-1] - d_l[1:]
    if np.any(d_l < 0):
        raise InternalError("term debt outstanding went negative")
    d_l.flags.writeable = False
    c.flags.writeable = False
    return d_l, c


@dataclass(frozen=True)
class TreasuryPath:
    """Full single-path treasury series, periods 1..horizon.

    ``d_s`` has one leading slot for D_S,0.  ``t_end`` is the stop time:
    the default period, or the first period with all term debt repaid and
    the STNFP cleared, capped at the horizon.  ``retire_t`` is the period
    the path left the default scan because the surplus covered all
    remaining debt (0 when that never happened).
    """

    d_s: np.ndarray        # D_S,0..horizon
    c_flow: np.ndarray     # C_1..horizon            (index t-1)
    i_s: np.ndarray        # I_S,1..horizon
    i_l: np.ndarray        # I_L,1..horizon
    s: np.ndarray          # S_1..horizon
    default: bool
    t_end: int
    retire_t: int
    d_l: np.ndarray        # d_L,0..horizon
    c_sched: np.ndarray    # c_1..horizon (schedule flows, index t)

    def c_at(self, t: int) -> float:
        return float(self.c_flow[t - 1])


def evolve_treasury(
    fcf: FcfPath,
    sched: DebtSchedule,
    r: float,
    horizon: int,
    t_ss: int,
) -> TreasuryPath:
    """Reference single-path evolution of Eqs above through ``horizon``."""
    if not 0.0 <= r < 1.0:
        raise InvalidRateError(f"rate must lie in [0, 1), got {r}")
    if horizon < t_ss + 1:
        raise InvalidConfigError("horizon must be >= t_ss + 1")
    if len(fcf.f) < horizon:
        raise InvalidConfigError("FCF path shorter than requested horizon")
    d_l, c_sched = term_debt_series(sched.loans, horizon)
    d_s = np.empty(horizon + 1)
    c_flow = np.empty(horizon)
    i_s_arr = np.empty(horizon)
    i_l_arr = np.empty(horizon)
    s_arr = np.empty(horizon)
    d_s[0] = sched.d_s0
    default = False
    scanning = True
    retire_t = 0
    t_end = horizon
    stop_recorded = False
    d = sched.d_s0
    for t in range(1, horizon + 1):
        i_s = r * max(d, 0.0)
        i_l = r * d_l[t - 1]
        c_t = fcf.f[t - 1] - c_sched[t] - i_l - i_s
        d_new = d - c_t
        i_s_arr[t - 1] = i_s
        i_l_arr[t - 1] = i_l
        s_arr[t - 1] = c_sched[t] + i_l + i_s
        c_flow[t - 1] = c_t
        d_s[t] = d_new
        if scanning and t > t_ss and c_t <= 0.0:
            default = True
            scanning = False
            if not stop_recorded:
                t_end = t
                stop_recorded = True
        elif scanning and d_new + d_l[t] <= 0.0:
            scanning = False
            retire_t = t
        if not stop_recorded and d_l[t] <= 0.0 and d_new <= 0.0:
            t_end = t
            stop_recorded = True
        d = d_new
    return TreasuryPath(
        d_s=d_s, c_flow=c_flow, i_s=i_s_arr, i_l=i_l_arr, s=s_arr,
        default=default, t_end=t_end, retire_t=retire_t,
        d_l=d_l, c_sched=c_sched,
    )


def detect_default(
    path: TreasuryPath, t_ss: int, mode: DefaultMode, horizon: int
) -> bool:
    """Default event on an evolved path.

    Literal scan: some ``C_t <= 0`` with ``t in (t_ss, horizon]`` before the
    path retired.  One-step: ``C_{t_ss+1} <= 0``, again unless the path
    retired first; growth of a positive balance under constant service is
    irreversible, so the first steady-state step decides.  The two agree
    whenever debt service is constant after the steady state and balances
    stay positive.
    """
    if horizon <= t_ss:
        raise InvalidConfigError("horizon must exceed t_ss")
    if len(path.c_flow) < horizon:
        raise InvalidConfigError("path shorter than requested scan horizon")
    limit = path.retire_t if path.retire_t else horizon
    if mode is DefaultMode.ONE_STEP:
        if path.retire_t and path.retire_t <= t_ss:
            return False
        return bool(path.c_flow[t_ss] <= 0.0)
    for t in range(t_ss + 1, min(limit, horizon) + 1):
        if path.c_flow[t - 1] <= 0.0:
            return True
    return False


def check_proposition_a1(
    path: TreasuryPath, t_ss: int, window_end: "int | None" = None
) -> bool:
    """Irreversibility of STNFP growth on steady-state windows.

    Requires constant FCF and constant schedule flows over the window
    (caller's responsibility).  Returns True iff after the first period
    ``t >= t_ss`` with ``D_S,t >= D_S,t-1`` every later period in the window
    also has a non-decreasing STNFP.
    """
    end = window_end if window_end is not None else len(path.c_flow)
    first = None
    for t in range(t_ss, end + 1):
        if path.d_s[t] >= path.d_s[t - 1]:
            first = t
            break
    if first is None:
        return True
    return all(path.d_s[t] >= path.d_s[t - 1] for t in range(first, end + 1))
