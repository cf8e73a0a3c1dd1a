"""crediteq: Monte Carlo credit-equilibrium engine.

Simulates analyst-revised free-cash-flow paths, evolves the short-term net
financial position under a debt schedule, estimates the probability of
default as a function of the interest rate, and solves the recursive
rate/PD problem for equilibrium rates, lender-optimal rates, maximum
sustainable debt and restructuring what-ifs.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    CreditEqError,
    InternalError,
    InvalidConfigError,
    InvalidRateError,
    UnpriceableError,
)
from .fcf import (  # noqa: F401
    FcfPath,
    FcfPlan,
    NoiseSpec,
    PathEnsemble,
    build_ensemble,
    sample_fcf_path,
    zero_noise_path,
)
from .treasury import (  # noqa: F401
    DebtSchedule,
    DefaultMode,
    TermLoan,
    TreasuryPath,
    check_proposition_a1,
    detect_default,
    evolve_treasury,
    term_debt_series,
)
from .pricing import (  # noqa: F401
    PdCurve,
    RatePolicy,
    ReturnCurve,
    estimate_pd,
    expected_return_curve,
    path_return,
    pd_curve,
    rate_from_pd,
    tau,
)
from .equilibrium import (  # noqa: F401
    MaxDebtResult,
    SolverSettings,
    solve_rmax,
    solve_stable,
    solve_unstable,
)
from .config import (  # noqa: F401
    ScenarioConfig,
    SimSettings,
    apply_overrides,
    load_config,
    load_preset,
    scenario_from_dict,
)
from .engine import (  # noqa: F401
    CompareReport,
    EnsembleCache,
    EquilibriumReport,
    compare_scenarios,
    solve_max_debt,
    solve_scenario,
)
