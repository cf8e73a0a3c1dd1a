"""Scenario configuration: parsing, validation, presets, hashing.

A scenario file is YAML (JSON parses as a subset) with sections ``plan``,
``debt``, ``policy``, ``sim``, ``solver`` and a top-level ``alpha``.
Validation errors name the offending field path so the CLI can exit with
a usable diagnostic.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field, replace
from importlib import resources
from pathlib import Path

import yaml

from .equilibrium import SolverSettings
from .errors import InvalidConfigError
from .fcf import SIGMA_SEMANTICS, FcfPlan, NoiseSpec
from .pricing import RatePolicy
from .treasury import DebtSchedule, DefaultMode, TermLoan

PRESETS = ("case-a", "case-b", "case-c")


@dataclass(frozen=True)
class SimSettings:
    n: int = 2500
    seed: int = 0
    horizon: int = 0          # 0 means t_ss + 50
    default_mode: DefaultMode = DefaultMode.LITERAL_SCAN

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidConfigError("sim.n must be >= 1")


@dataclass(frozen=True)
class ScenarioConfig:
    plan: FcfPlan
    debt: DebtSchedule
    policy: RatePolicy
    sim: SimSettings
    solver: SolverSettings = field(default_factory=SolverSettings)
    alpha: float = 1.01
    name: str = "custom"

    def __post_init__(self) -> None:
        if self.alpha <= 1.0:
            raise InvalidConfigError("alpha must be > 1")
        horizon = self.horizon
        if horizon < self.plan.t_ss + 1:
            raise InvalidConfigError("sim.horizon must be >= plan.t_ss + 1")
        if self.debt.max_flow_t() > horizon:
            raise InvalidConfigError(
                f"sim.horizon ({horizon}) does not cover the last loan "
                f"installment (t={self.debt.max_flow_t()})"
            )

    @property
    def horizon(self) -> int:
        return self.sim.horizon if self.sim.horizon else self.plan.t_ss + 50

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "plan": {
                "rev0": self.plan.rev0,
                "x_rev": self.plan.x_rev,
                "x_var": self.plan.x_var,
                "fixed_cost_base": self.plan.fixed_cost_base,
                "x_tax": self.plan.x_tax,
                "x_wc": self.plan.x_wc,
                "capex_base": self.plan.capex_base,
                "t_ss": self.plan.t_ss,
                "noise": {
                    "rev": asdict(self.plan.noise_rev),
                    "var": asdict(self.plan.noise_var),
                    "fix": asdict(self.plan.noise_fix),
                    "cap": asdict(self.plan.noise_cap),
                },
            },
            "debt": {
                "initial_stnfp": self.debt.d_s0,
                "loans": [asdict(loan) for loan in self.debt.loans],
            },
            "policy": {"risk_free": self.policy.r_f, "lgd": self.policy.lgd},
            "sim": {
                "n": self.sim.n,
                "seed": self.sim.seed,
                "horizon": self.horizon,
                "default_mode": self.sim.default_mode.value,
            },
            "solver": {
                "fp_tolerance": self.solver.fp_tolerance,
                "fp_max_iter": self.solver.fp_max_iter,
                "bracket_grid": self.solver.bracket_grid,
                "root_tolerance": self.solver.root_tolerance,
                "rate_bounds": list(self.solver.rate_bounds),
                "curve_points": self.solver.curve_points,
                "unstable_margin": self.solver.unstable_margin,
                "debt_resolution": self.solver.debt_resolution,
                "debt_cap_factor": self.solver.debt_cap_factor,
            },
            "alpha": self.alpha,
            "sigma_semantics": SIGMA_SEMANTICS,
        }

    def config_hash(self) -> str:
        payload = self.to_dict()
        payload.pop("name", None)
        canon = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode()).hexdigest()


def _need(mapping: dict, key: str, path: str):
    if key not in mapping:
        raise InvalidConfigError(f"{path}.{key}: missing required field")
    return mapping[key]


def _num(mapping: dict, key: str, path: str, default=None) -> float:
    if key not in mapping:
        if default is None:
            raise InvalidConfigError(f"{path}.{key}: missing required field")
        return default
    value = mapping[key]
    if isinstance(value, str):
        # YAML 1.1 reads exponent-form floats without a dot ("1e-05") as strings
        try:
            return float(value)
        except ValueError:
            raise InvalidConfigError(
                f"{path}.{key}: expected a number, got {value!r}"
            ) from None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidConfigError(f"{path}.{key}: expected a number, got {value!r}")
    return float(value)


def _int(mapping: dict, key: str, path: str, default=None) -> int:
    if key not in mapping:
        if default is None:
            raise InvalidConfigError(f"{path}.{key}: missing required field")
        return default
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidConfigError(f"{path}.{key}: expected an integer, got {value!r}")
    return value


def _noise(mapping: dict, key: str, path: str) -> NoiseSpec:
    raw = mapping.get(key, {})
    if not isinstance(raw, dict):
        raise InvalidConfigError(f"{path}.{key}: expected a mapping")
    spec_path = f"{path}.{key}"
    mean = _num(raw, "mean", spec_path, default=0.0)
    variance = _num(raw, "variance", spec_path, default=0.0)
    if variance < 0:
        raise InvalidConfigError(f"{spec_path}.variance: must be >= 0")
    return NoiseSpec(mean=mean, variance=variance)


def scenario_from_dict(raw: dict, name: str = "custom") -> ScenarioConfig:
    """Build and validate a scenario, raising field-addressed errors."""
    if not isinstance(raw, dict):
        raise InvalidConfigError("config root: expected a mapping")
    if "config" in raw and "command" in raw:
        # run manifest: unwrap the embedded normalized config
        raw = raw["config"]
    plan_raw = _need(raw, "plan", "config")
    noise_raw = plan_raw.get("noise", {})
    try:
        plan = FcfPlan(
            rev0=_num(plan_raw, "rev0", "plan"),
            x_rev=_num(plan_raw, "x_rev", "plan"),
            x_var=_num(plan_raw, "x_var", "plan"),
            fixed_cost_base=_num(plan_raw, "fixed_cost_base", "plan"),
            x_tax=_num(plan_raw, "x_tax", "plan"),
            x_wc=_num(plan_raw, "x_wc", "plan"),
            capex_base=_num(plan_raw, "capex_base", "plan"),
            t_ss=_int(plan_raw, "t_ss", "plan"),
            noise_rev=_noise(noise_raw, "rev", "plan.noise"),
            noise_var=_noise(noise_raw, "var", "plan.noise"),
            noise_fix=_noise(noise_raw, "fix", "plan.noise"),
            noise_cap=_noise(noise_raw, "cap", "plan.noise"),
        )
    except InvalidConfigError:
        raise
    debt_raw = _need(raw, "debt", "config")
    loans = []
    for k, loan_raw in enumerate(debt_raw.get("loans", [])):
        lp = f"debt.loans[{k}]"
        loans.append(
            TermLoan(
                amount=_num(loan_raw, "amount", lp),
                issue_t=_int(loan_raw, "issue_t", lp),
                first_repay_t=_int(loan_raw, "first_repay_t", lp),
                n_installments=_int(loan_raw, "n_installments", lp),
            )
        )
    debt = DebtSchedule(d_s0=_num(debt_raw, "initial_stnfp", "debt"), loans=tuple(loans))
    policy_raw = raw.get("policy", {})
    policy = RatePolicy(
        r_f=_num(policy_raw, "risk_free", "policy", default=0.01),
        lgd=_num(policy_raw, "lgd", "policy", default=0.6),
    )
    sim_raw = raw.get("sim", {})
    sim = SimSettings(
        n=_int(sim_raw, "n", "sim", default=2500),
        seed=_int(sim_raw, "seed", "sim", default=0),
        horizon=_int(sim_raw, "horizon", "sim", default=0),
        default_mode=DefaultMode.parse(sim_raw.get("default_mode", "literal")),
    )
    solver_raw = raw.get("solver", {})
    bounds_raw = solver_raw.get("rate_bounds", [0.001, 0.999])
    if not (isinstance(bounds_raw, (list, tuple)) and len(bounds_raw) == 2):
        raise InvalidConfigError("solver.rate_bounds: expected [lo, hi]")
    solver = SolverSettings(
        fp_tolerance=_num(solver_raw, "fp_tolerance", "solver", default=1e-4),
        fp_max_iter=_int(solver_raw, "fp_max_iter", "solver", default=200),
        bracket_grid=_int(solver_raw, "bracket_grid", "solver", default=400),
        root_tolerance=_num(solver_raw, "root_tolerance", "solver", default=1e-5),
        rate_bounds=(float(bounds_raw[0]), float(bounds_raw[1])),
        curve_points=_int(solver_raw, "curve_points", "solver", default=200),
        unstable_margin=_num(solver_raw, "unstable_margin", "solver", default=0.0025),
        debt_resolution=_num(solver_raw, "debt_resolution", "solver", default=0.01),
        debt_cap_factor=_num(solver_raw, "debt_cap_factor", "solver", default=64.0),
    )
    return ScenarioConfig(
        plan=plan, debt=debt, policy=policy, sim=sim, solver=solver,
        alpha=_num(raw, "alpha", "config", default=1.01),
        name=raw.get("name", name),
    )


def load_config(path: "str | Path") -> ScenarioConfig:
    text = Path(path).read_text()
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise InvalidConfigError(f"config parse error: {exc}") from exc
    return scenario_from_dict(raw, name=Path(path).stem)


def load_preset(name: str) -> ScenarioConfig:
    if name not in PRESETS:
        raise InvalidConfigError(
            f"unknown preset {name!r}; available: {', '.join(PRESETS)}"
        )
    ref = resources.files("crediteq.presets").joinpath(f"{name.replace('-', '_')}.yaml")
    raw = yaml.safe_load(ref.read_text())
    return scenario_from_dict(raw, name=name)


def apply_overrides(
    cfg: ScenarioConfig,
    seed: "int | None" = None,
    samples: "int | None" = None,
    mode: "str | None" = None,
    maturity: "int | None" = None,
    lgd: "float | None" = None,
    debt: "float | None" = None,
) -> ScenarioConfig:
    """CLI-style overrides producing a new validated scenario."""
    sim = cfg.sim
    if seed is not None:
        sim = replace(sim, seed=seed)
    if samples is not None:
        sim = replace(sim, n=samples)
    if mode is not None:
        sim = replace(sim, default_mode=DefaultMode.parse(mode))
    debt_sched = cfg.debt
    if maturity is not None:
        if maturity < 1:
            raise InvalidConfigError("maturity override must be >= 1")
        loans = tuple(
            replace(loan, n_installments=maturity) for loan in debt_sched.loans
        )
        debt_sched = replace(debt_sched, loans=loans)
    if debt is not None:
        debt_sched = replace(debt_sched, d_s0=debt)
    policy = cfg.policy
    if lgd is not None:
        policy = replace(policy, lgd=lgd)
    return replace(cfg, sim=sim, debt=debt_sched, policy=policy)
