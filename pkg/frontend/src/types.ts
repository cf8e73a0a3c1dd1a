/**
 * DTOs mirroring the crediteq service JSON bodies.
 */

export interface NoiseSpec {
  mean: number;
  variance: number;
}

export interface PlanConfig {
  rev0: number;
  x_rev: number;
  x_var: number;
  fixed_cost_base: number;
  x_tax: number;
  x_wc: number;
  capex_base: number;
  t_ss: number;
  noise: {
    rev: NoiseSpec;
    var: NoiseSpec;
    fix: NoiseSpec;
    cap: NoiseSpec;
  };
}

export interface LoanConfig {
  amount: number;
  issue_t: number;
  first_repay_t: number;
  n_installments: number;
}

export interface ScenarioConfig {
  name?: string;
  plan: PlanConfig;
  debt: { initial_stnfp: number; loans: LoanConfig[] };
  policy: { risk_free: number; lgd: number };
  sim: { n: number; seed: number; horizon: number; default_mode: string };
  solver?: Record<string, unknown>;
  alpha: number;
  sigma_semantics?: string;
}

export interface CurveArrays {
  rates: number[];
  pd: number[];
  tau: number[];
  rbar: number[];
}

export interface EquilibriumReport {
  verdict: "equilibrium" | "no-equilibrium";
  r_min: number | null;
  r_fix: number | null;
  r_max: number;
  pd_at_r_min: number | null;
  negotiation_range: [number, number] | null;
  curves: CurveArrays;
  diagnostics: Record<string, unknown>;
  manifest: Record<string, unknown>;
}

export interface CompareReport {
  base: EquilibriumReport;
  variant: EquilibriumReport;
  deltas: { r_min: number | null; r_fix: number | null; r_max: number | null };
}

export interface FcfSummary {
  periods: number[];
  mean: number[];
  bands: Record<string, number[]>;
  samples: number[][];
  manifest: Record<string, unknown>;
}

export type PresetMap = Record<string, ScenarioConfig>;
