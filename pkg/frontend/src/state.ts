/**
 * Scenario editor state: a working copy of a preset with tracked edits.
 *
 * Edits mutate a deep copy only; the pristine preset stays untouched so
 * "reset" restores it exactly.  Numeric fields are addressed by path
 * strings that match the service's validation messages.
 */

import type { ScenarioConfig } from "./types.js";

export type FieldPath =
  | "debt.initial_stnfp"
  | "policy.risk_free"
  | "policy.lgd"
  | "sim.n"
  | "sim.seed"
  | "maturity"
  | `plan.noise.${"rev" | "var" | "fix" | "cap"}.${"mean" | "variance"}`;

export function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}

export class EditorState {
  private pristine: ScenarioConfig;
  private working: ScenarioConfig;
  presetName: string;

  constructor(preset: ScenarioConfig, presetName: string) {
    this.pristine = clone(preset);
    this.working = clone(preset);
    this.presetName = presetName;
  }

  get config(): ScenarioConfig {
    return this.working;
  }

  /** The editor never hands out its pristine copy. */
  snapshot(): ScenarioConfig {
    return clone(this.working);
  }

  loadPreset(preset: ScenarioConfig, presetName: string): void {
    this.pristine = clone(preset);
    this.working = clone(preset);
    this.presetName = presetName;
  }

  reset(): void {
    this.working = clone(this.pristine);
  }

  get dirty(): boolean {
    return JSON.stringify(this.working) !== JSON.stringify(this.pristine);
  }

  /** Maturity is a view over every loan's installment count. */
  get maturity(): number | null {
    const loans = this.working.debt.loans;
    if (loans.length === 0) return null;
    const n = loans[0].n_installments;
    return loans.every((l) => l.n_installments === n) ? n : null;
  }

  set(path: FieldPath, value: number): void {
    if (!Number.isFinite(value)) {
      throw new Error(`${path}: not a number`);
    }
    const w = this.working;
    switch (path) {
      case "debt.initial_stnfp":
        w.debt.initial_stnfp = value;
        return;
      case "policy.risk_free":
        w.policy.risk_free = value;
        return;
      case "policy.lgd":
        w.policy.lgd = value;
        return;
      case "sim.n":
        w.sim.n = Math.round(value);
        return;
      case "sim.seed":
        w.sim.seed = Math.round(value);
        return;
      case "maturity":
        for (const loan of w.debt.loans) {
          loan.n_installments = Math.round(value);
        }
        return;
      default: {
        const m = /^plan\.noise\.(rev|var|fix|cap)\.(mean|variance)$/.exec(path);
        if (!m) throw new Error(`unknown field ${path}`);
        const slot = m[1] as "rev" | "var" | "fix" | "cap";
        const field = m[2] as "mean" | "variance";
        w.plan.noise[slot][field] = value;
      }
    }
  }

  get(path: FieldPath): number | null {
    const w = this.working;
    switch (path) {
      case "debt.initial_stnfp":
        return w.debt.initial_stnfp;
      case "policy.risk_free":
        return w.policy.risk_free;
      case "policy.lgd":
        return w.policy.lgd;
      case "sim.n":
        return w.sim.n;
      case "sim.seed":
        return w.sim.seed;
      case "maturity":
        return this.maturity;
      default: {
        const m = /^plan\.noise\.(rev|var|fix|cap)\.(mean|variance)$/.exec(path);
        if (!m) throw new Error(`unknown field ${path}`);
        const slot = m[1] as "rev" | "var" | "fix" | "cap";
        return w.plan.noise[slot][m[2] as "mean" | "variance"];
      }
    }
  }
}
