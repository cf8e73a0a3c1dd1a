/**
 * Workbench wiring: editor panel, charts, what-if comparison.
 *
 * All numbers on screen come from the service; this file only moves them
 * between inputs, requests and renderers.  Solves run on the explicit
 * "Run" buttons, one in flight per panel, stale responses dropped.
 */

import { ApiClient, LatestRequestGate, ServiceError } from "./api.js";
import { fanChart, returnChart, tauChart } from "./charts.js";
import { compareRows, verdictBadge } from "./compare.js";
import { fmtProb, fmtRate } from "./format.js";
import { EditorState, type FieldPath } from "./state.js";
import type { EquilibriumReport, PresetMap, ScenarioConfig } from "./types.js";

/** API origin: same origin by default, overridable with ?api=http://host:port */
function resolveBaseUrl(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  return override ? override.replace(/\/$/, "") : "";
}

const api = new ApiClient(resolveBaseUrl());
const solveGate = new LatestRequestGate();
const compareGate = new LatestRequestGate();

const NOISE_FIELDS: Array<{ path: FieldPath; label: string }> = [
  { path: "plan.noise.rev.mean", label: "revenue bias" },
  { path: "plan.noise.rev.variance", label: "revenue variance" },
  { path: "plan.noise.var.mean", label: "var-cost bias" },
  { path: "plan.noise.var.variance", label: "var-cost variance" },
  { path: "plan.noise.fix.mean", label: "fixed-cost bias" },
  { path: "plan.noise.fix.variance", label: "fixed-cost variance" },
  { path: "plan.noise.cap.mean", label: "capex bias" },
  { path: "plan.noise.cap.variance", label: "capex variance" },
];

const SCALAR_FIELDS: Array<{ path: FieldPath; label: string; step: string }> = [
  { path: "debt.initial_stnfp", label: "initial STNFP", step: "100" },
  { path: "maturity", label: "loan maturity (installments)", step: "1" },
  { path: "policy.lgd", label: "LGD", step: "0.05" },
  { path: "policy.risk_free", label: "risk-free rate", step: "0.005" },
  { path: "sim.n", label: "paths N", step: "100" },
  { path: "sim.seed", label: "seed", step: "1" },
];

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function input(path: FieldPath, label: string, step: string): string {
  return `<label class="field">${label}
    <input type="number" step="${step}" data-path="${path}">
  </label>`;
}

function renderEditor(): void {
  el("scalar-fields").innerHTML = SCALAR_FIELDS.map((f) =>
    input(f.path, f.label, f.step),
  ).join("");
  el("noise-fields").innerHTML = NOISE_FIELDS.map((f) =>
    input(f.path, f.label, "0.005"),
  ).join("");
  document.querySelectorAll<HTMLInputElement>("#editor input[data-path]").forEach(
    (node) => {
      node.addEventListener("change", () => {
        const value = Number(node.value);
        if (Number.isFinite(value)) {
          state.set(node.dataset.path as FieldPath, value);
          updateDirty();
        }
      });
    },
  );
}

function syncEditorInputs(): void {
  document.querySelectorAll<HTMLInputElement>("#editor input[data-path]").forEach(
    (node) => {
      const value = state.get(node.dataset.path as FieldPath);
      node.value = value === null ? "" : String(value);
    },
  );
  updateDirty();
}

function updateDirty(): void {
  el("dirty-flag").textContent = state.dirty ? "edited" : "preset";
}

function renderReport(report: EquilibriumReport): void {
  el("tau-chart").innerHTML = tauChart(report);
  el("return-chart").innerHTML = returnChart(report);
  const badge = verdictBadge(report);
  const badgeEl = el("verdict-badge");
  badgeEl.textContent = badge;
  badgeEl.className = `badge ${badge}`;
  el("r-min").textContent = fmtRate(report.r_min, 4);
  el("r-fix").textContent = fmtRate(report.r_fix, 4);
  el("r-max").textContent = fmtRate(report.r_max, 4);
  el("pd-at-rmin").textContent = fmtProb(report.pd_at_r_min);
  const range = report.negotiation_range;
  el("negotiation").textContent = range
    ? `${fmtRate(range[0], 4)} – ${fmtRate(range[1], 4)}`
    : "none";
}

function setStatus(text: string): void {
  el("status").textContent = text;
}

async function runSolve(): Promise<void> {
  const config = state.snapshot();
  setStatus("solving…");
  try {
    const report = await solveGate.run(() => api.solve(config));
    if (report === null) return; // superseded by a newer run
    renderReport(report);
    const fan = await api.fcf(config);
    el("fan-chart").innerHTML = fanChart(fan);
    setStatus("done");
  } catch (err) {
    setStatus(err instanceof ServiceError ? `service: ${err.message}` : String(err));
  }
}

async function runCompare(): Promise<void> {
  if (!pinnedBase) {
    setStatus("pin a base scenario first");
    return;
  }
  const base = pinnedBase;
  const variant = state.snapshot();
  setStatus("comparing…");
  try {
    const report = await compareGate.run(() => api.compare(base, variant));
    if (report === null) return;
    const rows = compareRows(report)
      .map(
        (r) =>
          `<tr><th>${r.label}</th><td>${r.base}</td><td>${r.variant}</td><td>${r.delta}</td></tr>`,
      )
      .join("");
    el("compare-table").innerHTML =
      `<tr><th></th><th>base</th><th>variant</th><th>delta</th></tr>${rows}`;
    const badge = verdictBadge(report.variant);
    const badgeEl = el("variant-badge");
    badgeEl.textContent = badge;
    badgeEl.className = `badge ${badge}`;
    setStatus("done");
  } catch (err) {
    setStatus(err instanceof ServiceError ? `service: ${err.message}` : String(err));
  }
}

let presets: PresetMap = {};
let state = new EditorState(
  {
    plan: {
      rev0: 3000, x_rev: 0.1, x_var: 0.3, fixed_cost_base: 400, x_tax: 0.3,
      x_wc: 0.01, capex_base: 40, t_ss: 5,
      noise: {
        rev: { mean: -0.1, variance: 0.1 },
        var: { mean: 0.05, variance: 0.02 },
        fix: { mean: 0.05, variance: 0.01 },
        cap: { mean: 0.05, variance: 0.01 },
      },
    },
    debt: { initial_stnfp: 2000, loans: [] },
    policy: { risk_free: 0.01, lgd: 0.6 },
    sim: { n: 2500, seed: 18, horizon: 55, default_mode: "literal" },
    alpha: 1.01,
  },
  "case-a",
);
let pinnedBase: ScenarioConfig | null = null;

async function boot(): Promise<void> {
  renderEditor();
  try {
    presets = await api.presets();
  } catch (err) {
    setStatus(`cannot reach service: ${String(err)}`);
    return;
  }
  const select = el<HTMLSelectElement>("preset-select");
  select.innerHTML = Object.keys(presets)
    .map((name) => `<option value="${name}">${name}</option>`)
    .join("");
  select.addEventListener("change", () => {
    state.loadPreset(presets[select.value], select.value);
    syncEditorInputs();
  });
  state.loadPreset(presets[select.value] ?? presets["case-a"], select.value || "case-a");
  syncEditorInputs();

  el("run-button").addEventListener("click", () => void runSolve());
  el("reset-button").addEventListener("click", () => {
    state.reset();
    syncEditorInputs();
  });
  el("pin-button").addEventListener("click", () => {
    pinnedBase = state.snapshot();
    el("pin-label").textContent = `base pinned (${state.presetName}${state.dirty ? ", edited" : ""})`;
  });
  el("compare-button").addEventListener("click", () => void runCompare());
  setStatus("ready");
}

void boot();
