/**
 * Workbench acceptance: the editor/solve round-trip against recorded
 * service responses.
 *
 * - shortening the loan maturity 10 -> 5 and re-solving moves the r_min
 *   marker up by exactly the delta the service reports;
 * - resetting to the preset reproduces the service report values exactly;
 * - a variant with no equilibrium renders the "unsustainable" badge.
 */

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { compareRows, markerShift, verdictBadge } from "../src/compare.js";
import { fmtRate } from "../src/format.js";
import { EditorState } from "../src/state.js";
import type { CompareReport, EquilibriumReport, PresetMap } from "../src/types.js";
import { bodyMaturity, fakeFetch, fixture } from "./helpers.js";

const presets = fixture<PresetMap>("presets.json");
const solveA = fixture<EquilibriumReport>("solve_case_a.json");
const solve5y = fixture<EquilibriumReport>("solve_case_a_5y.json");
const compareFx = fixture<CompareReport>("compare_maturity.json");
const noEq = fixture<EquilibriumReport>("solve_unsustainable.json");

function serviceStub() {
  return fakeFetch([
    {
      match: (url, body) =>
        url.endsWith("/api/scenario/solve") && bodyMaturity(body) === 5,
      payload: solve5y,
    },
    {
      match: (url, body) =>
        url.endsWith("/api/scenario/solve") &&
        (body as { debt: { initial_stnfp: number } }).debt.initial_stnfp === 60000,
      payload: noEq,
    },
    { match: (url) => url.endsWith("/api/scenario/solve"), payload: solveA },
    { match: (url) => url.endsWith("/api/scenario/compare"), payload: compareFx },
  ]);
}

describe("maturity what-if round-trip", () => {
  it("re-solve after editing maturity moves r_min up by the service delta", async () => {
    const api = new ApiClient("", serviceStub());
    const state = new EditorState(presets["case-a"], "case-a");

    const before = await api.solve(state.snapshot());
    state.set("maturity", 5);
    const after = await api.solve(state.snapshot());

    expect(before.r_min).toBe(solveA.r_min);
    expect(after.r_min).toBe(solve5y.r_min);
    const markerMove = (after.r_min ?? 0) - (before.r_min ?? 0);
    expect(markerMove).toBeGreaterThan(0);
    // exactly the delta the service computed for the same pair
    expect(markerMove).toBeCloseTo(compareFx.deltas.r_min ?? 0, 12);
    expect(markerShift(compareFx)).toBe(compareFx.deltas.r_min);
  });

  it("comparison panel shows the same numbers side by side", () => {
    const rows = compareRows(compareFx);
    const rMinRow = rows.find((r) => r.label === "r_min");
    expect(rMinRow).toBeDefined();
    expect(rMinRow?.base).toBe(fmtRate(solveA.r_min, 4));
    expect(rMinRow?.variant).toBe(fmtRate(solve5y.r_min, 4));
    expect(rMinRow?.delta.startsWith("+")).toBe(true);
  });
});

describe("preset reset", () => {
  it("reset re-solve reproduces the preset report exactly", async () => {
    const api = new ApiClient("", serviceStub());
    const state = new EditorState(presets["case-a"], "case-a");

    state.set("maturity", 5);
    state.set("plan.noise.rev.variance", 0.07);
    state.reset();
    expect(state.dirty).toBe(false);

    const report = await api.solve(state.snapshot());
    expect(report.r_min).toBe(solveA.r_min);
    expect(report.r_fix).toBe(solveA.r_fix);
    expect(report.r_max).toBe(solveA.r_max);
    expect(report.curves).toEqual(solveA.curves);
  });
});

describe("unsustainable verdict", () => {
  it("a no-equilibrium variant renders the unsustainable badge", async () => {
    const api = new ApiClient("", serviceStub());
    const state = new EditorState(presets["case-a"], "case-a");
    state.set("debt.initial_stnfp", 60000);

    const report = await api.solve(state.snapshot());
    expect(report.verdict).toBe("no-equilibrium");
    expect(report.r_min).toBeNull();
    expect(verdictBadge(report)).toBe("unsustainable");
    expect(verdictBadge(solveA)).toBe("sustainable");
  });
});
