import { describe, expect, it } from "vitest";

import { EditorState } from "../src/state.js";
import type { PresetMap } from "../src/types.js";
import { fixture } from "./helpers.js";

const presets = fixture<PresetMap>("presets.json");

function fresh(): EditorState {
  return new EditorState(presets["case-a"], "case-a");
}

describe("EditorState", () => {
  it("starts clean and tracks edits", () => {
    const state = fresh();
    expect(state.dirty).toBe(false);
    state.set("policy.lgd", 0.3);
    expect(state.dirty).toBe(true);
    expect(state.get("policy.lgd")).toBe(0.3);
  });

  it("maturity edits apply to every loan", () => {
    const state = fresh();
    state.set("maturity", 5);
    expect(state.config.debt.loans.every((l) => l.n_installments === 5)).toBe(true);
    expect(state.maturity).toBe(5);
  });

  it("reset restores the pristine preset exactly", () => {
    const state = fresh();
    state.set("maturity", 5);
    state.set("plan.noise.rev.variance", 0.05);
    state.set("debt.initial_stnfp", 3000);
    state.reset();
    expect(state.dirty).toBe(false);
    expect(state.snapshot()).toEqual(presets["case-a"]);
  });

  it("edits never leak into the pristine copy", () => {
    const state = fresh();
    const before = JSON.stringify(presets["case-a"]);
    state.set("plan.noise.rev.mean", -0.02);
    state.reset();
    expect(JSON.stringify(presets["case-a"])).toBe(before);
    expect(state.get("plan.noise.rev.mean")).toBe(presets["case-a"].plan.noise.rev.mean);
  });

  it("noise paths address each component", () => {
    const state = fresh();
    state.set("plan.noise.fix.variance", 0.002);
    expect(state.config.plan.noise.fix.variance).toBe(0.002);
    expect(state.config.plan.noise.cap.variance).toBe(
      presets["case-a"].plan.noise.cap.variance,
    );
  });

  it("snapshot is detached from the working copy", () => {
    const state = fresh();
    const snap = state.snapshot();
    state.set("policy.lgd", 0.11);
    expect(snap.policy.lgd).toBe(presets["case-a"].policy.lgd);
  });

  it("loading another preset replaces both copies", () => {
    const state = fresh();
    state.set("policy.lgd", 0.5);
    state.loadPreset(presets["case-b"], "case-b");
    expect(state.dirty).toBe(false);
    expect(state.snapshot()).toEqual(presets["case-b"]);
  });

  it("rejects non-numeric values", () => {
    const state = fresh();
    expect(() => state.set("policy.lgd", Number.NaN)).toThrow();
  });
});
