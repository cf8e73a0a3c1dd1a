import { describe, expect, it } from "vitest";

import { ApiClient, LatestRequestGate, ServiceError } from "../src/api.js";
import type { EquilibriumReport, PresetMap } from "../src/types.js";
import { bodyMaturity, fakeFetch, fixture } from "./helpers.js";

const presets = fixture<PresetMap>("presets.json");
const solveA = fixture<EquilibriumReport>("solve_case_a.json");
const solve5y = fixture<EquilibriumReport>("solve_case_a_5y.json");

describe("ApiClient", () => {
  it("posts the scenario and returns the report", async () => {
    const fetchFn = fakeFetch([
      { match: (url) => url.endsWith("/api/scenario/solve"), payload: solveA },
    ]);
    const client = new ApiClient("", fetchFn);
    const report = await client.solve(presets["case-a"]);
    expect(report.r_min).toBe(solveA.r_min);
    expect(fetchFn.calls).toEqual(["/api/scenario/solve"]);
  });

  it("routes by request body", async () => {
    const fetchFn = fakeFetch([
      {
        match: (url, body) => url.endsWith("/solve") && bodyMaturity(body) === 5,
        payload: solve5y,
      },
      { match: (url) => url.endsWith("/solve"), payload: solveA },
    ]);
    const client = new ApiClient("", fetchFn);
    const base = await client.solve(presets["case-a"]);
    const cfg5 = structuredClone(presets["case-a"]);
    cfg5.debt.loans[0].n_installments = 5;
    const fiveYear = await client.solve(cfg5);
    expect(base.r_min).toBe(solveA.r_min);
    expect(fiveYear.r_min).toBe(solve5y.r_min);
  });

  it("surfaces service errors with status and message", async () => {
    const fetchFn = fakeFetch([
      {
        match: (url) => url.endsWith("/solve"),
        payload: { error: "sim.n: must be >= 1" },
        status: 400,
      },
    ]);
    const client = new ApiClient("", fetchFn);
    await expect(client.solve(presets["case-a"])).rejects.toThrowError(ServiceError);
    await expect(client.solve(presets["case-a"])).rejects.toMatchObject({
      status: 400,
      message: "sim.n: must be >= 1",
    });
  });
});

describe("LatestRequestGate", () => {
  it("delivers the latest response and discards superseded ones", async () => {
    const gate = new LatestRequestGate();
    let releaseFirst!: (v: string) => void;
    const first = gate.run(
      () => new Promise<string>((resolve) => (releaseFirst = resolve)),
    );
    const second = gate.run(() => Promise.resolve("second"));
    releaseFirst("first");
    expect(await second).toBe("second");
    expect(await first).toBeNull(); // stale: a newer request started
  });

  it("cancel invalidates in-flight work", async () => {
    const gate = new LatestRequestGate();
    const pending = gate.run(() => Promise.resolve("value"));
    gate.cancel();
    expect(await pending).toBeNull();
  });

  it("sequential runs all deliver", async () => {
    const gate = new LatestRequestGate();
    expect(await gate.run(() => Promise.resolve(1))).toBe(1);
    expect(await gate.run(() => Promise.resolve(2))).toBe(2);
  });
});
