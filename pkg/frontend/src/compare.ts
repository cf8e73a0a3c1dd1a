/**
 * What-if panel model: rows for the base/variant table, service-provided
 * deltas, and the sustainability badge.
 */

import type { CompareReport, EquilibriumReport } from "./types.js";
import { fmtDelta, fmtProb, fmtRate } from "./format.js";

export interface CompareRow {
  label: string;
  base: string;
  variant: string;
  delta: string;
}

export function verdictBadge(report: EquilibriumReport): "sustainable" | "unsustainable" {
  return report.verdict === "equilibrium" ? "sustainable" : "unsustainable";
}

export function compareRows(report: CompareReport): CompareRow[] {
  const { base, variant, deltas } = report;
  return [
    {
      label: "r_min",
      base: fmtRate(base.r_min, 4),
      variant: fmtRate(variant.r_min, 4),
      delta: fmtDelta(deltas.r_min, 4),
    },
    {
      label: "r_fix",
      base: fmtRate(base.r_fix, 4),
      variant: fmtRate(variant.r_fix, 4),
      delta: fmtDelta(deltas.r_fix, 4),
    },
    {
      label: "r_max",
      base: fmtRate(base.r_max, 4),
      variant: fmtRate(variant.r_max, 4),
      delta: fmtDelta(deltas.r_max, 4),
    },
    {
      label: "PD(r_min)",
      base: fmtProb(base.pd_at_r_min),
      variant: fmtProb(variant.pd_at_r_min),
      delta: "",
    },
  ];
}

/** Marker movement between two solves, as provided by the service deltas. */
export function markerShift(report: CompareReport): number | null {
  return report.deltas.r_min;
}
