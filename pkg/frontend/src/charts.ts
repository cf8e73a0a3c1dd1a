/**
 * Pure SVG builders for the workbench charts.
 *
 * Every function maps service-provided arrays to an SVG string; nothing is
 * recomputed from the model.  Kept DOM-free so the charts are testable in
 * node.
 */

import type { CurveArrays, EquilibriumReport, FcfSummary } from "./types.js";

export interface ChartGeometry {
  width: number;
  height: number;
  margin: { left: number; right: number; top: number; bottom: number };
}

export const DEFAULT_GEOMETRY: ChartGeometry = {
  width: 560,
  height: 340,
  margin: { left: 52, right: 16, top: 18, bottom: 34 },
};

export interface Scale {
  (value: number): number;
  domain: [number, number];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  return fn;
}

export function linePath(
  xs: number[],
  ys: number[],
  sx: Scale,
  sy: Scale,
): string {
  const parts: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    const cmd = i === 0 ? "M" : "L";
    parts.push(`${cmd}${sx(xs[i]).toFixed(2)},${sy(ys[i]).toFixed(2)}`);
  }
  return parts.join(" ");
}

function axis(sx: Scale, sy: Scale, g: ChartGeometry, ticksX: number[], ticksY: number[], fmtX: (v: number) => string, fmtY: (v: number) => string): string {
  const bottom = g.height - g.margin.bottom;
  const parts = [
    `<line class="axis" x1="${g.margin.left}" y1="${bottom}" x2="${g.width - g.margin.right}" y2="${bottom}"/>`,
    `<line class="axis" x1="${g.margin.left}" y1="${g.margin.top}" x2="${g.margin.left}" y2="${bottom}"/>`,
  ];
  for (const t of ticksX) {
    const x = sx(t).toFixed(2);
    parts.push(`<line class="tick" x1="${x}" y1="${bottom}" x2="${x}" y2="${bottom + 4}"/>`);
    parts.push(`<text class="ticklabel" x="${x}" y="${bottom + 16}" text-anchor="middle">${fmtX(t)}</text>`);
  }
  for (const t of ticksY) {
    const y = sy(t).toFixed(2);
    parts.push(`<line class="tick" x1="${g.margin.left - 4}" y1="${y}" x2="${g.margin.left}" y2="${y}"/>`);
    parts.push(`<text class="ticklabel" x="${g.margin.left - 7}" y="${y}" dy="0.32em" text-anchor="end">${fmtY(t)}</text>`);
  }
  return parts.join("");
}

function ticks(lo: number, hi: number, n: number): number[] {
  const out: number[] = [];
  for (let i = 0; i <= n; i++) out.push(lo + ((hi - lo) * i) / n);
  return out;
}

function svgOpen(g: ChartGeometry, cls: string): string {
  return `<svg class="chart ${cls}" viewBox="0 0 ${g.width} ${g.height}" role="img">`;
}

function marker(x: number, label: string, cls: string, sy: Scale, g: ChartGeometry): string {
  const bottom = g.height - g.margin.bottom;
  return (
    `<line class="marker ${cls}" x1="${x.toFixed(2)}" y1="${g.margin.top}" x2="${x.toFixed(2)}" y2="${bottom}"/>` +
    `<text class="markerlabel ${cls}" x="${(x + 4).toFixed(2)}" y="${g.margin.top + 12}">${label}</text>`
  );
}

/**
 * Required-rate chart: tau(r) with the identity line, PD(r), the fixed
 * points and the negotiation band.  Values above the identity's visible
 * range are clipped by the y-domain, matching how the service flags
 * tau >= 1.
 */
export function tauChart(
  report: EquilibriumReport,
  g: ChartGeometry = DEFAULT_GEOMETRY,
): string {
  const c: CurveArrays = report.curves;
  const sx = linearScale([0, 1], [g.margin.left, g.width - g.margin.right]);
  const sy = linearScale([0, 1], [g.height - g.margin.bottom, g.margin.top]);
  const clippedTau = c.tau.map((t) => Math.min(t, 1));
  const parts = [svgOpen(g, "tau-chart")];
  if (report.negotiation_range) {
    const [lo, hi] = report.negotiation_range;
    parts.push(
      `<rect class="band" x="${sx(lo).toFixed(2)}" y="${g.margin.top}" width="${(sx(hi) - sx(lo)).toFixed(2)}" height="${g.height - g.margin.top - g.margin.bottom}"/>`,
    );
  }
  parts.push(axis(sx, sy, g, ticks(0, 1, 5), ticks(0, 1, 5), (v) => v.toFixed(1), (v) => v.toFixed(1)));
  parts.push(`<path class="identity" d="${linePath([0, 1], [0, 1], sx, sy)}"/>`);
  parts.push(`<path class="pd" d="${linePath(c.rates, c.pd, sx, sy)}"/>`);
  parts.push(`<path class="tau" d="${linePath(c.rates, clippedTau, sx, sy)}"/>`);
  if (report.r_min !== null) {
    parts.push(marker(sx(report.r_min), `r_min ${(report.r_min * 100).toFixed(2)}%`, "r-min", sy, g));
  }
  if (report.r_fix !== null) {
    parts.push(marker(sx(report.r_fix), `r_fix ${(report.r_fix * 100).toFixed(2)}%`, "r-fix", sy, g));
  }
  parts.push("</svg>");
  return parts.join("");
}

/** Expected lender return with the maximiser marked. */
export function returnChart(
  report: EquilibriumReport,
  g: ChartGeometry = DEFAULT_GEOMETRY,
): string {
  const c = report.curves;
  const lo = Math.min(...c.rbar);
  const hi = Math.max(...c.rbar);
  const pad = 0.05 * (hi - lo || 1);
  const sx = linearScale([0, 1], [g.margin.left, g.width - g.margin.right]);
  const sy = linearScale([lo - pad, hi + pad], [g.height - g.margin.bottom, g.margin.top]);
  const parts = [svgOpen(g, "return-chart")];
  parts.push(axis(sx, sy, g, ticks(0, 1, 5), ticks(lo, hi, 4), (v) => v.toFixed(1), (v) => v.toFixed(0)));
  parts.push(`<path class="rbar" d="${linePath(c.rates, c.rbar, sx, sy)}"/>`);
  parts.push(marker(sx(report.r_max), `r_max ${(report.r_max * 100).toFixed(2)}%`, "r-max", sy, g));
  parts.push("</svg>");
  return parts.join("");
}

/** FCF fan chart: percentile ribbons plus a handful of raw paths. */
export function fanChart(
  summary: FcfSummary,
  g: ChartGeometry = DEFAULT_GEOMETRY,
  maxPeriod = 12,
): string {
  const cut = summary.periods.filter((p) => p <= maxPeriod).length;
  const periods = summary.periods.slice(0, cut);
  const p5 = summary.bands.p5.slice(0, cut);
  const p95 = summary.bands.p95.slice(0, cut);
  const p25 = summary.bands.p25.slice(0, cut);
  const p75 = summary.bands.p75.slice(0, cut);
  const lo = Math.min(...p5);
  const hi = Math.max(...p95);
  const pad = 0.05 * (hi - lo || 1);
  const sx = linearScale([periods[0], periods[periods.length - 1]], [g.margin.left, g.width - g.margin.right]);
  const sy = linearScale([lo - pad, hi + pad], [g.height - g.margin.bottom, g.margin.top]);
  const ribbon = (upper: number[], lower: number[], cls: string): string => {
    const up = linePath(periods, upper, sx, sy);
    const down = periods
      .map((p, i) => [p, lower[i]] as const)
      .reverse()
      .map(([p, v]) => `L${sx(p).toFixed(2)},${sy(v).toFixed(2)}`)
      .join(" ");
    return `<path class="${cls}" d="${up} ${down} Z"/>`;
  };
  const parts = [svgOpen(g, "fan-chart")];
  parts.push(axis(sx, sy, g, periods, ticks(lo, hi, 4), (v) => String(v), (v) => v.toFixed(0)));
  parts.push(ribbon(p95, p5, "fan-outer"));
  parts.push(ribbon(p75, p25, "fan-inner"));
  for (const sample of summary.samples.slice(0, 12)) {
    parts.push(`<path class="fan-sample" d="${linePath(periods, sample.slice(0, cut), sx, sy)}"/>`);
  }
  parts.push(`<path class="fan-mean" d="${linePath(periods, summary.mean.slice(0, cut), sx, sy)}"/>`);
  parts.push("</svg>");
  return parts.join("");
}
