/**
 * Display formatting: rates as percentages, money with separators.
 */

export function fmtRate(value: number | null | undefined, digits = 2): string {
  if (value === null || value === undefined) return "n/a";
  return `${(value * 100).toFixed(digits)}%`;
}

export function fmtMoney(value: number | null | undefined): string {
  if (value === null || value === undefined) return "n/a";
  return value.toLocaleString("en-US", {
    minimumFractionDigits: 2,
    maximumFractionDigits: 2,
  });
}

export function fmtDelta(value: number | null | undefined, digits = 2): string {
  if (value === null || value === undefined) return "n/a";
  const sign = value >= 0 ? "+" : "";
  return `${sign}${(value * 100).toFixed(digits)}pp`;
}

export function fmtProb(value: number | null | undefined): string {
  if (value === null || value === undefined) return "n/a";
  return `${(value * 100).toFixed(2)}%`;
}
