/**
 * Turn aggregate rows into plottable series for the four chart kinds.
 *
 * Every series is one (k, n) group: x is the edge density d, y the
 * chosen metric.  Colors are keyed by n with red reserved for the
 * largest n and purple for the smallest; the five-operation algorithm
 * is drawn dashed so the two solvers stay distinguishable per color.
 */

import { AggregateRow } from "./csv.js";

export type ChartKind = "ratio_mean" | "ratio_max" | "ratio_diff" | "runtime";

export const CHART_KINDS: ChartKind[] = [
  "ratio_mean",
  "ratio_max",
  "ratio_diff",
  "runtime",
];

export interface Series {
  label: string;
  color: string;
  dashed: boolean;
  points: { x: number; y: number }[];
}

const RED = "#d62728";
const PURPLE = "#9467bd";
const MIDDLE = ["#1f77b4", "#2ca02c", "#ff7f0e", "#17becf", "#8c564b"];

/** Map each distinct n to a color: red = largest, purple = smallest. */
export function colorByN(ns: number[]): Map<number, string> {
  const sorted = [...new Set(ns)].sort((a, b) => b - a);
  const colors = new Map<number, string>();
  sorted.forEach((n, idx) => {
    if (idx === 0) {
      colors.set(n, RED);
    } else if (idx === sorted.length - 1) {
      colors.set(n, PURPLE);
    } else {
      colors.set(n, MIDDLE[(idx - 1) % MIDDLE.length]);
    }
  });
  return colors;
}

export const METRIC_LABEL: Record<ChartKind, string> = {
  ratio_mean: "mean performance ratio",
  ratio_max: "worst performance ratio",
  ratio_diff: "mean ratio difference (approx1 - approx2)",
  runtime: "mean running time (ms)",
};

function sortedPoints(points: { x: number; y: number }[]) {
  return [...points].sort((a, b) => a.x - b.x);
}

function groupBy<T>(items: T[], key: (item: T) => string): Map<string, T[]> {
  const groups = new Map<string, T[]>();
  for (const item of items) {
    const k = key(item);
    const bucket = groups.get(k);
    if (bucket) {
      bucket.push(item);
    } else {
      groups.set(k, [item]);
    }
  }
  return groups;
}

export function buildSeries(rows: AggregateRow[], kind: ChartKind): Series[] {
  const colors = colorByN(rows.map((r) => r.n));
  const series: Series[] = [];

  if (kind === "ratio_diff") {
    const groups = groupBy(rows, (row) => `${row.k}|${row.n}`);
    for (const key of [...groups.keys()].sort()) {
      const group = groups.get(key)!;
      const byD = new Map<number, { a1?: number; a2?: number }>();
      for (const row of group) {
        const cell = byD.get(row.d) ?? {};
        if (row.alg === "approx1") cell.a1 = row.meanRatio;
        if (row.alg === "approx2") cell.a2 = row.meanRatio;
        byD.set(row.d, cell);
      }
      const points: { x: number; y: number }[] = [];
      for (const [d, cell] of byD) {
        if (cell.a1 === undefined || cell.a2 === undefined) {
          throw new Error(
            `ratio_diff needs both algorithms for k=${group[0].k} n=${group[0].n} d=${d}`,
          );
        }
        points.push({ x: d, y: cell.a1 - cell.a2 });
      }
      series.push({
        label: `k=${group[0].k} n=${group[0].n}`,
        color: colors.get(group[0].n)!,
        dashed: false,
        points: sortedPoints(points),
      });
    }
    return series;
  }

  const metric = (row: AggregateRow): number =>
    kind === "ratio_mean"
      ? row.meanRatio
      : kind === "ratio_max"
        ? row.maxRatio
        : row.meanMs;

  const groups = groupBy(rows, (row) => `${row.k}|${row.n}|${row.alg}`);
  for (const key of [...groups.keys()].sort()) {
    const group = groups.get(key)!;
    series.push({
      label: `k=${group[0].k} n=${group[0].n} ${group[0].alg}`,
      color: colors.get(group[0].n)!,
      dashed: group[0].alg === "approx2",
      points: sortedPoints(group.map((row) => ({ x: row.d, y: metric(row) }))),
    });
  }
  if (series.length === 0) {
    throw new Error(`no series to draw for chart kind ${kind}`);
  }
  return series;
}
