/**
 * Chart layout: scales, axes, gridlines, series polylines, legend.
 *
 * The layout is fixed (640x480, pinned margins) and every coordinate is
 * derived from the input data alone, keeping renders reproducible.
 */

import { AggregateRow } from "./csv.js";
import { DrawOp } from "./primitives.js";
import { rasterize } from "./raster.js";
import { buildSeries, ChartKind, METRIC_LABEL, Series } from "./series.js";
import { toSvg } from "./svg.js";

export const WIDTH = 640;
export const HEIGHT = 480;
const MARGIN = { left: 64, right: 176, top: 36, bottom: 48 };

const AXIS_COLOR = "#000000";
const GRID_COLOR = "#d9d9d9";

interface Scale {
  lo: number;
  hi: number;
  apply(v: number): number;
}

function makeScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  const f = (outHi - outLo) / (hi - lo);
  return { lo, hi, apply: (v: number) => outLo + (v - lo) * f };
}

/** Round ticks covering [lo, hi]: a 1/2/5 step, about `count` of them. */
export function niceTicks(lo: number, hi: number, count = 5): number[] {
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  const rawStep = (hi - lo) / Math.max(1, count - 1);
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (mag * m >= rawStep) {
      step = mag * m;
      break;
    }
  }
  const ticks: number[] = [];
  let tick = Math.ceil(lo / step) * step;
  for (; tick <= hi + step * 1e-9; tick += step) {
    ticks.push(Math.abs(tick) < step * 1e-9 ? 0 : tick);
  }
  return ticks;
}

function formatTick(value: number): string {
  if (value === 0) {
    return "0";
  }
  if (Math.abs(value) >= 1000) {
    return String(Math.round(value));
  }
  const text = value.toPrecision(3);
  return text.includes(".") ? text.replace(/\.?0+$/, "") : text;
}

export function chartOps(rows: AggregateRow[], kind: ChartKind): DrawOp[] {
  const series = buildSeries(rows, kind);
  const xs = series.flatMap((s) => s.points.map((p) => p.x));
  const ys = series.flatMap((s) => s.points.map((p) => p.y));
  if (xs.length === 0) {
    throw new Error(`no data points for chart kind ${kind}`);
  }

  const plotX0 = MARGIN.left;
  const plotX1 = WIDTH - MARGIN.right;
  const plotY0 = MARGIN.top;
  const plotY1 = HEIGHT - MARGIN.bottom;

  const ySpread = Math.max(...ys) - Math.min(...ys);
  const yPad = ySpread === 0 ? 0.5 : ySpread * 0.06;
  const xScale = makeScale(Math.min(...xs), Math.max(...xs), plotX0, plotX1);
  const yScale = makeScale(
    Math.min(...ys) - yPad,
    Math.max(...ys) + yPad,
    plotY1,
    plotY0,
  );

  const ops: DrawOp[] = [];

  for (const tick of niceTicks(xScale.lo, xScale.hi, 6)) {
    const x = xScale.apply(tick);
    ops.push({ op: "line", x1: x, y1: plotY0, x2: x, y2: plotY1, color: GRID_COLOR });
    ops.push({ op: "line", x1: x, y1: plotY1, x2: x, y2: plotY1 + 4, color: AXIS_COLOR });
    ops.push({
      op: "text", x, y: plotY1 + 16, text: formatTick(tick),
      color: AXIS_COLOR, anchor: "middle",
    });
  }
  for (const tick of niceTicks(yScale.lo, yScale.hi, 6)) {
    const y = yScale.apply(tick);
    ops.push({ op: "line", x1: plotX0, y1: y, x2: plotX1, y2: y, color: GRID_COLOR });
    ops.push({ op: "line", x1: plotX0 - 4, y1: y, x2: plotX0, y2: y, color: AXIS_COLOR });
    ops.push({
      op: "text", x: plotX0 - 7, y: y + 3, text: formatTick(tick),
      color: AXIS_COLOR, anchor: "end",
    });
  }

  // axes on top of the grid
  ops.push({ op: "line", x1: plotX0, y1: plotY0, x2: plotX0, y2: plotY1, color: AXIS_COLOR });
  ops.push({ op: "line", x1: plotX0, y1: plotY1, x2: plotX1, y2: plotY1, color: AXIS_COLOR });

  ops.push({
    op: "text", x: (plotX0 + plotX1) / 2, y: plotY0 - 14,
    text: METRIC_LABEL[kind], color: AXIS_COLOR, anchor: "middle",
  });
  ops.push({
    op: "text", x: (plotX0 + plotX1) / 2, y: plotY1 + 34,
    text: "edge density d", color: AXIS_COLOR, anchor: "middle",
  });

  for (const s of series) {
    const pts = s.points.map((p) => ({ x: xScale.apply(p.x), y: yScale.apply(p.y) }));
    if (pts.length > 1) {
      ops.push({ op: "polyline", points: pts, color: s.color, dashed: s.dashed, thick: true });
    }
    // plus-markers keep isolated points (e.g. a single-density chart) visible
    for (const p of pts) {
      ops.push({ op: "line", x1: p.x - 2, y1: p.y, x2: p.x + 2, y2: p.y, color: s.color });
      ops.push({ op: "line", x1: p.x, y1: p.y - 2, x2: p.x, y2: p.y + 2, color: s.color });
    }
  }

  ops.push(...legendOps(series, plotX1 + 14, plotY0 + 8));
  return ops;
}

function legendOps(series: Series[], x: number, yTop: number): DrawOp[] {
  const ops: DrawOp[] = [];
  series.forEach((s, idx) => {
    const y = yTop + idx * 18;
    ops.push({
      op: "line", x1: x, y1: y, x2: x + 22, y2: y,
      color: s.color, dashed: s.dashed, thick: true,
    });
    ops.push({
      op: "text", x: x + 28, y: y + 3, text: s.label,
      color: AXIS_COLOR, anchor: "start",
    });
  });
  return ops;
}

export interface RenderResult {
  png: Buffer;
  svg: string;
}

export function renderChart(rows: AggregateRow[], kind: ChartKind): RenderResult {
  const ops = chartOps(rows, kind);
  return {
    png: rasterize(WIDTH, HEIGHT, ops),
    svg: toSvg(WIDTH, HEIGHT, ops),
  };
}
