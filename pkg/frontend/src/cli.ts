#!/usr/bin/env node
/**
 * CLI: render a benchmark aggregate CSV as a line chart.
 *
 *   pathcover-charts render --in agg.csv --kind ratio_mean --out fig.png
 *
 * Writes both the PNG named by --out and an SVG next to it (same name,
 * .svg extension).
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { renderChart } from "./chart.js";
import { parseAggregateCsv } from "./csv.js";
import { CHART_KINDS, ChartKind } from "./series.js";

const USAGE =
  "usage: pathcover-charts render --in <aggregate.csv> --kind " +
  `<${CHART_KINDS.join("|")}> --out <figure.png>`;

function parseArgs(argv: string[]): { input: string; kind: ChartKind; out: string } {
  if (argv[0] !== "render") {
    throw new Error(USAGE);
  }
  const flags = new Map<string, string>();
  for (let i = 1; i < argv.length; i += 2) {
    const key = argv[i];
    const value = argv[i + 1];
    if (!key.startsWith("--") || value === undefined) {
      throw new Error(USAGE);
    }
    flags.set(key.slice(2), value);
  }
  const input = flags.get("in");
  const kind = flags.get("kind");
  const out = flags.get("out");
  if (!input || !kind || !out) {
    throw new Error(USAGE);
  }
  if (!(CHART_KINDS as string[]).includes(kind)) {
    throw new Error(`unknown chart kind "${kind}"; expected one of ${CHART_KINDS.join(", ")}`);
  }
  return { input, kind: kind as ChartKind, out };
}

export function run(argv: string[]): number {
  let args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(err instanceof Error ? err.message : String(err));
    return 2;
  }
  try {
    const rows = parseAggregateCsv(fs.readFileSync(args.input, "utf-8"));
    const { png, svg } = renderChart(rows, args.kind);
    const svgPath = args.out.replace(/\.png$/i, "") + ".svg";
    fs.writeFileSync(args.out, png);
    fs.writeFileSync(svgPath, svg);
    console.log(`wrote ${args.out} and ${svgPath}`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  path.resolve(process.argv[1]) === new URL(import.meta.url).pathname;

if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
