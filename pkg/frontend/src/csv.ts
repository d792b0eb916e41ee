/**
 * Strict reader for the benchmark aggregate CSV.
 *
 * The producing harness pins the schema, so anything unexpected is a
 * schema mismatch error rather than something to paper over.
 */

export interface AggregateRow {
  k: number;
  n: number;
  d: number;
  alg: string;
  meanRatio: number;
  maxRatio: number;
  meanMs: number;
  count: number;
}

export const AGGREGATE_HEADER = "k,n,d,alg,mean_ratio,max_ratio,mean_ms,count";

export function parseAggregateCsv(text: string): AggregateRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error("aggregate CSV is empty");
  }
  if (lines[0] !== AGGREGATE_HEADER) {
    throw new Error(
      `aggregate CSV header mismatch: expected "${AGGREGATE_HEADER}", got "${lines[0]}"`,
    );
  }
  const rows: AggregateRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== 8) {
      throw new Error(`line ${i + 1}: expected 8 fields, got ${parts.length}`);
    }
    const numeric = (field: string, label: string): number => {
      const value = Number(field);
      if (Number.isNaN(value)) {
        throw new Error(`line ${i + 1}: ${label} is not a number: "${field}"`);
      }
      return value;
    };
    rows.push({
      k: numeric(parts[0], "k"),
      n: numeric(parts[1], "n"),
      d: numeric(parts[2], "d"),
      alg: parts[3],
      meanRatio: numeric(parts[4], "mean_ratio"),
      maxRatio: numeric(parts[5], "max_ratio"),
      meanMs: numeric(parts[6], "mean_ms"),
      count: numeric(parts[7], "count"),
    });
  }
  if (rows.length === 0) {
    throw new Error("aggregate CSV has a header but no rows");
  }
  return rows;
}
