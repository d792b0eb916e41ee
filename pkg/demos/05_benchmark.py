"""A desk-scale benchmark: run a grid, aggregate, locate the hard regime.

Mean ratios peak where the noise density is near 1/n: enough extra edges
to mislead the local search, not enough to make covers easy everywhere.

Run with:  python demos/05_benchmark.py   (about a minute)
"""

from pathcover import GridSpec, aggregate, run_grid
from pathcover.bench import write_aggregate_csv, write_records_csv

spec = GridSpec(
    k_values=(4,),
    n_values=(50,),
    d_values=(0.0, 0.005, 0.01, 0.02, 0.04),
    indices=tuple(range(10)),
    algorithms=("approx1", "approx2"),
    master_seed=1,
)

records = list(run_grid(spec))
write_records_csv(records, "/tmp/demo_records.csv")
rows = aggregate(records)
write_aggregate_csv(rows, "/tmp/demo_aggregate.csv")

print("   d      alg      mean    max")
for row in rows:
    print(f" {row.d:6.3f}  {row.algorithm}  {row.mean_ratio:6.4f}  {row.max_ratio:6.4f}")

peak = max(rows, key=lambda r: r.mean_ratio)
print(f"\nhardest cell: d={peak.d} ({peak.algorithm}), mean ratio {peak.mean_ratio:.4f}")
print("csv written to /tmp/demo_records.csv and /tmp/demo_aggregate.csv")
