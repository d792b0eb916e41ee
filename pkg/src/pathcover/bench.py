"""Benchmark harness: run algorithm x instance grids and aggregate ratios.

Instances are regenerated from their (k, n, d, i) keys, never stored, and
records are emitted in ascending key order, so a grid run is reproducible
byte-for-byte apart from the timing column.  The optimum of a generated
instance is its planted cover size n; the reported ratio is opt/covered.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import solvers
from .instances import DEFAULT_MASTER_SEED, generate

ALGORITHMS = ("approx1", "approx2")

RECORD_FIELDS = (
    "k",
    "n",
    "d",
    "i",
    "alg",
    "covered",
    "opt",
    "ratio",
    "adds",
    "reps",
    "double_reps",
    "recovers",
    "lookaheads",
    "elapsed_ms",
)

AGGREGATE_FIELDS = ("k", "n", "d", "alg", "mean_ratio", "max_ratio", "mean_ms", "count")


@dataclass(frozen=True)
class ExperimentRecord:
    """One (instance, algorithm) result row."""

    k: int
    n: int
    d: float
    i: int
    algorithm: str
    covered: int
    opt: int
    ratio: float
    op_counts: dict[str, int]
    elapsed_ms: float


@dataclass(frozen=True)
class GridSpec:
    """The experiment grid: every combination of the listed values runs.

    ``approx2`` cells are produced only for k = 4; a spec that requests
    approx2 without k = 4 anywhere is rejected.
    """

    k_values: tuple[int, ...]
    n_values: tuple[int, ...]
    d_values: tuple[float, ...]
    indices: tuple[int, ...]
    algorithms: tuple[str, ...]
    master_seed: int = DEFAULT_MASTER_SEED

    def validate(self) -> None:
        for name, values in (
            ("k", self.k_values),
            ("n", self.n_values),
            ("d", self.d_values),
            ("i", self.indices),
            ("algorithms", self.algorithms),
        ):
            if not values:
                raise ValueError(f"grid value list {name!r} is empty")
        for d in self.d_values:
            if not 0.0 <= d <= 1.0:
                raise ValueError(f"density {d} outside [0, 1]")
        for alg in self.algorithms:
            if alg not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {alg!r}")
        if "approx2" in self.algorithms and 4 not in self.k_values:
            raise ValueError("approx2 requires k = 4 in the grid")

    @staticmethod
    def from_json(data: dict) -> "GridSpec":
        try:
            spec = GridSpec(
                k_values=tuple(data["k"]),
                n_values=tuple(data["n"]),
                d_values=tuple(float(d) for d in data["d"]),
                indices=tuple(data["i"]),
                algorithms=tuple(data["algorithms"]),
                master_seed=int(data.get("master_seed", DEFAULT_MASTER_SEED)),
            )
        except KeyError as exc:
            raise ValueError(f"grid spec missing key {exc.args[0]!r}") from exc
        spec.validate()
        return spec


def _run_cell(args: tuple[int, int, float, int, int, tuple[str, ...]]) -> list[ExperimentRecord]:
    """All algorithm records for one (k, n, d, i) instance."""
    k, n, d, i, master_seed, algorithms = args
    inst = generate(k, n, d, i, master_seed)
    records = []
    for alg in algorithms:
        if alg == "approx2":
            if k != 4:
                continue
            result = solvers.approx2(inst.graph)
        else:
            result = solvers.approx1(inst.graph, k)
        opt = inst.planted_opt
        ratio = opt / result.covered if result.covered else math.inf
        records.append(
            ExperimentRecord(
                k=k,
                n=n,
                d=d,
                i=i,
                algorithm=alg,
                covered=result.covered,
                opt=opt,
                ratio=ratio,
                op_counts=dict(result.op_counts),
                elapsed_ms=result.elapsed * 1000.0,
            )
        )
    return records


def run_grid(spec: GridSpec, workers: int | None = None) -> Iterator[ExperimentRecord]:
    """Stream records for every grid cell in ascending (k, n, d, i) order.

    Cells are independent, so ``workers`` > 1 farms them out to a process
    pool; the emission order is the deterministic key order regardless.
    """
    spec.validate()
    algorithms = tuple(sorted(set(spec.algorithms)))
    cells = [
        (k, n, d, i, spec.master_seed, algorithms)
        for k in sorted(spec.k_values)
        for n in sorted(spec.n_values)
        for d in sorted(spec.d_values)
        for i in sorted(spec.indices)
    ]
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for records in pool.map(_run_cell, cells, chunksize=4):
                yield from records
    else:
        for cell in cells:
            yield from _run_cell(cell)


@dataclass(frozen=True)
class AggregateRow:
    """Per-(k, n, d, algorithm) summary of a record stream."""

    k: int
    n: int
    d: float
    algorithm: str
    mean_ratio: float
    max_ratio: float
    mean_ms: float
    count: int


def aggregate(records: Iterable[ExperimentRecord]) -> list[AggregateRow]:
    """Mean and max ratio plus mean runtime per (k, n, d, algorithm)."""
    groups: dict[tuple, list[ExperimentRecord]] = {}
    for rec in records:
        groups.setdefault((rec.k, rec.n, rec.d, rec.algorithm), []).append(rec)
    rows = []
    for key in sorted(groups):
        recs = groups[key]
        rows.append(
            AggregateRow(
                k=key[0],
                n=key[1],
                d=key[2],
                algorithm=key[3],
                mean_ratio=sum(r.ratio for r in recs) / len(recs),
                max_ratio=max(r.ratio for r in recs),
                mean_ms=sum(r.elapsed_ms for r in recs) / len(recs),
                count=len(recs),
            )
        )
    return rows


def write_records_csv(records: Iterable[ExperimentRecord], path: str) -> int:
    """Write the record CSV; returns the number of rows written."""
    count = 0
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(RECORD_FIELDS)
        for rec in records:
            writer.writerow(
                [
                    rec.k,
                    rec.n,
                    repr(rec.d),
                    rec.i,
                    rec.algorithm,
                    rec.covered,
                    rec.opt,
                    repr(rec.ratio),
                    rec.op_counts.get("add", 0),
                    rec.op_counts.get("rep", 0),
                    rec.op_counts.get("double_rep", 0),
                    rec.op_counts.get("recover", 0),
                    rec.op_counts.get("lookahead", 0),
                    repr(rec.elapsed_ms),
                ]
            )
            count += 1
    return count


def write_aggregate_csv(rows: Sequence[AggregateRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(AGGREGATE_FIELDS)
        for row in rows:
            writer.writerow(
                [
                    row.k,
                    row.n,
                    repr(row.d),
                    row.algorithm,
                    repr(row.mean_ratio),
                    repr(row.max_ratio),
                    repr(row.mean_ms),
                    row.count,
                ]
            )


def read_records_csv(path: str) -> list[ExperimentRecord]:
    """Read a record CSV back (inverse of write_records_csv)."""
    records = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != list(RECORD_FIELDS):
            raise ValueError(f"{path}: unexpected header {reader.fieldnames}")
        for row in reader:
            records.append(
                ExperimentRecord(
                    k=int(row["k"]),
                    n=int(row["n"]),
                    d=float(row["d"]),
                    i=int(row["i"]),
                    algorithm=row["alg"],
                    covered=int(row["covered"]),
                    opt=int(row["opt"]),
                    ratio=float(row["ratio"]),
                    op_counts={
                        "add": int(row["adds"]),
                        "rep": int(row["reps"]),
                        "double_rep": int(row["double_reps"]),
                        "recover": int(row["recovers"]),
                        "lookahead": int(row["lookaheads"]),
                    },
                    elapsed_ms=float(row["elapsed_ms"]),
                )
            )
    return records
