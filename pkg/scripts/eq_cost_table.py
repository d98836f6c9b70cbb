#!/usr/bin/env python3
"""Measure the cost of deciding structural equality two ways.

For every ordered pair of closed SF normal forms up to a size cap this script
runs the in-calculus equality program ``eq`` and the word-equality Turing
machine on the corresponding Polish pair, then reports reduction steps and
machine steps grouped by combined input size.  The table makes the scaling
story concrete: both deciders stay comfortably polynomial on the benchmark
domain, and the machine stays under its declared quadratic bound.

Usage:
    python scripts/eq_cost_table.py [--max-size 5] [--budget 1000000] [--tsv]

Output columns (one row per combined Polish length n = |w1| + |w2|):
    n        combined Polish length of the pair
    pairs    number of ordered pairs in the bucket
    eq-min/eq-mean/eq-max     reduction steps used by the eq program
    tm-min/tm-mean/tm-max     Turing machine steps on "w1#w2"
    bound    declared machine step bound 2*m*m + 8*m + 8 with m = n + 1
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sfcalc.models import enumerate_normal_forms
from sfcalc.reduction import normalize
from sfcalc.stdlib import build_catalog
from sfcalc.syntax import to_polish
from sfcalc.terms import App, Calculus
from sfcalc.turing import EQUALITY_MACHINE, equality_step_bound, run_machine


@dataclass(frozen=True)
class TableConfig:
    max_size: int = 5
    budget: int = 1_000_000
    tsv: bool = False


@dataclass
class Bucket:
    pairs: int = 0
    eq_steps: list[int] | None = None
    tm_steps: list[int] | None = None

    def __post_init__(self) -> None:
        self.eq_steps = []
        self.tm_steps = []


def collect(config: TableConfig) -> dict[int, Bucket]:
    calc = Calculus.SF
    eq = build_catalog(calc)["eq"].body
    forms = enumerate_normal_forms(calc, config.max_size)
    buckets: dict[int, Bucket] = {}
    for a in forms:
        wa = to_polish(a)
        for b in forms:
            wb = to_polish(b)
            outcome = normalize(App(App(eq, a), b), calc, budget=config.budget)
            if not outcome.is_normal:
                raise RuntimeError(
                    f"budget exhausted on eq {wa} {wb}; raise --budget"
                )
            run = run_machine(EQUALITY_MACHINE, f"{wa}#{wb}", budget=config.budget)
            assert run.status in ("accept", "reject"), run
            assert (run.status == "accept") == (a == b), (wa, wb)
            bucket = buckets.setdefault(len(wa) + len(wb), Bucket())
            bucket.pairs += 1
            bucket.eq_steps.append(outcome.steps_taken)
            bucket.tm_steps.append(run.steps)
    return buckets


def emit(buckets: dict[int, Bucket], config: TableConfig, out) -> None:
    header = (
        "n", "pairs",
        "eq-min", "eq-mean", "eq-max",
        "tm-min", "tm-mean", "tm-max",
        "bound",
    )
    rows = []
    for n in sorted(buckets):
        b = buckets[n]
        rows.append((
            str(n), str(b.pairs),
            str(min(b.eq_steps)),
            f"{sum(b.eq_steps) / len(b.eq_steps):.1f}",
            str(max(b.eq_steps)),
            str(min(b.tm_steps)),
            f"{sum(b.tm_steps) / len(b.tm_steps):.1f}",
            str(max(b.tm_steps)),
            str(equality_step_bound(n + 1)),
        ))
    if config.tsv:
        print("\t".join(header), file=out)
        for row in rows:
            print("\t".join(row), file=out)
        return
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)), file=out)
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)), file=out)
    worst = max(
        max(b.tm_steps) / equality_step_bound(n + 1) for n, b in buckets.items()
    )
    total = sum(b.pairs for b in buckets.values())
    print(f"# {total} ordered pairs; worst tm/bound ratio {worst:.3f}", file=out)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-size", type=int, default=5,
                        help="largest SF normal-form size in the corpus")
    parser.add_argument("--budget", type=int, default=1_000_000,
                        help="step budget per reduction and per machine run")
    parser.add_argument("--tsv", action="store_true",
                        help="emit tab-separated values without the summary line")
    args = parser.parse_args(argv)
    config = TableConfig(max_size=args.max_size, budget=args.budget, tsv=args.tsv)
    emit(collect(config), config, sys.stdout)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
