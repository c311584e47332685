#!/usr/bin/env python3
"""Sweep the shipped corpus, comparing the two family characterisations.

Prints per-leg progress to stderr and a JSON summary to stdout; any
discrepancy reports are emitted as JSON lines.  Exit code 0 iff clean.

Usage:
    python scripts/run_theorem_sweep.py [--random-models N] [--seed S]
                                        [--skip-exhaustive] [--out FILE]
"""

import argparse
import json
import sys
import time

from giideals.crossval import (
    BUILTIN_SEED,
    CorpusSpec,
    builtin_random_models,
    iter_corpus_models,
    property_suite,
    theorem_a_sweep,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--random-models", type=int, default=200)
    parser.add_argument("--seed", type=int, default=BUILTIN_SEED)
    parser.add_argument("--skip-exhaustive", action="store_true")
    parser.add_argument("--out", help="also write reports to this JSONL file")
    args = parser.parse_args()

    legs = []
    if not args.skip_exhaustive:
        legs.append(
            (
                "all commuting partial-map pairs on <= 3 points",
                list(
                    iter_corpus_models(
                        CorpusSpec(
                            kinds=("dynsys",), rank_min=2, rank_max=2,
                            vertices_min=1, vertices_max=3, exhaustive=True,
                        )
                    )
                ),
            )
        )
        legs.append(
            (
                "all commuting matrix pairs (entries <= 2) on <= 2 vertices",
                list(
                    iter_corpus_models(
                        CorpusSpec(
                            kinds=("kgraph",), rank_min=2, rank_max=2,
                            vertices_min=1, vertices_max=2, max_mult=2,
                            exhaustive=True,
                        )
                    )
                ),
            )
        )
    legs.append(
        (
            f"{args.random_models} seeded random models",
            builtin_random_models(args.random_models, args.seed),
        )
    )

    all_reports = []
    summary = {"legs": [], "discrepancies": 0}
    for name, models in legs:
        t0 = time.time()
        stats: dict = {}
        reports = theorem_a_sweep(models=models, stats=stats)
        reports += property_suite(models=models)
        elapsed = time.time() - t0
        print(
            f"{name}: {stats['models']} models, {stats['candidates']} candidates, "
            f"{len(reports)} reports, {elapsed:.1f}s",
            file=sys.stderr,
        )
        summary["legs"].append(
            {
                "name": name,
                "models": stats["models"],
                "candidates": stats["candidates"],
                "reports": len(reports),
                "seconds": round(elapsed, 1),
            }
        )
        all_reports.extend(reports)

    summary["discrepancies"] = len(all_reports)
    lines = [json.dumps(r.to_doc(), sort_keys=True) for r in all_reports]
    for line in lines:
        print(line)
    print(json.dumps(summary, sort_keys=True))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines + [json.dumps(summary, sort_keys=True)]) + "\n")
    return 0 if not all_reports else 1


if __name__ == "__main__":
    sys.exit(main())
