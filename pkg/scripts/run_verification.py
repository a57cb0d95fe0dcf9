#!/usr/bin/env python3
"""Run the full verification battery over a parameter grid and dump reports.

Writes one JSON file per (check, ell, k) into the output directory plus a
summary.json; exits nonzero if anything fails.  Defaults reproduce the
worked rank-2 level-2 instance alongside the rank-1 and rank-3 sweeps.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from admchar import (
    CoefficientSolver,
    canonical_json,
    compositions,
    compute_character,
    first_mismatch,
    run_lemma_suite,
    verify_exactness,
    verify_recurrence,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reports", help="output directory")
    parser.add_argument("--max-ell", type=int, default=3)
    parser.add_argument("--max-k", type=int, default=3)
    parser.add_argument("--M", type=int, default=8)
    parser.add_argument("--max-degree", type=int, default=6)
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = []

    for ell in range(1, args.max_ell + 1):
        for k in range(1, args.max_k + 1):
            started = time.time()
            recurrence = verify_recurrence(ell, k, args.M)
            (out / f"recurrence_ell{ell}_k{k}.json").write_text(
                canonical_json(recurrence.to_jsonable())
            )

            exact_reports = [
                verify_exactness(K, args.max_degree) for K in compositions(ell, k)
            ]
            (out / f"exactness_ell{ell}_k{k}.json").write_text(
                canonical_json([r.to_jsonable() for r in exact_reports])
            )

            lemmas = run_lemma_suite(ell, k, args.max_degree)
            (out / f"lemmas_ell{ell}_k{k}.json").write_text(
                canonical_json(lemmas.to_jsonable())
            )

            solver = CoefficientSolver(args.M)
            solver_ok = all(
                first_mismatch(solver.character(K), compute_character(K, args.M))
                is None
                for K in compositions(ell, k)
            )

            entry = {
                "ell": ell,
                "k": k,
                "recurrence_ok": recurrence.all_ok,
                "exactness_ok": all(r.all_ok for r in exact_reports),
                "lemmas_ok": lemmas.ok,
                "solver_matches_oracle": solver_ok,
                "seconds": round(time.time() - started, 2),
            }
            summary.append(entry)
            print(json.dumps(entry))

    (out / "summary.json").write_text(canonical_json(summary))
    failed = [
        e
        for e in summary
        if not (
            e["recurrence_ok"]
            and e["exactness_ok"]
            and e["lemmas_ok"]
            and e["solver_matches_oracle"]
        )
    ]
    if failed:
        print(f"{len(failed)} grid cells failed", file=sys.stderr)
        return 1
    print(f"all {len(summary)} grid cells verified; reports in {out}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
