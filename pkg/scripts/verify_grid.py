#!/usr/bin/env python3.8

import argparse
import os
import sys
import time
from typing import List, Optional, Sequence, Tuple

sys.path.insert(0, os.path.join(os.getcwd(), "src"))
from helberg.codebook import CodeParams
from helberg.oracle import FullMode, VerificationReport, verify_exhaustive
from helberg.utils import print_memstats

SUCCESS = "\033[92m"
FAIL = "\033[91m"
ENDC = "\033[0m"

# (n, d, q, residues besides 0 and the middle one)
DEFAULT_GRID: Tuple[Tuple[int, int, int, Tuple[int, ...]], ...] = (
    (10, 3, 2, (381,)),
    (8, 2, 3, (1,)),
    (7, 2, 4, (1,)),
)

argparser = argparse.ArgumentParser(
    prog="verify_grid",
    description="Run the exhaustive decoder check over a grid of parameter sets",
)
argparser.add_argument(
    "-g",
    "--grid",
    action="append",
    default=[],
    metavar="N,D,Q[,R...]",
    help="Parameter set to check (repeatable); defaults to the desk-scale grid",
)
argparser.add_argument("-w", "--workers", type=int, default=1, help="Worker processes")
argparser.add_argument(
    "-s", "--short", action="store_true", help="Only show failures, one line each"
)
argparser.add_argument(
    "-v", "--verbose", action="store_true", help="Display the failing corruptions"
)


def report_status(
    report: VerificationReport,
    verbose: bool,
    short: bool = False,
) -> None:
    if short and report.passed:
        return

    if report.passed:
        status = "OK"
        COLOR = SUCCESS
    else:
        status = "Fail"
        COLOR = FAIL

    label = str(report.params)
    if short:
        print(f"{label}: {len(report.failures)} failures")
    else:
        print(f"{COLOR}{label:40} {report.plans:>10,} plans {status}{ENDC}")

    if verbose:
        for failure in report.failures:
            print(f"  {failure.to_text(report.params.q)}")


def parse_grid(entries: Sequence[str]) -> List[CodeParams]:
    if not entries:
        sets: List[CodeParams] = []
        for n, d, q, extra in DEFAULT_GRID:
            modulus = CodeParams.create(n, d, q).modulus
            for r in sorted({0, modulus // 2, *extra}):
                sets.append(CodeParams.create(n, d, q, r))
        return sets
    sets = []
    for entry in entries:
        n, d, q, *residues = (int(part) for part in entry.split(","))
        for r in residues or [0]:
            sets.append(CodeParams.create(n, d, q, r))
    return sets


def verify_grid(
    param_sets: Sequence[CodeParams], workers: int, verbose: bool, short: bool
) -> int:
    errors = 0
    total_plans = 0
    total_codewords = 0

    t0 = time.time()
    for params in param_sets:
        report = verify_exhaustive(params, FullMode(), workers=workers)
        report_status(report, verbose, short)
        total_plans += report.plans
        total_codewords += report.codebook
        if not report.passed:
            errors += 1
    t1 = time.time()

    total_seconds = t1 - t0
    print(
        f"Checked {len(param_sets):,} codes, {total_codewords:,} codewords,",
        f"{total_plans:,} corruptions in {total_seconds:,.3f} seconds.",
    )
    if total_seconds > 0:
        print(f"That's {total_plans / total_seconds :,.0f} decodes/sec.")

    if short:
        print_memstats()

    if errors:
        print(f"Encountered {errors} failing codes.", file=sys.stderr)
        return 1
    return 0


def main(argv: Optional[List[str]] = None) -> None:
    args = argparser.parse_args(argv)
    sys.exit(verify_grid(parse_grid(args.grid), args.workers, args.verbose, args.short))


if __name__ == "__main__":
    main()
