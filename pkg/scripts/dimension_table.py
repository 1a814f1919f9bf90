#!/usr/bin/env python3
"""Cross-validate the six-case dimension table over random models.

For each case the predicted Lie-algebra dimension is compared with the
numeric closure of random draws; the table prints the agreement count and
the worst-case runtime per closure.
"""

import argparse
import time

import numpy as np

from qindirect.classify import CASE_DIMS, cross_validate
from qindirect.model import random_model


def main() -> None:
    ap = argparse.ArgumentParser(description="case dimension cross-check")
    ap.add_argument("--draws", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'case':>4} {'dim':>4} {'agree':>10} {'ms/closure':>11}")
    for case in sorted(CASE_DIMS):
        agree = 0
        start = time.perf_counter()
        for _ in range(args.draws):
            cv = cross_validate(random_model(case, rng))
            agree += int(cv.agree)
        ms = 1000.0 * (time.perf_counter() - start) / args.draws
        print(f"{case:>4} {CASE_DIMS[case]:>4} "
              f"{agree:>5}/{args.draws:<4} {ms:>11.2f}")


if __name__ == "__main__":
    main()
