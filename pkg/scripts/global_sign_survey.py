"""Survey the global sign relating the cap-and-wedge expansion to the
tableau sum.

For every partition in range the script resolves the actual sign by exact
polynomial comparison, compares it with the closed-form prediction from the
top-justified filling, and tabulates where the two differ.  It also reports
how often the naive row-complement shortcut for translation signs agreed
with the exact sign during the run.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from flamingo.grassmann import predicted_global_sign, resolved_global_sign, sign_shortcut_tally
from flamingo.partitions import enumerate_ordered_partitions


@dataclass(frozen=True)
class SurveyConfig:
    n_max: int = 7
    r_max: int = 3
    verbose: bool = False


def survey(config: SurveyConfig) -> int:
    mismatches: Counter[tuple[int, int, int]] = Counter()
    totals: Counter[tuple[int, int, int]] = Counter()
    for n in range(2, config.n_max + 1):
        for r in range(1, config.r_max + 1):
            for d in range(1, n // max(r, 1) + 1):
                if n < r * d or d < 1:
                    continue
                for partition in enumerate_ordered_partitions(n, d, r):
                    actual = resolved_global_sign(partition, r)
                    predicted = predicted_global_sign(partition, r)
                    key = (n, d, r)
                    totals[key] += 1
                    if actual != predicted:
                        mismatches[key] += 1
                        if config.verbose:
                            print(
                                f"  predicted {predicted:+d} actual {actual:+d}"
                                f"  ({partition.text()}) r={r}",
                                file=sys.stderr,
                            )
        print(f"n={n} done", file=sys.stderr, flush=True)

    print(f"{'n':>3} {'d':>3} {'r':>3} {'cases':>8} {'mismatch':>9}")
    for key in sorted(totals):
        n, d, r = key
        print(f"{n:>3} {d:>3} {r:>3} {totals[key]:>8} {mismatches.get(key, 0):>9}")
    agree = sign_shortcut_tally["agree"]
    disagree = sign_shortcut_tally["disagree"]
    print(f"row-complement shortcut: agree={agree} disagree={disagree}")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--r-max", type=int, default=3)
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args()
    return survey(SurveyConfig(n_max=args.n_max, r_max=args.r_max, verbose=args.verbose))


if __name__ == "__main__":
    sys.exit(main())
