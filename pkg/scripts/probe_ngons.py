#!/usr/bin/env python3
"""Hunt for n-point blocking sets of regular n-gons, n = 4..12.

A row ending in 'matched' means the solver found a verified blocking set of
size exactly n; 'inconclusive-exceeds' would mark a candidate configuration
for which every strategy needed more than n points (never a refutation:
absence of a small blocker is not a proof).
"""

from blockade.constructions import regular_ngon
from blockade.solver import conjecture_probe


def main() -> None:
    for n in range(4, 13):
        rep = conjecture_probe(regular_ngon(n), budget=3)
        print(
            f"n={n:>2}: best verified size {rep.best.size} "
            f"(target {rep.target}) -> {rep.status}"
        )


if __name__ == "__main__":
    main()
