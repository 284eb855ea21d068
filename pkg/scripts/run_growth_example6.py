#!/usr/bin/env python3
"""Ball-growth probe for the rank-3 anisotropic example group: counts
group elements with trace(g^t g) <= T^2 over a geometric grid of T and
fits the log-log slope (expected exponent n - 2 = 1 for an arithmetic
group)."""

import argparse

from hypermono.appendix_data import EXAMPLES
from hypermono.growth import growth_run, saturated_word_limit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tmin", type=int, default=100)
    ap.add_argument("--tmax", type=int, default=10_000)
    ap.add_argument("--points", type=int, default=10)
    ap.add_argument("--word-limit", type=int, default=None,
                    help="override the saturation oracle")
    ap.add_argument("--csv", help="write the T/count grid to this file")
    args = ap.parse_args()

    ex = EXAMPLES[6]
    gens = [[list(map(int, r)) for r in ex.A],
            [list(map(int, r)) for r in ex.B]]
    wl = args.word_limit or saturated_word_limit(gens, args.tmax)
    run = growth_run(gens, args.tmin, args.tmax, args.points, wl)

    lines = ["T,count,log10T,log10N"]
    import math
    for t, c in zip(run.t_grid, run.counts):
        lt = math.log10(t)
        lc = math.log10(c) if c else ""
        lines.append(f"{t},{c},{lt},{lc}")
    body = "\n".join(lines)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)
    print(f"word_limit={wl} slope={run.slope:.4f} residual={run.residual:.4f}")


if __name__ == "__main__":
    main()
