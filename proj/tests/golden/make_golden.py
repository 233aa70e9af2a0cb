#!/usr/bin/env python3
"""Regenerates the golden phase-diagram CSVs.

Each panel is a hand transcription of one theorem's inequality clauses; the
acceptance suite compares `region` output against these files cell for cell.
The grid uses dyadic steps so every boundary comparison is exact in binary
floating point.
"""

import os

P_VALUES = [1.0 + 0.25 * k for k in range(13)]       # 1 .. 4
D_VALUES = [-3.0 + 0.25 * j for j in range(37)]      # -3 .. 6


def maxwcls(nu, p, d):
    up = (2 * nu + 2) * p - 1
    strong = p > 1 and -1 < d < up
    weak = -1 < d and (d <= up if p == 1 else d < up)
    rwt = -1 < d <= up
    return strong, weak, rwt


def maxwexo(nu, p, d):
    lo, up = 2 * nu * p - 1, 2 * p - 1
    strong = p > 1 and lo < d < up
    weak = lo <= d and (d <= up if p == 1 else d < up)
    rwt = lo <= d <= up
    return strong, weak, rwt


def rexo(nu, p, d):
    lo, up = (2 * nu + 1) * p - 1, 2 * p - 1
    strong = p > 1 and lo < d < up
    wlo = (d >= lo) if (p == 1 and nu != -0.5) else (d > lo)
    wup = (d <= up) if p == 1 else (d < up)
    weak = wlo and wup
    rlo = (d > lo) if nu == -0.5 else (d >= lo)
    rwt = rlo and d <= up
    return strong, weak, rwt


def rexob(nu, p, d):
    lo, up = (2 * nu - 1) * p - 1, 2 * p - 1
    strong = p > 1 and lo < d < up
    if p == 1 and nu != 0.5:
        weak = lo <= d <= up
    else:
        weak = lo < d < up
    if nu == 0.5:
        rwt = lo < d < up
    else:
        rwt = lo <= d <= up
    return strong, weak, rwt


PANELS = [
    ("fig1_maxwcls_nu0.5.csv", maxwcls, 0.5),
    ("fig1_maxwexo_nu-0.5.csv", maxwexo, -0.5),
    ("fig1_maxwexo_nu0.5.csv", maxwexo, 0.5),
    ("fig2_rexo_nu-0.75.csv", rexo, -0.75),
    ("fig2_rexo_nu-0.5.csv", rexo, -0.5),
    ("fig2_rexo_nu-0.25.csv", rexo, -0.25),
    ("fig2_rexo_nu0.25.csv", rexo, 0.25),
    ("fig3_rexob_nu0.5.csv", rexob, 0.5),
    ("fig3_rexob_nu0.75.csv", rexob, 0.75),
]


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    for name, pred, nu in PANELS:
        lines = ["p,delta,strong,weak,rwt"]
        for p in P_VALUES:
            for d in D_VALUES:
                s, w, r = pred(nu, p, d)
                lines.append("%.15g,%.15g,%d,%d,%d" % (p, d, s, w, r))
        with open(os.path.join(here, name), "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print("wrote", name)


if __name__ == "__main__":
    main()
