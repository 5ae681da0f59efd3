#!/usr/bin/env python3
"""Cylinder degeneracy curves: theta-function limit vs the honest oracle.

For omega = sigma, l = l' = 0 the printed limits reduce to theta-constant
expressions in rho alone (pp, mm) or in delta + rho (pm).  The series oracle
evaluated at equal disk variables tells a different story because the
Kronecker selection step inside the printed limit has no series-level
counterpart.  This script tabulates both over a rho sweep so the discrepancy
can be inspected rather than taken on faith.
"""

from __future__ import annotations

import argparse
import math

from mp2ent.entangle_circle import SectorPair
from mp2ent.entangle_cylinder import (
    CylinderPairParams,
    degenerate_limit_cyl,
    probability_series_cyl,
)
from mp2ent.states import CylinderLabel, Mp2Variable


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--omega", type=float, default=0.5)
    parser.add_argument("--delta", type=float, default=0.0)
    parser.add_argument("--steps", type=int, default=17)
    args = parser.parse_args()

    var = Mp2Variable(args.omega)
    header = f"{'rho':>8s}" + "".join(
        f"{pair.value + suffix:>16s}"
        for pair in (SectorPair.PP, SectorPair.PM, SectorPair.MM)
        for suffix in ("_theta", "_oracle")
    )
    print(header)
    for i in range(args.steps):
        rho = 2.0 * math.pi * i / (args.steps - 1)
        row = [f"{rho:8.4f}"]
        params = CylinderPairParams(
            var, var, CylinderLabel(0.0, args.delta), CylinderLabel(0.0, 0.0), rho
        )
        for pair in (SectorPair.PP, SectorPair.PM, SectorPair.MM):
            theta_branch = degenerate_limit_cyl(pair, 0.0, 0.0, args.delta, rho)
            oracle = probability_series_cyl(params, pair, 40).value
            row.append(f"{theta_branch:16.8e}")
            row.append(f"{oracle:16.8e}")
        print("".join(row))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
