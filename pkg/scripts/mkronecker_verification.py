"""Teleman checks for the m-Kronecker moduli with d = (2, 3), m = 3..11.

For each m this prints, for every twist s = 1..m-1, which of the four
families U_i^ * U_j(-sH), U_i^(-sH), U_i(-sH), O(-sH) has a stratum that
violates the Teleman window, the minimal Teleman twist t_star, and whether
the sectional condition on U_i^ * U_j holds.

Usage: python3 scripts/mkronecker_verification.py [max_m]
"""

from __future__ import annotations

import sys

from quiversod.bundles import OH, U, Udual
from quiversod.core import Moduli, Quiver
from quiversod.sod import mkronecker_h0_condition
from quiversod.teleman import strata, t_star, teleman_report

A = (2, -1)


def failing_twists(M, S, make, m):
    return [s for s in range(1, m) if not all(teleman_report(M, F, S).satisfied for F in make(s))]


def main(max_m: int = 11) -> None:
    print("m | U^*U fails at s | U^* fails at s | U fails at s | O fails at s | min t_star | r - 1 | h0 condition")
    for m in range(3, max_m + 1):
        M = Moduli(Quiver.kronecker(m), (2, 3))
        S = strata(M)
        fams = [
            lambda s: [Udual(i, A) * U(j, A) * OH(M, -s) for i in (1, 2) for j in (1, 2)],
            lambda s: [Udual(i, A) * OH(M, -s) for i in (1, 2)],
            lambda s: [U(i, A) * OH(M, -s) for i in (1, 2)],
            lambda s: [OH(M, -s)],
        ]
        cols = [failing_twists(M, S, f, m) for f in fams]
        _, tmin = t_star(M.quiver, M.d)
        print(" | ".join([str(m), *(str(c) for c in cols), str(tmin), str(M.index - 1), str(mkronecker_h0_condition(m))]))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 11)
