"""Walk through the single-season fractional differencing weights.

Shows the two weight families, their duality, the behaviour at integer
memory values, and how fast the large-lag power law kicks in.
"""

import math

import numpy as np

from parfima import ar_coefficients, log_gamma, ma_asymptotic, ma_coefficients


def main():
    print("MA-side weights psi_j for a few memory values")
    print("---------------------------------------------")
    for d in (0.5, 0.3, -0.3, 1.0):
        vals = ma_coefficients(d, 6).values
        print("  d=%5.2f:" % d, np.array2string(vals, precision=5))
    print()

    print("AR side is the same recurrence at -d (exact duality)")
    print("----------------------------------------------------")
    d = 0.4
    pi = ar_coefficients(d, 5).values
    psi_neg = ma_coefficients(-d, 5).values
    print("  pi(0.4)  :", np.array2string(pi, precision=5))
    print("  psi(-0.4):", np.array2string(psi_neg, precision=5))
    print("  identical bit for bit:", np.array_equal(pi, psi_neg))
    print()

    print("Integer memory terminates the series (plain differencing)")
    print("----------------------------------------------------------")
    print("  pi(d=2):", ar_coefficients(2.0, 5).values)
    print()

    print("Large-lag power law psi_j ~ j^(d-1) / Gamma(d)")
    print("-----------------------------------------------")
    d = 0.3
    exact = ma_coefficients(d, 100_000).values
    print("  d = %.1f, ratio approx/exact:" % d)
    for j in (10, 100, 1000, 10_000, 100_000):
        print("    j=%6d: %.6f" % (j, ma_asymptotic(d, j) / exact[j]))
    print()

    print("Signed log-gamma keeps ratios finite at negative arguments")
    print("-----------------------------------------------------------")
    for x in (0.5, -0.5, -2.5, 25.0):
        out = log_gamma(x)
        print(
            "  x=%5.1f: ln|Gamma| = %12.6f, sign %+d  (Gamma = %g)"
            % (x, out.log_abs, out.sign, out.sign * math.exp(out.log_abs))
        )


if __name__ == "__main__":
    main()
