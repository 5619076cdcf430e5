"""Why the row-product polynomials stop localizing beyond two rows.

The one-row endpoints and the two-row quadratics are special cases of a
product construction over an arbitrary row subset S:

    P_up(y)  = prod_{i in S} (b_ii y - a_ii) - prod_{i in S} (r_i^+(A) + y r_i^-(B))
    P_low(y) = prod_{i in S} (a_ii - b_ii y) - prod_{i in S} (r_i^-(A) + y r_i^+(B))

For |S| = 1 the roots are the refined one-row endpoints and for |S| = 2
they are the two-row interval ends. One might hope [min root of P_low,
max root of P_up] keeps enclosing the spectrum for larger S. It does
not: on the worked 3x3 instance with S = {1,2,3}, eigenvalues escape on
BOTH sides of the three-row root interval.

Run:  python demos/multirow_exploration.py
"""

import numpy as np

import eicploc as el

A = np.array([[14.0, 1.0, 1.0], [1.0, 11.0, -2.0], [1.0, -2.0, 13.0]])
B = np.array([[6.0, 0.0, 0.0], [0.0, 10.0, 2.0], [0.0, 2.0, 10.0]])


def main():
    pair = el.make_pair(A, B)
    spec = el.enumerate_spectrum(pair)
    print(f"spectrum: {np.round(spec.values, 6).tolist()}\n")

    print("single rows reproduce the refined one-row endpoints:")
    for i in range(3):
        lo, hi = el.multi_row_roots(pair, (i,))
        print(f"  S = {{{i + 1}}}: roots [{lo:.6f}, {hi:.6f}]")

    print("\nrow pairs reproduce the two-row intervals:")
    for (i, j), iv in el.k2_intervals(pair).items():
        lo, hi = el.multi_row_roots(pair, (i, j))
        print(f"  S = {{{i + 1},{j + 1}}}: roots [{lo:.6f}, {hi:.6f}] "
              f"vs interval [{iv.lo:.6f}, {iv.hi:.6f}]")

    print("\nthree rows break the enclosure:")
    lo, hi = el.multi_row_roots(pair, (0, 1, 2))
    print(f"  S = {{1,2,3}}: root interval [{lo:.6f}, {hi:.6f}]")
    low_esc = float(spec.values[0])
    mid_esc = float(spec.values[np.abs(spec.values - 2.347).argmin()])
    print(f"  eigenvalue {low_esc:.6f} lies LEFT of {lo:.6f}")
    print(f"  eigenvalue {mid_esc:.6f} lies RIGHT of {hi:.6f}")
    p_low, p_up = el.multi_row_polys(pair, (0, 1, 2), mid_esc)
    print(f"  upper product polynomial at {mid_esc:.6f}: {p_up:.4f} > 0")
    print("\nso the product construction is only a localization set for")
    print("one and two rows; for three or more it is exploratory only.")


if __name__ == "__main__":
    main()
