# module1_exactalg/exactalg_demo.py

from .linalg import QMatrix, det, nullspace, rank
from .polynomials import format_rational, one_minus, series_ring
from .series import rational_fn, rf_expand


def run_exactalg_demo():
    print("=== Module 1 Demo: exact series and linear algebra ===")

    R = series_ring(1)
    t, = R.gens
    h = rational_fn(1 + t**3, [one_minus(R, [1]), one_minus(R, [2]), one_minus(R, [3])])
    series = rf_expand(h, 8)
    coeffs = [int(c) for c in series.coefficients_1d()]
    print("(1+t^3)/((1-t)(1-t^2)(1-t^3)) up to t^8:", coeffs)

    m = QMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    print("\nMatrix rows:", [[format_rational(x) for x in row] for row in m.to_rows()])
    print("rank =", rank(m), " det =", format_rational(det(m)))
    for v in nullspace(m):
        print("nullspace vector:", [format_rational(x) for x in v])


if __name__ == "__main__":
    run_exactalg_demo()
