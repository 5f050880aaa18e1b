# module4_tracealg/tracealg_demo.py

from module1_exactalg.series import functional_eq_check
from .graded import graded_dim, min_gen_profile, profile_lines
from .hilbert import fhl_c22_series, hilbert_check, teranishi_c32_series
from .identities import cayley_hamilton, phi2, psi2
from .evaluation import verify_zero
from .relations import c2d_relations_check


def run_tracealg_demo():
    print("=== Module 4 Demo: trace algebras of generic matrices ===")

    print("\n#### Cayley-Hamilton identities ####")
    print("Psi2 vanishes on 2x2:", verify_zero(psi2(), 2))
    print("Phi2 vanishes on 2x2:", verify_zero(phi2(), 2))
    print("chi(X) vanishes on 3x3:", verify_zero(cayley_hamilton(3), 3))

    print("\n#### Graded dimensions ####")
    for k in [(1, 1), (2, 0), (2, 1)]:
        print(f"dim C_22 {k} =", graded_dim(2, 2, k))
    report = hilbert_check(2, 2, 5, fhl_c22_series())
    print(report.summary_line())

    print("\n#### Minimal generators of C_23 ####")
    for line in profile_lines(min_gen_profile(2, 3, 3)):
        print("  ", line)

    print("\nFunctional equation for H(C_32):", functional_eq_check(teranishi_c32_series(), 3, 2))
    print(c2d_relations_check(3, samples=5).summary_line())


if __name__ == "__main__":
    run_tracealg_demo()
