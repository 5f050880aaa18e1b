# module2_symmfunc/symmfunc_demo.py

from module1_exactalg.series import rf_expand
from module4_tracealg.hilbert import teranishi_c32_series
from .multiplicities import c32_multiplicity_closed_form, mult_series, schur_decompose2
from .schur import newton_e_from_p, schur_poly


def run_symmfunc_demo():
    print("=== Module 2 Demo: Schur functions and multiplicity series ===")

    for k in (1, 2, 3):
        print(f"e_{k} =", newton_e_from_p(k))
    print("S_(2,1)(t1, t2) =", schur_poly((2, 1), 2))

    bound = 8
    dec = schur_decompose2(rf_expand(teranishi_c32_series(), bound))
    print(f"\nSchur multiplicities of H(C32) up to degree {bound}:")
    for line in dec.lines():
        print("  ", line)

    ours = mult_series(dec)
    closed = c32_multiplicity_closed_form(bound)
    print("\nClosed-form multiplicity series agrees:", ours.series.poly == closed.series.poly)


if __name__ == "__main__":
    run_symmfunc_demo()
