# module6_nilpotency/nilpotency_demo.py

from .multilinear import full_linearization
from .nagata_higman import bounds, minimal_class, nh_membership


def run_nilpotency_demo():
    print("=== Module 6 Demo: Nagata-Higman nilpotency ===")

    print("Linearization of x^2:", full_linearization(2))
    for N in (2, 3):
        print(f"x^2 = 0 forces x1...x{N} = 0:", nh_membership(2, N))

    for n in (1, 2):
        print(f"n={n} minimal_N={minimal_class(n, 4)}")

    for n in (2, 3, 4, 5):
        low, high, known = bounds(n)
        print(f"n={n}: {low} <= N(n) <= {high}, known: {known}")


if __name__ == "__main__":
    run_nilpotency_demo()
