# module5_traceid/traceid_demo.py

from common.constants import DEFAULT_SEED
from module4_tracealg.evaluation import sample_rng
from .group_algebra import GroupAlgElem, fundamental, random_element, trace_poly
from .ideal import ideal_dimension, ideal_membership, semantic_identity
from .permutations import format_cycles, identity


def run_traceid_demo():
    print("=== Module 5 Demo: trace identities and the ideal J(n, m) ===")

    g = fundamental(2)
    print("fundamental(2) =", " ".join(f"{int(c):+d}{format_cycles(p)}" for p, c in sorted(g.terms.items())))
    print("tr polynomial:", trace_poly(g))
    print("dim J(2,3) =", ideal_dimension(2, 3))

    e = GroupAlgElem.of(identity(3))
    print("\nidentity of S3 in J(2,3):", ideal_membership(e, 2), " identity on 2x2:", semantic_identity(e, 2))

    print("\n#### membership vs vanishing, n=2, m=4 ####")
    for i in range(5):
        x = random_element(4, sample_rng(DEFAULT_SEED, i))
        print(f"sample {i}: ideal={ideal_membership(x, 2)} semantic={semantic_identity(x, 2)}")


if __name__ == "__main__":
    run_traceid_demo()
