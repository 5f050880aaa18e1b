# module3_fingroup/fingroup_demo.py

from .cyclic_example import cyclic_example
from .groups import cyclic3_group, symmetric_group
from .invariants import extract_generators, generator_degrees, molien
from .reflections import reflection_check


def run_fingroup_demo():
    print("=== Module 3 Demo: finite matrix groups and their invariants ===")

    for name, group in (("S3", symmetric_group(3)), ("C3", cyclic3_group())):
        print(f"\n#### {name} (order {group.order}) ####")
        series = molien(group, 10)
        print("Molien series up to t^10:", [int(c) for c in series.coefficients_1d()])
        print("Generator degrees:", generator_degrees(extract_generators(group)))
        reflections, generated = reflection_check(group)
        print(f"Pseudo-reflections: {len(reflections)}, generate the group: {generated}")

    ex = cyclic_example()
    print("\n#### f4^2 - a f4 + b = 0 ####")
    print("f4    =", ex.f4)
    print("alpha =", ex.alpha)
    print("beta  =", ex.beta)
    print("Relation holds:", ex.relation_holds)


if __name__ == "__main__":
    run_fingroup_demo()
