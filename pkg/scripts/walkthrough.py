"""Print the construction step by step for a problem file (default: the F1 fixture)."""

import sys
from pathlib import Path

from qbasis import insert_generator, nonmembership_idempotent, rank_profile
from qbasis.fileformat import load_problem
from qbasis.quasibasis import QuasiBasis

DEFAULT = Path(__file__).resolve().parent.parent / "tests" / "data" / "f1.json"


def show(qb):
    for k, (x, s) in enumerate(zip(qb.elements, qb.supports)):
        fibers = " ".join("(" + ",".join(str(v) for v in f) + ")" for f in x.fibers())
        print(f"    x{k + 1}: {fibers}   support {s.sorted_atoms()}")


def main(path=DEFAULT):
    problem = load_problem(path)
    G = problem.generators
    qb = QuasiBasis.empty(G.space, G.ambient_rank)
    for k, z in enumerate(G.gens):
        j0 = nonmembership_idempotent(z, qb.elements).outside
        if not j0:
            print(f"z{k + 1}: already in the span, skipped")
            continue
        print(f"z{k + 1}: leaves the span on atoms {j0.sorted_atoms()}")
        qb = insert_generator(qb, z)
        show(qb)
    print("strata:", rank_profile(qb).as_lists())


if __name__ == "__main__":
    main(*sys.argv[1:])
