"""Exact Reidemeister numbers of automorphisms.

An automorphism is described by the images of the vertex generators.  It
induces integer matrices on the two lower-central layers (vertex lattice
and commutator lattice), and its Reidemeister number is the product
|det(1 - M1)| * |det(1 - M2)| with 0 mapped to infinity.
"""

from itertools import combinations

from nilgraph import Graph, IntMatrix
from nilgraph.morphism import (
    companion_automorphism,
    eight_times_polynomial,
    endo_from_matrix,
    reidemeister_number,
    twice_odd_polynomial,
)
from nilgraph.nilgroup import Presentation


def show(p, rows):
    e = endo_from_matrix(p, IntMatrix.from_rows(rows))
    r = reidemeister_number(e)
    print(f"  vertex matrix {rows}")
    print(f"    induced commutator matrix: {e.commutator_matrix.to_rows()}")
    print(f"    r1={r.r1} r2={r.r2} r={r.r}")


def main():
    print("== rank-2 free nilpotent group ==")
    p = Presentation.of(Graph.from_edges(2, []))
    show(p, [[1, 0], [0, 1]])      # identity: infinitely many classes
    show(p, [[1, 1], [1, 0]])      # golden-ratio shear: exactly 2 classes
    show(p, [[2, 1], [1, 0]])      # trace 2, determinant -1: 4 classes

    print()
    print("== complete graph plus an isolated vertex ==")
    # companion matrices realize any value 2|q(1)q(-1)|; the two families
    # below cover 2(2k-1) and 8k
    for n in (4, 5):
        g = Graph.from_edges(n, combinations(range(n - 1), 2))
        pres = Presentation.of(g)
        odd = [
            reidemeister_number(
                companion_automorphism(pres, twice_odd_polynomial(n, k))
            ).r.value
            for k in range(1, 6)
        ]
        eight = [
            reidemeister_number(
                companion_automorphism(pres, eight_times_polynomial(n, k))
            ).r.value
            for k in range(1, 6)
        ]
        print(f"  n={n}: twice-odd family {odd}, eight-times family {eight}")


if __name__ == "__main__":
    main()
