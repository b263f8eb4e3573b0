"""Cross-checking the determinant formula by brute force.

Reducing all exponents mod m collapses the group onto a finite group of
order m^(n+N).  Counting orbits of b -> c * b * phi(c)^{-1} there is a
computation that shares nothing with the determinant formula; when m is a
suitable multiple of the Reidemeister number the two agree exactly.

The choice of m matters: the count can drop below R when m misses a
factor the commutator layer needs (the last example shows m = 6 failing
where every multiple of 4 works).
"""

from nilgraph import Graph, IntMatrix
from nilgraph.morphism import endo_from_matrix, reidemeister_number
from nilgraph.nilgroup import Presentation
from nilgraph.oracle import FiniteQuotient, count_twisted_classes


def main():
    p = Presentation.of(Graph.from_edges(2, []))
    e = endo_from_matrix(p, IntMatrix.from_rows([[1, 1], [1, 0]]))
    r = reidemeister_number(e)
    print("automorphism [[1,1],[1,0]] of the rank-2 free nilpotent group")
    print("determinant formula:", r.r)
    for m in (4, 8, 12, 6):
        count = count_twisted_classes(FiniteQuotient(p, m), e)
        verdict = "matches" if count == r.r.value else "undercounts"
        print(f"  mod {m:2d}: {count} classes ({verdict})")

    print()
    g = Graph.from_edges(3, [(0, 1)])
    p = Presentation.of(g)
    e = endo_from_matrix(p, IntMatrix.from_rows([[0, 1, 0], [1, 1, 0], [0, 0, -1]]))
    r = reidemeister_number(e)
    print("an edge plus a point, golden-ratio block and inverted point")
    print("determinant formula:", r.r)
    for mult in (2, 4):
        m = mult * r.r.value
        count = count_twisted_classes(FiniteQuotient(p, m), e)
        print(f"  mod {m} (= {mult}R): {count} classes")


if __name__ == "__main__":
    main()
