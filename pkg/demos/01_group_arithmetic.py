"""Exponent-form arithmetic in the 2-step nilpotent group of a graph.

The group of a graph has one generator per vertex; adjacent generators
commute, and commutators of non-adjacent generators are central.  Every
element has a unique normal form, so elements are just exponent vectors.
"""

from nilgraph import Graph, cycle_graph
from nilgraph.nilgroup import (
    Presentation,
    center_rank,
    centralizer_hirsch,
    commutator,
    gamma2_rank,
    inverse,
    make_element,
    multiply,
    x_generator,
)


def main():
    # the free 2-step nilpotent group on two generators: one non-edge, one
    # central commutator generator
    p = Presentation.of(Graph.from_edges(2, []))
    x1, x2 = x_generator(p, 0), x_generator(p, 1)

    print("== rank-2 free nilpotent group ==")
    print("x2 * x1      =", multiply(p, x2, x1), " (picks up the commutator)")
    print("x1 * x2      =", multiply(p, x1, x2))
    prod = multiply(p, x1, x2)
    print("(x1 x2)^-1   =", inverse(p, prod))
    print("[x1 x2, x1]  =", commutator(p, prod, x1))

    print()
    print("== cycle on four vertices ==")
    c4 = Presentation.of(cycle_graph(4))
    print("non-edges (the central generators):", c4.nonedges)
    print("center rank:", center_rank(c4), " commutator rank:", gamma2_rank(c4))

    print()
    print("== centralizer Hirsch numbers ==")
    g = Graph.from_edges(4, [(0, 1), (2, 3)])  # two disjoint edges
    p = Presentation.of(g)
    single = make_element(p, (3, 0, 0, 0))
    both = make_element(p, (1, 0, 1, 0))
    print("graph:", g.to_json())
    print("support {0}:        h =", centralizer_hirsch(p, single),
          " (= deg + N + 1 =", g.degree(0) + p.N + 1, ")")
    print("support {0, 2}:     h =", centralizer_hirsch(p, both),
          " (crosses two components, so N + 1 =", p.N + 1, ")")
    print("identity element:   h =", centralizer_hirsch(p, make_element(p, (0, 0, 0, 0))),
          " (whole group, n + N)")


if __name__ == "__main__":
    main()
