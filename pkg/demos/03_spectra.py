"""Reidemeister spectra: structural classification plus bounded search.

Three structural mechanisms classify most small graphs: peeling vertices
joined to everything (free abelian factors), splitting along the
simplicial join (isomorphic factors give unions of partial products), and
rules that force every automorphism to have infinitely many twisted
classes.  The bounded search then realizes small spectrum members with
explicit witness matrices.
"""

from nilgraph import Graph, cycle_graph, path_graph
from nilgraph.spectra import (
    compute_spectrum_report,
    detect_r_infinity,
    spectrum_by_decomposition,
)


def classify(name, g, bound):
    print(f"== {name} ==")
    rule = detect_r_infinity(g)
    if rule:
        print("  infinite for every automorphism, rule:", rule)
    else:
        form = spectrum_by_decomposition(g)
        if form is not None:
            print("  structural form:", form.render())
            print("  simplified:     ", form.simplify().render())
    rep = compute_spectrum_report(g, bound)
    print(f"  search at bound {bound} realizes:", list(rep.observed))
    if rep.observed:
        v = rep.observed[0]
        print(f"  witness for {v}:", [list(r) for r in rep.witnesses[v]])
    print()


def main():
    classify("cycle on 4 vertices", cycle_graph(4), 1)
    classify("star on 4 vertices", Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), 1)
    classify("two disjoint edges", Graph.from_edges(4, [(0, 1), (2, 3)]), 1)
    classify("path on 4 vertices", path_graph(4), 1)
    classify("cycle on 5 vertices", cycle_graph(5), 1)
    classify("path on 3 plus a point", Graph.from_edges(4, [(0, 1), (1, 2)]), 1)


if __name__ == "__main__":
    main()
