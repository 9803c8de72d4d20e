"""Smallest connected bipartite graph on which the b-labelling is undefined.

Walks the graph atlas by increasing order and reports the first connected
bipartite graph whose two colourings have equally many black vertices but
are not isomorphic as labelled graphs.
"""
from bipfree.enumeration import connected_graphs
from bipfree.errors import AmbiguousB
from bipfree.graph import canonical_b_labelling, is_bipartite
from bipfree.graphio import serialize_graph


def main() -> None:
    for g in connected_graphs(7):
        if is_bipartite(g) is None:
            continue
        try:
            canonical_b_labelling(g)
        except AmbiguousB:
            print(f"# first AmbiguousB instance: n={g.n}, m={len(g.edges)}")
            print(serialize_graph(g), end="")
            return
    print("no instance up to 7 vertices")


if __name__ == "__main__":
    main()
