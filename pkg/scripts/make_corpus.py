"""Write the 50-file GraphFile corpus used by the CLI round-trip tests."""
import random
import sys
from pathlib import Path

from bipfree.classifier import b_of
from bipfree.constructions import from_name, make_wall, subdivide
from bipfree.enumeration import random_bipartite, random_graph
from bipfree.graphio import write_graph

NAMED = ["P_1", "P_4", "C_5", "C_6", "K_4", "K_{1,5}", "S_{1,2,3}", "2P_3", "3P_2",
         "2P_1+2P_2", "K_{1,3}+P_1", "P_1+S_{1,1,3}"]
LABELLED = ["K_{1,3}+3P_1", "K_{1,3}+P_2", "P_1+S_{1,1,3}", "S_{1,2,3}", "2P_1+P_3",
            "P_1+P_5", "P_2+P_4", "P_6", "P_1+2P_2", "K_{1,3}"]


def main(out: Path, seed: int = 11) -> None:
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(seed)
    items = []
    for name in NAMED:
        items.append((name, from_name(name), None))
    for name in LABELLED:
        h = b_of(name)
        items.append((name + "-b", h.graph, h.labelling))
    for h in (1, 2, 3):
        items.append((f"wall{h}", make_wall(h), None))
        items.append((f"wall{h}-sub1", subdivide(make_wall(h), 1), None))
    while len(items) < 50:
        i = len(items)
        if i % 2:
            items.append((f"random{i}", random_graph(rng.randint(0, 9), 0.4, rng), None))
        else:
            h = random_bipartite(rng.randint(0, 5), rng.randint(0, 5), 0.5, rng)
            items.append((f"random{i}", h.graph, h.labelling))
    for i, (name, g, lab) in enumerate(items):
        safe = "".join(c if c.isalnum() or c in "+-" else "_" for c in name)
        write_graph(out / f"{i:02d}_{safe}.txt", g, lab)


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("tests/data/corpus"))
