"""Count bounded/unbounded verdicts over all small bipartite H, per mode."""
import argparse
from collections import Counter

from bipfree.classifier import classify_strong, classify_unlabelled, classify_weak
from bipfree.enumeration import bipartite_graphs, labelled_graphs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    graphs = bipartite_graphs(args.max_n)
    labelled = list(labelled_graphs(graphs, distinct=True))
    print(f"{len(graphs)} bipartite graphs, {len(labelled)} labelled graphs up to iso, n <= {args.max_n}")
    for mode, items, fn in (("unlabelled", graphs, classify_unlabelled),
                            ("strong", labelled, classify_strong),
                            ("weak", labelled, classify_weak)):
        cases = Counter()
        for h in items:
            v = fn(h)
            cases[v.case if v.bounded else "unbounded:" + str(v.witness).split(":")[0]] += 1
        print(f"\n[{mode}]")
        for case, count in sorted(cases.items()):
            print(f"  {count:5d}  {case}")


if __name__ == "__main__":
    main()
