"""Print tables of marks, normalizer indices and V_H bases for the fixture groups."""

import argparse
import time

from eulerhom import burnside as bs
from eulerhom import permgroups as pg


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="*", default=list(pg.FIXTURE_GROUPS), help="fixture names")
    args = ap.parse_args()
    for name in args.groups:
        start = time.perf_counter()
        h = pg.FIXTURE_GROUPS[name]()
        m = bs.marks_matrix(h)
        labels = m.labels()
        print(f"== {name}: order {h.order}, {len(labels)} classes, "
              f"{len(h.all_subgroups)} subgroups ({time.perf_counter() - start:.2f}s)")
        width = max(len(l) for l in labels)
        print(" " * width, *labels)
        for label, row in zip(labels, m.entries):
            print(label.ljust(width), *(str(v).rjust(len(l)) for v, l in zip(row, labels)))
        print("normalizer index:", *(c.normalizer_index for c in h.subgroup_classes))
        print("V_H basis:", *(c.label for c in bs.vh_basis(h)), f"(dim {len(bs.vh_basis(h))})")
        print()


if __name__ == "__main__":
    main()
