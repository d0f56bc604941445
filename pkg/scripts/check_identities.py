"""Stress the structural identities on large random corpora and report counts.

Each line reports how many random diagrams were checked and how many broke
the identity (expected: zero).
"""

import argparse
import random
import time

from eulerhom import burnside as bs
from eulerhom import permgroups as pg
from eulerhom import recipes as rc
from eulerhom import stratifold as st


def run(label, n, check):
    start = time.perf_counter()
    bad = sum(0 if check(i) else 1 for i in range(n))
    print(f"{label:50} checked {n:6d}  failures {bad}  [{time.perf_counter() - start:.2f}s]")
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--depth", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    n, depth = args.count, args.depth

    def boundary(_):
        t = rc.bounded_euler(rng, depth)
        return st.boundary_chi_check(t) == 0 and t.chi_total == st.chi_via_strata(t)

    def cone(_):
        s = rc.closed_euler(rng, depth)
        return st.is_euler(st.cone(s)) == (st.classify_pt(s) == 0)

    def collars(_):
        s = rc.closed_any(rng, depth - 1)
        return s.chi_total == st.chi_via_collars(s)

    bad = run("chi(boundary) even, bounded Euler diagrams", n, boundary)
    bad += run("cone is Euler iff class is zero", n, cone)
    bad += run("collar count on possibly non-Euler diagrams", n, collars)

    for name in ["Z2", "Z3", "S3", "Z2xZ2", "D4", "A4"]:
        h = pg.FIXTURE_GROUPS[name]()

        def equivariant(_):
            d = rc.g_bounded_euler(rng, h, 4)
            fixed_ok = all(st.is_euler(bs.fixed_diagram(d, c.index)) for c in h.subgroup_classes)
            return fixed_ok and bs.boundary_vh(d).is_zero() and bs.boundary_vh_via_fixed_points(d).is_zero()

        bad += run(f"{name}: boundary vanishes in V_H, fixed sets Euler", max(n // 10, 1), equivariant)
    print("all identities held" if bad == 0 else f"{bad} failures")
    return bad


if __name__ == "__main__":
    raise SystemExit(1 if main() else 0)
