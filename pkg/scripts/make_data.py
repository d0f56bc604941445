"""Regenerate the JSON fixtures in data/ used by the README's CLI examples."""

import json
import sys
from pathlib import Path

from eulerhom import burnside as bs
from eulerhom import permgroups as pg
from eulerhom import simplicial as sc
from eulerhom import stratifold as st

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"


def write(name, obj):
    (OUT / name).write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


def triangle_cells(h):
    """Barycentric subdivision of a triangle's boundary under S3: corners, midpoints, half-edges."""
    verts = [("corner", i) for i in range(3)] + [("mid", i) for i in range(3)]
    edges = [(i, j) for i in range(3) for j in range(3) if i != j]  # corner i to midpoint j
    v_act = {str(k): [verts.index((kind, g(i))) for kind, i in verts] for k, g in enumerate(h.generators)}
    e_act = {str(k): [edges.index((g(i), g(j))) for i, j in edges] for k, g in enumerate(h.generators)}
    return {"cells": [{"dim": 0, "points": 6, "action": v_act}, {"dim": 1, "points": 6, "action": e_act}]}


def main():
    OUT.mkdir(exist_ok=True)
    write("pt.json", sc.point().to_json())
    write("rp2_complex.json", sc.projective_plane().to_json())
    write("torus_complex.json", sc.torus().to_json())
    write("sw_point.json", {"dim": 0, "classes": {"0": [1]}})
    write("rp2.json", st.from_closed_manifold(1, 2).to_json())
    write("torus.json", st.from_closed_manifold(0, 2).to_json())
    write("cone_rp2.json", st.cone(st.from_closed_manifold(1, 2)).to_json())
    write("interval.json", st.interval().to_json())
    for name, g in [("s3", pg.symmetric(3)), ("z2", pg.cyclic(2)), ("z3", pg.cyclic(3)), ("a4", pg.alternating(4))]:
        write(f"{name}.json", g.to_json())
    s3 = pg.symmetric(3)
    write("s3_point.json", bs.g_point(s3, 2).to_json())
    write("s3_orbit_c2.json", bs.g_orbit(s3, 1, 0).to_json())
    write("s3_triangle_cells.json", triangle_cells(s3))
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
