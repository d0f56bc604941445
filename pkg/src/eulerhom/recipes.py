"""Random diagrams from the constructor grammar, for property checks and scripts.

Every generator takes a ``random.Random`` so runs are reproducible from a seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from eulerhom import burnside as bs
from eulerhom import simplicial as sc
from eulerhom import stratifold as st
from eulerhom.permgroups import PermGroup

MANIFOLD_CHIS = {0: (1, 2), 1: (0,), 2: (2, 0, 1, 0, -2), 3: (0,)}


def closed_leaf(rng: random.Random, max_dim: int = 3) -> st.StratumDiagram:
    dim = rng.randint(0, max(0, max_dim))
    kind = rng.random()
    if kind < 0.3:
        return st.point(dim)
    if kind < 0.4:
        return st.empty(dim)
    return st.from_closed_manifold(rng.choice(MANIFOLD_CHIS[dim]), dim)


def closed_euler(rng: random.Random, depth: int = 3, max_dim: int = 5) -> st.StratumDiagram:
    """A closed Euler diagram built from manifolds, points and Euler-preserving moves."""
    if depth <= 0 or rng.random() < 0.25:
        return closed_leaf(rng, min(3, max_dim))
    move = rng.choice(["union", "product", "pad", "double", "cone_glue", "union"])
    if move == "union":
        a, b = st.pad_to_common([closed_euler(rng, depth - 1, max_dim), closed_euler(rng, depth - 1, max_dim)])
        return st.disjoint_union(a, b)
    if move == "product":
        a = closed_euler(rng, depth - 1, max_dim)
        b = closed_euler(rng, depth - 1, max_dim)
        if a.dim + b.dim <= max_dim:
            return st.product(a, b)
        return a
    if move == "pad":
        a = closed_euler(rng, depth - 1, max_dim)
        return st.pad(a, rng.randint(a.dim, max(a.dim, max_dim)))
    # the remaining moves glue bounded pieces back into a closed diagram
    t = bounded_euler(rng, depth - 1, max_dim)
    if move == "double":
        return st.glue(t, t)
    base = t.boundary
    if st.chi_via_strata(base) == 0:
        return st.glue(t, st.cone(base))
    return st.glue(t, t)


def bounded_euler(rng: random.Random, depth: int = 3, max_dim: int = 5) -> st.StratumDiagram:
    """A bounded Euler diagram: cylinder, cone over an even diagram, product or union."""
    move = rng.choice(["cylinder", "cone", "product", "union"]) if depth > 0 else "cylinder"
    if move == "cylinder" or depth <= 0:
        s = closed_euler(rng, depth - 1, max_dim - 1)
        return st.cylinder(s)
    if move == "cone":
        s = closed_euler(rng, depth - 1, max_dim - 1)
        if st.chi_via_strata(s) == 1:
            s = st.disjoint_union(s, st.point(s.dim))
        return st.cone(s)
    if move == "product":
        t = bounded_euler(rng, depth - 1, max_dim)
        s = closed_euler(rng, depth - 1, max(0, max_dim - t.dim))
        if t.dim + s.dim > max_dim:
            s = closed_leaf(rng, 0)
        return st.product(t, s) if rng.random() < 0.5 else st.product(s, t)
    a = bounded_euler(rng, depth - 1, max_dim)
    b = bounded_euler(rng, depth - 1, max_dim)
    if a.dim != b.dim:
        return a
    return st.disjoint_union(a, b)


def closed_any(rng: random.Random, depth: int = 3) -> st.StratumDiagram:
    """Closed diagrams that may fail the Euler condition (cones over odd pieces glued shut)."""
    if rng.random() < 0.5:
        return closed_euler(rng, depth)
    s = closed_euler(rng, depth - 1, 3)
    c = st.cone(s)
    return st.glue(c, c)


@dataclass(frozen=True)
class Realized:
    """A closed diagram together with a triangulation of the same space."""

    name: str
    diagram: st.StratumDiagram
    complex: sc.SimplicialComplex


def manifold_realizations() -> list[Realized]:
    out = []
    for name, make in sc.FIXTURES.items():
        k = make()
        out.append(Realized(name, st.from_closed_manifold(sc.euler_characteristic(k), k.dim), k))
    return out


def realized_union(a: Realized, b: Realized) -> Realized:
    da, db = st.pad_to_common([a.diagram, b.diagram])
    return Realized(f"({a.name} + {b.name})", st.disjoint_union(da, db), sc.disjoint_union_complex(a.complex, b.complex))


def realized_suspension(a: Realized) -> Realized:
    """Two cones glued along ``a``; realized by the simplicial suspension."""
    c = st.cone(a.diagram)
    return Realized(f"susp({a.name})", st.glue(c, c), sc.suspension_complex(a.complex))


def realizable_corpus(rng: random.Random, size: int = 40) -> list[Realized]:
    """Manifold fixtures, their unions and suspensions, closed under a few random steps."""
    base = manifold_realizations()
    corpus = list(base)
    while len(corpus) < size:
        move = rng.random()
        a = rng.choice(corpus)
        if move < 0.5:
            b = rng.choice(base)
            r = realized_union(a, b)
        else:
            if sc.euler_characteristic(a.complex) % 2:
                a = realized_union(a, base[0])
            r = realized_suspension(a)
        if r.complex.vertices <= 40 and r.diagram.dim <= 5:
            corpus.append(r)
    return corpus


# equivariant recipes

def g_closed_leaf(rng: random.Random, h: PermGroup, max_dim: int = 2) -> bs.GStratumDiagram:
    n = rng.randint(0, max(0, max_dim))
    if rng.random() < 0.5 or n == 0:
        return bs.g_orbit(h, rng.randrange(len(h.subgroup_classes)), n)
    pieces = []
    for _ in range(rng.randint(1, 2)):
        k = rng.randrange(len(h.subgroup_classes))
        ncls = len(h.subgroup_classes[k].representative.subgroup_classes)
        dims = [n] + [rng.randint(0, n) for _ in range(ncls - 1)]
        pieces.append((rng.choice([1, 2, -1, 0]), k, dims))
    return bs.g_manifold(h, n, pieces)


def g_closed_euler(rng: random.Random, h: PermGroup, depth: int = 3, max_dim: int = 4) -> bs.GStratumDiagram:
    if depth <= 0 or rng.random() < 0.3:
        return g_closed_leaf(rng, h, min(2, max_dim))
    move = rng.choice(["union", "pad", "double", "cone_double"])
    if move == "union":
        a = g_closed_euler(rng, h, depth - 1, max_dim)
        b = g_closed_euler(rng, h, depth - 1, max_dim)
        n = max(a.dim, b.dim)
        return bs.g_union(bs.g_pad(a, n), bs.g_pad(b, n))
    if move == "pad":
        a = g_closed_euler(rng, h, depth - 1, max_dim)
        return bs.g_pad(a, rng.randint(a.dim, max(a.dim, max_dim)))
    t = g_bounded_euler(rng, h, depth - 1, max_dim)
    return bs.g_glue(t, t)


def make_vh_trivial(h: PermGroup, s: bs.GStratumDiagram) -> bs.GStratumDiagram:
    """Add orbits H/K_n until the diagram's class in V_H vanishes."""
    v = bs.project_vh(bs.diagram_chi(s))
    for bit, c in zip(v.bits, bs.vh_basis(h)):
        if bit:
            s = bs.g_union(s, bs.g_orbit(h, c.index, s.dim))
    return s


def g_bounded_euler(rng: random.Random, h: PermGroup, depth: int = 3, max_dim: int = 4) -> bs.GStratumDiagram:
    move = rng.choice(["cylinder", "cone", "union"]) if depth > 0 else "cylinder"
    if move == "cylinder":
        return bs.g_cylinder(g_closed_euler(rng, h, depth - 1, max_dim - 1))
    if move == "cone":
        return bs.g_cone(make_vh_trivial(h, g_closed_euler(rng, h, depth - 1, max_dim - 1)))
    a = g_bounded_euler(rng, h, depth - 1, max_dim)
    b = g_bounded_euler(rng, h, depth - 1, max_dim)
    if a.dim != b.dim:
        return a
    return bs.g_union(a, b)
