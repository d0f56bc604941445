"""Finite permutation groups and their subgroup lattices.

Products compose right to left: ``(p * q)(i) == p(q(i))``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_ORDER_BOUND = 10080


class GroupTooLarge(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"{list(imgs)} is not a permutation of 0..{len(imgs) - 1}")

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Perm:
        imgs = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                imgs[a] = b
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm) -> Perm:
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def conj(self, x: Perm) -> Perm:
        """``self * x * self^-1``."""
        return self * x * self.inverse()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"


def _closure(degree: int, gens: Iterable[Perm], bound: int | None = None) -> frozenset[Perm]:
    gens = list(gens)
    ident = Perm.identity(degree)
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
                    if bound is not None and len(elems) > bound:
                        raise GroupTooLarge(f"group exceeds the order bound {bound}")
        frontier = nxt
    return frozenset(elems)


@dataclass(frozen=True)
class SubgroupClass:
    index: int
    representative: PermGroup
    conjugates: int
    normalizer_order: int
    label: str

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def normalizer_index(self) -> int:
        """|N K / K|."""
        return self.normalizer_order // self.representative.order


class PermGroup:
    """A permutation group with all elements materialized.

    Equality and hashing go by degree and element set, so a subgroup built
    twice from different generators is the same key.
    """

    def __init__(self, degree: int, generators: Sequence[Perm], elements: Iterable[Perm]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = frozenset(elements)

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.degree == other.degree and self.elements == other.elements

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    @cached_property
    def sorted_elements(self) -> tuple[Perm, ...]:
        return tuple(sorted(self.elements))

    def subgroup(self, elements: Iterable[Perm]) -> PermGroup:
        """Wrap an element set (already closed) as a group with a small generating set."""
        elems = frozenset(elements)
        if not elems <= self.elements:
            raise ValueError("not a subset of the group")
        if not is_closed(elems):
            raise ValueError("element set is not a subgroup")
        gens = []
        span = frozenset([self.identity])
        for g in sorted(elems):
            if g not in span:
                gens.append(g)
                span = _closure(self.degree, gens)
        return PermGroup(self.degree, gens, elems)

    def is_subgroup(self, k: PermGroup | Iterable[Perm]) -> bool:
        elems = _elements(k)
        return bool(elems) and elems <= self.elements and is_closed(elems)

    @cached_property
    def _cyclic_subgroups(self) -> set[frozenset[Perm]]:
        return {_closure(self.degree, [g]) for g in self.elements}

    @cached_property
    def all_subgroups(self) -> tuple[frozenset[Perm], ...]:
        """Every subgroup, by layered joins starting from the cyclic ones."""
        cyclic = self._cyclic_subgroups
        found = set(cyclic)
        layer = set(cyclic)
        while layer:
            nxt = set()
            for h in layer:
                for c in cyclic:
                    if c <= h:
                        continue
                    j = _closure(self.degree, _generators_of(h) + _generators_of(c))
                    if j not in found:
                        found.add(j)
                        nxt.add(j)
            layer = nxt
        return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))

    @cached_property
    def subgroup_classes(self) -> tuple[SubgroupClass, ...]:
        seen: set[frozenset[Perm]] = set()
        raw = []
        for k in self.all_subgroups:
            if k in seen:
                continue
            conj = {frozenset(g.conj(x) for x in k) for g in self.elements}
            seen |= conj
            rep = min(conj, key=lambda s: sorted(s))
            stab = sum(1 for g in self.elements if frozenset(g.conj(x) for x in k) == k)
            raw.append((len(rep), sorted(rep), rep, len(conj), stab))
        raw.sort(key=lambda r: (r[0], r[1]))
        out = []
        per_order: Counter = Counter()
        for idx, (order, _, rep, nconj, norm) in enumerate(raw):
            label = f"order:{order}#{per_order[order]}"
            per_order[order] += 1
            out.append(SubgroupClass(idx, self.subgroup(rep), nconj, norm, label))
        return tuple(out)

    @cached_property
    def _class_lookup(self) -> dict[frozenset[Perm], int]:
        table = {}
        for cls in self.subgroup_classes:
            k = cls.representative.elements
            for g in self.elements:
                table.setdefault(frozenset(g.conj(x) for x in k), cls.index)
        return table

    def class_of(self, k: PermGroup | Iterable[Perm]) -> int:
        """Index of the conjugacy class containing the subgroup ``k``."""
        try:
            return self._class_lookup[_elements(k)]
        except KeyError:
            raise ValueError("not a subgroup of this group") from None

    def trivial_class(self) -> int:
        return 0

    def whole_class(self) -> int:
        return len(self.subgroup_classes) - 1

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [list(g.images) for g in self.generators]}

    @classmethod
    def from_json(cls, obj: dict, bound: int = DEFAULT_ORDER_BOUND) -> PermGroup:
        try:
            degree = int(obj["degree"])
            gens = [Perm(tuple(g)) for g in obj["generators"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed group JSON: {exc}") from exc
        return generate(degree, gens, bound)


def _elements(k: PermGroup | Iterable[Perm]) -> frozenset[Perm]:
    return k.elements if isinstance(k, PermGroup) else frozenset(k)


def _generators_of(elems: frozenset[Perm]) -> list[Perm]:
    # a short generating list is enough for closure; all elements also works
    gens, span = [], None
    for g in sorted(elems):
        if span is None or g not in span:
            gens.append(g)
            span = _closure(g.degree, gens)
        if len(span) == len(elems):
            break
    return gens


def is_closed(elems: frozenset[Perm]) -> bool:
    if not elems:
        return False
    return all(a * b in elems for a in elems for b in elems)


def generate(degree: int, gens: Sequence[Perm], bound: int = DEFAULT_ORDER_BOUND) -> PermGroup:
    gens = [g if isinstance(g, Perm) else Perm(tuple(g)) for g in gens]
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator {g} does not have degree {degree}")
    return PermGroup(degree, gens, _closure(degree, gens, bound))


def subgroup_classes(g: PermGroup) -> tuple[SubgroupClass, ...]:
    return g.subgroup_classes


def normalizer(g: PermGroup, k: PermGroup | Iterable[Perm]) -> PermGroup:
    elems = _elements(k)
    if not g.is_subgroup(elems):
        raise ValueError("k is not a subgroup of g")
    return g.subgroup(h for h in g.elements if frozenset(h.conj(x) for x in elems) == elems)


def left_cosets(g: PermGroup, k: PermGroup | Iterable[Perm]) -> list[tuple[Perm, frozenset[Perm]]]:
    """(representative, coset) pairs for the left cosets xK, in sorted order."""
    kel = _elements(k)
    seen: set[Perm] = set()
    out = []
    for x in g.sorted_elements:
        if x in seen:
            continue
        coset = frozenset(x * y for y in kel)
        seen |= coset
        out.append((x, coset))
    return out


def fixed_coset_count(g: PermGroup, k: PermGroup | Iterable[Perm], l: PermGroup | Iterable[Perm]) -> int:
    """|(G/K)^L|: cosets xK with x^-1 L x inside K."""
    kel, lel = _elements(k), _elements(l)
    if not g.is_subgroup(kel) or not g.is_subgroup(lel):
        raise ValueError("fixed_coset_count needs two subgroups")
    count = 0
    for x, _ in left_cosets(g, kel):
        xi = x.inverse()
        if all(xi * y * x in kel for y in lel):
            count += 1
    return count


def extend_action(g: PermGroup, gen_images: Sequence[Sequence[int]],
                  points: int | None = None) -> dict[Perm, tuple[int, ...]]:
    """Extend generator images to a homomorphism from ``g`` into Sym(points).

    Walks the whole Cayley graph, so any relation the images break is caught.
    ``points`` is only needed when ``g`` has no generators.
    """
    if len(gen_images) != len(g.generators):
        raise ValueError(f"expected images for {len(g.generators)} generators, got {len(gen_images)}")
    gen_perms = []
    npts = points
    for imgs in gen_images:
        p = Perm(tuple(imgs))
        if npts is not None and p.degree != npts:
            raise ValueError("generator images act on different point counts")
        npts = p.degree
        gen_perms.append(p)
    if npts is None:
        npts = 0
    rho = {g.identity: Perm.identity(npts)}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, ps in zip(g.generators, gen_perms):
                y = s * x
                img = ps * rho[x]
                if y in rho:
                    if rho[y] != img:
                        raise ValueError("point images do not respect the group relations")
                else:
                    rho[y] = img
                    nxt.append(y)
        frontier = nxt
    return {x: p.images for x, p in rho.items()}


def orbit_types(g: PermGroup, action: Sequence[Sequence[int]] | dict[Perm, tuple[int, ...]],
                points: int | None = None) -> Counter:
    """Number of orbits per stabilizer class: ``{class index: orbit count}``."""
    rho = action if isinstance(action, dict) else extend_action(g, action, points)
    npts = len(next(iter(rho.values()))) if rho else 0
    seen = [False] * npts
    out: Counter = Counter()
    for p in range(npts):
        if seen[p]:
            continue
        for img in rho.values():
            seen[img[p]] = True
        stab = frozenset(x for x, img in rho.items() if img[p] == p)
        out[g.class_of(stab)] += 1
    return out


def coset_action(g: PermGroup, k: PermGroup | Iterable[Perm]) -> list[tuple[int, ...]]:
    """Generator images for the left-multiplication action on G/K."""
    cosets = left_cosets(g, k)
    where = {}
    for i, (_, coset) in enumerate(cosets):
        for y in coset:
            where[y] = i
    return [tuple(where[s * x] for x, _ in cosets) for s in g.generators]


def product_action(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Diagonal action on pairs; pair (i, j) is point ``i * len_b + j``."""
    na = len(a[0]) if a else 0
    nb = len(b[0]) if b else 0
    return [tuple(pa[i] * nb + pb[j] for i in range(na) for j in range(nb)) for pa, pb in zip(a, b)]


# fixture groups

def trivial_group() -> PermGroup:
    return generate(1, [])


def cyclic(n: int) -> PermGroup:
    return generate(n, [Perm.from_cycles(n, range(n))] if n > 1 else [])


def klein_four() -> PermGroup:
    return generate(4, [Perm.from_cycles(4, (0, 1), (2, 3)), Perm.from_cycles(4, (0, 2), (1, 3))])


def symmetric(n: int) -> PermGroup:
    if n < 2:
        return generate(max(n, 1), [])
    return generate(n, [Perm.from_cycles(n, (0, 1)), Perm.from_cycles(n, range(n))])


def alternating(n: int) -> PermGroup:
    gens = [Perm.from_cycles(n, (0, 1, i)) for i in range(2, n)]
    return generate(n, gens)


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = Perm.from_cycles(n, range(n))
    ref = Perm(tuple((-i) % n for i in range(n)))
    return generate(n, [rot, ref])


def quaternion() -> PermGroup:
    """Q8 in its regular representation on 8 points."""
    # points: 1, i, j, k, -1, -i, -j, -k  ->  0..7; left multiplication by i and j
    i_mul = Perm((1, 4, 3, 6, 5, 0, 7, 2))
    j_mul = Perm((2, 7, 4, 1, 6, 3, 0, 5))
    return generate(8, [i_mul, j_mul])


def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    """A x B acting on the disjoint union of their point sets."""
    n = a.degree + b.degree
    gens = [Perm(g.images + tuple(range(a.degree, n))) for g in a.generators]
    gens += [Perm(tuple(range(a.degree)) + tuple(a.degree + i for i in g.images)) for g in b.generators]
    return generate(n, gens)


FIXTURE_GROUPS = {
    "trivial": trivial_group,
    "Z2": lambda: cyclic(2),
    "Z3": lambda: cyclic(3),
    "Z4": lambda: cyclic(4),
    "Z2xZ2": klein_four,
    "S3": lambda: symmetric(3),
    "D4": lambda: dihedral(4),
    "Q8": quaternion,
    "A4": lambda: alternating(4),
    "S4": lambda: symmetric(4),
}
