"""Burnside ring, its mod-2 quotient V_H, and G-Euler stratum diagrams.

Burnside elements are integer vectors over the canonical subgroup-class order
of the group (see :attr:`PermGroup.subgroup_classes`).  Class order refines
subconjugacy, so the table of marks is lower triangular and every solve
against it is a back substitution.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from eulerhom import stratifold
from eulerhom.permgroups import PermGroup, SubgroupClass, extend_action, left_cosets, orbit_types
from eulerhom.stratifold import Component, FiberRecord, StratumDiagram, ValidationReport
from eulerhom.z2linalg import BitMatrix, solve


@dataclass(frozen=True)
class MarksMatrix:
    group: PermGroup
    entries: tuple[tuple[int, ...], ...]  # entries[K][L] = |(H/K)^L|

    @property
    def size(self) -> int:
        return len(self.entries)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))

    def is_lower_triangular(self) -> bool:
        return all(self.entries[k][l] == 0 for k in range(self.size) for l in range(k + 1, self.size))

    def labels(self) -> list[str]:
        return [c.label for c in self.group.subgroup_classes]


@lru_cache(maxsize=None)
def marks_matrix(h: PermGroup) -> MarksMatrix:
    classes = h.subgroup_classes
    rows = []
    for kc in classes:
        k = kc.representative.elements
        cosets = left_cosets(h, k)
        row = []
        for lc in classes:
            lel = lc.representative.elements
            n = 0
            for x, _ in cosets:
                xi = x.inverse()
                if all(xi * y * x in k for y in lel):
                    n += 1
            row.append(n)
        rows.append(tuple(row))
    return MarksMatrix(h, tuple(rows))


@lru_cache(maxsize=None)
def fixed_coset_types(h: PermGroup, k_index: int, l_index: int) -> Counter:
    """Split (H/K)^L by the K-class of x^-1 L x: ``{class index in K: coset count}``."""
    kgroup = h.subgroup_classes[k_index].representative
    k = kgroup.elements
    lel = h.subgroup_classes[l_index].representative.elements
    out: Counter = Counter()
    for x, _ in left_cosets(h, k):
        xi = x.inverse()
        conj = frozenset(xi * y * x for y in lel)
        if conj <= k:
            out[kgroup.class_of(conj)] += 1
    return out


@dataclass(frozen=True)
class BurnsideElement:
    group: PermGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != len(self.group.subgroup_classes):
            raise ValueError("coefficient vector does not match the number of subgroup classes")

    def _same(self, other: BurnsideElement) -> None:
        if other.group != self.group:
            raise ValueError("Burnside elements over different groups")

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._same(other)
        return BurnsideElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(self.group, tuple(-a for a in self.coeffs))

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        return self + (-other)

    def __rmul__(self, n: int) -> BurnsideElement:
        return BurnsideElement(self.group, tuple(n * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return burnside_mul(self, other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def zero(h: PermGroup) -> BurnsideElement:
    return BurnsideElement(h, (0,) * len(h.subgroup_classes))


def orbit(h: PermGroup, k_index: int) -> BurnsideElement:
    """The transitive H-set [H/K] for the class with index ``k_index``."""
    coeffs = [0] * len(h.subgroup_classes)
    coeffs[k_index] = 1
    return BurnsideElement(h, tuple(coeffs))


def unit(h: PermGroup) -> BurnsideElement:
    return orbit(h, h.whole_class())


def ch(a: BurnsideElement) -> tuple[int, ...]:
    m = marks_matrix(a.group).entries
    n = len(m)
    return tuple(sum(a.coeffs[k] * m[k][l] for k in range(n)) for l in range(n))


def from_character(h: PermGroup, vec: Sequence[int]) -> BurnsideElement:
    """Inverse of :func:`ch`; raises if ``vec`` is not the character of an integral element."""
    m = marks_matrix(h).entries
    n = len(m)
    if len(vec) != n:
        raise ValueError(f"character vector has length {len(vec)}, expected {n}")
    a = [0] * n
    for l in range(n - 1, -1, -1):
        rest = vec[l] - sum(a[k] * m[k][l] for k in range(l + 1, n))
        q, r = divmod(rest, m[l][l])
        if r:
            raise ValueError("vector is not in the image of the character map")
        a[l] = q
    return BurnsideElement(h, tuple(a))


def burnside_mul(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    a._same(b)
    return from_character(a.group, tuple(x * y for x, y in zip(ch(a), ch(b))))


@dataclass(frozen=True)
class VHElement:
    group: PermGroup
    bits: tuple[int, ...]  # one bit per class in vh_basis(group)

    def __post_init__(self):
        if len(self.bits) != len(vh_basis(self.group)):
            raise ValueError("bit vector does not match dim V_H")

    def is_zero(self) -> bool:
        return not any(self.bits)

    def __add__(self, other: VHElement) -> VHElement:
        return VHElement(self.group, tuple(a ^ b for a, b in zip(self.bits, other.bits)))


def vh_basis(h: PermGroup) -> list[SubgroupClass]:
    """Classes (K) with |N_H K / K| odd."""
    return [c for c in h.subgroup_classes if c.normalizer_index % 2 == 1]


def project_vh(a: BurnsideElement) -> VHElement:
    return VHElement(a.group, tuple(a.coeffs[c.index] % 2 for c in vh_basis(a.group)))


def vh_of_orbit(g: PermGroup, h: PermGroup) -> list[SubgroupClass]:
    """Basis of the coefficient group of the orbit G/H, which is V_H."""
    if not g.is_subgroup(h):
        raise ValueError("h is not a subgroup of g")
    return vh_basis(h)


# The x_K-basis square: i([H/K]) = |NK/K| x_K, psi(x_K) = ch([H/K]) / |NK/K|.

def psi_matrix(h: PermGroup) -> tuple[tuple[int, ...], ...]:
    """Rows: psi(x_K) in the [H/L] coordinates; unitriangular."""
    m = marks_matrix(h)
    out = []
    for k, row in enumerate(m.entries):
        d = m.entries[k][k]
        if any(x % d for x in row):
            raise ArithmeticError("marks row is not divisible by its diagonal")
        out.append(tuple(x // d for x in row))
    return tuple(out)


def pr_i(a: BurnsideElement) -> tuple[int, ...]:
    """pr(i(a)) in the Z/2 x_K coordinates."""
    return tuple((c.normalizer_index * a.coeffs[c.index]) % 2 for c in a.group.subgroup_classes)


def iota_bar(v: VHElement) -> tuple[int, ...]:
    out = [0] * len(v.group.subgroup_classes)
    for bit, c in zip(v.bits, vh_basis(v.group)):
        out[c.index] = bit
    return tuple(out)


def psi_bar_inverse(h: PermGroup, bits: Sequence[int]) -> tuple[int, ...]:
    """Solve psi-bar(y) = bits over GF(2); y in x_K coordinates."""
    p = psi_matrix(h)
    n = len(p)
    # column K of the system is psi(x_K)
    a = BitMatrix.from_rows([[p[k][l] % 2 for k in range(n)] for l in range(n)], n)
    y = solve(a, [b % 2 for b in bits])
    if y is None:
        raise ArithmeticError("psi-bar is not invertible")
    return tuple(y)


def vh_from_character_mod2(h: PermGroup, bits: Sequence[int]) -> VHElement:
    """The V_H element whose character mod 2 is ``bits``, via the x_K square."""
    y = psi_bar_inverse(h, bits)
    for c in h.subgroup_classes:
        if c.normalizer_index % 2 == 0 and y[c.index]:
            raise ValueError("character parity vector is not the image of an element of V_H")
    return VHElement(h, tuple(y[c.index] for c in vh_basis(h)))


# equivariant Euler characteristic of finite H-CW complexes

@dataclass(frozen=True)
class CellOrbitData:
    """All d-cells of one dimension and how the generators permute them."""

    dim: int
    points: int
    action: tuple[tuple[int, ...], ...]  # images per generator

    @classmethod
    def from_json(cls, h: PermGroup, obj: dict) -> CellOrbitData:
        try:
            dim, points = int(obj["dim"]), int(obj["points"])
            raw = {int(k): list(v) for k, v in (obj.get("action") or {}).items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ValueError(f"malformed cell data: {exc}") from exc
        return cls.make(h, dim, points, raw)

    @classmethod
    def make(cls, h: PermGroup, dim: int, points: int, action: Mapping[int, Sequence[int]]) -> CellOrbitData:
        """Generators missing from ``action`` act trivially."""
        if dim < 0 or points < 0:
            raise ValueError("cell dimension and count must be nonnegative")
        imgs = []
        for gi in range(len(h.generators)):
            img = tuple(action.get(gi, range(points)))
            if len(img) != points:
                raise ValueError(f"generator {gi} moves {len(img)} cells but there are {points}")
            imgs.append(img)
        extra = set(action) - set(range(len(h.generators)))
        if extra:
            raise ValueError(f"action names unknown generators {sorted(extra)}")
        return cls(dim, points, tuple(imgs))


def equivariant_chi(h: PermGroup, cells: Sequence[CellOrbitData]) -> BurnsideElement:
    """chi^H(X) = sum over (K) of chi(H \\ X_(K)) [H/K], by counting cell orbits."""
    coeffs = [0] * len(h.subgroup_classes)
    for c in cells:
        if c.points == 0:
            continue
        rho = extend_action(h, c.action, c.points)
        for k, n in orbit_types(h, rho).items():
            coeffs[k] += (-1) ** c.dim * n
    return BurnsideElement(h, tuple(coeffs))


# G-stratum diagrams

def _classes_of(h: PermGroup, k_index: int) -> int:
    return len(h.subgroup_classes[k_index].representative.subgroup_classes)


@dataclass(frozen=True)
class GPiece:
    """An orbit-type piece of one stratum.

    ``chi`` is chi of the quotient piece; ``isotropy`` indexes the acting
    group's classes.  ``fiber`` and ``fiber_full`` hold chi((F \\ F0)^M) and
    chi(F^M) for the classes M of the isotropy representative K, and
    ``fixed_dims[M]`` is the dimension of the M-fixed part of the piece
    (``None`` when not annotated).
    """

    chi: int
    isotropy: int
    fiber: tuple[int, ...]
    fiber_full: tuple[int, ...]
    fixed_dims: tuple[int | None, ...]

    def sort_key(self):
        return (self.chi, self.isotropy, self.fiber, self.fiber_full,
                tuple(-1 if d is None else d for d in self.fixed_dims))

    def shifted(self, by: int = 1) -> GPiece:
        return GPiece(self.chi, self.isotropy, self.fiber, self.fiber_full,
                      tuple(None if d is None else d + by for d in self.fixed_dims))


def trivial_piece(h: PermGroup, k_index: int, chi: int, fixed_dims: Sequence[int | None]) -> GPiece:
    n = _classes_of(h, k_index)
    return GPiece(chi, k_index, (0,) * n, (1,) * n, tuple(fixed_dims))


@dataclass(frozen=True)
class GStratumDiagram:
    group: PermGroup
    dim: int
    strata: tuple[tuple[GPiece, ...], ...]
    boundary: GStratumDiagram | None = None

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(tuple(s) for s in self.strata))
        h = self.group
        ncls = len(h.subgroup_classes)
        if self.dim < 0 or len(self.strata) != self.dim + 1:
            raise ValueError(f"a {self.dim}-dimensional diagram needs {self.dim + 1} strata")
        fixed = []
        for i, stratum in enumerate(self.strata):
            row = []
            for p in stratum:
                if not 0 <= p.isotropy < ncls:
                    raise ValueError(f"isotropy class {p.isotropy} out of range")
                n = _classes_of(h, p.isotropy)
                if len(p.fiber) != n or len(p.fiber_full) != n or len(p.fixed_dims) != n:
                    raise ValueError("fiber and fixed-dimension vectors must cover the isotropy group's classes")
                dims = list(p.fixed_dims)
                if dims[0] is None:
                    dims[0] = i
                if dims[0] != i:
                    raise ValueError("the trivial subgroup fixes the whole piece")
                if any(d is not None and not 0 <= d <= i for d in dims):
                    raise ValueError(f"fixed dimensions of a stratum-{i} piece must lie in 0..{i}")
                if i == self.dim and (any(p.fiber) or any(x != 1 for x in p.fiber_full)):
                    raise ValueError("top-stratum pieces must have trivial fiber")
                row.append(GPiece(p.chi, p.isotropy, tuple(p.fiber), tuple(p.fiber_full), tuple(dims)))
            fixed.append(tuple(row))
        object.__setattr__(self, "strata", tuple(fixed))
        b = self.boundary
        if b is not None:
            if b.group != h or b.dim != self.dim - 1 or b.boundary is not None:
                raise ValueError("boundary must be a closed diagram of one dimension less over the same group")

    @property
    def closed(self) -> bool:
        return self.boundary is None

    def pieces(self):
        for i, stratum in enumerate(self.strata):
            for k, p in enumerate(stratum):
                yield i, k, p

    def canonical(self) -> GStratumDiagram:
        b = self.boundary.canonical() if self.boundary is not None else None
        strata = tuple(tuple(sorted(s, key=GPiece.sort_key)) for s in self.strata)
        return GStratumDiagram(self.group, self.dim, strata, b)

    def same_shape(self, other: GStratumDiagram) -> bool:
        return self.canonical() == other.canonical()

    def to_json(self, with_group: bool = True) -> dict:
        out = {
            "dim": self.dim,
            "strata": [[{
                "chi": p.chi, "isotropy": p.isotropy, "fiber": list(p.fiber), "fiber_full": list(p.fiber_full),
                "fixed_dims": {str(m): d for m, d in enumerate(p.fixed_dims) if d is not None},
            } for p in s] for s in self.strata],
            "boundary": self.boundary.to_json(False) if self.boundary is not None else None,
        }
        if with_group:
            out = {"group": self.group.to_json(), **out}
        return out

    @classmethod
    def from_json(cls, obj: dict, group: PermGroup | None = None) -> GStratumDiagram:
        try:
            h = group if group is not None else PermGroup.from_json(obj["group"])
            strata = []
            for s in obj["strata"]:
                row = []
                for p in s:
                    k = int(p["isotropy"])
                    if not 0 <= k < len(h.subgroup_classes):
                        raise ValueError(f"isotropy class {k} out of range")
                    n = _classes_of(h, k)
                    dims: list[int | None] = [None] * n
                    for m, d in (p.get("fixed_dims") or {}).items():
                        dims[int(m)] = int(d)
                    fiber = tuple(int(x) for x in p.get("fiber", [0] * n))
                    full = tuple(int(x) for x in p.get("fiber_full", [x + 1 for x in fiber]))
                    row.append(GPiece(int(p["chi"]), k, fiber, full, tuple(dims)))
                strata.append(tuple(row))
            b = obj.get("boundary")
            return cls(h, int(obj["dim"]), tuple(strata), cls.from_json(b, h) if b is not None else None)
        except (KeyError, TypeError, IndexError, AttributeError) as exc:
            raise ValueError(f"malformed G-stratum diagram: {exc}") from exc


def g_empty(h: PermGroup, n: int) -> GStratumDiagram:
    return GStratumDiagram(h, n, ((),) * (n + 1))


def g_orbit(h: PermGroup, k_index: int, n: int = 0) -> GStratumDiagram:
    """The 0-dimensional H-manifold H/K, padded to dimension n."""
    piece = trivial_piece(h, k_index, 1, (0,) * _classes_of(h, k_index))
    return GStratumDiagram(h, n, ((piece,),) + ((),) * n)


def g_point(h: PermGroup, n: int = 0) -> GStratumDiagram:
    """``pt_n`` with the trivial action."""
    return g_orbit(h, h.whole_class(), n)


def g_manifold(h: PermGroup, dim: int, pieces: Sequence[tuple[int, int, Sequence[int | None]]]) -> GStratumDiagram:
    """Closed H-manifold given by orbit-type pieces ``(chi, isotropy, fixed_dims)``."""
    top = tuple(trivial_piece(h, k, chi, dims) for chi, k, dims in pieces)
    return GStratumDiagram(h, dim, ((),) * dim + (top,))


def g_pad(s: GStratumDiagram, n: int) -> GStratumDiagram:
    if not s.closed or n < s.dim:
        raise ValueError("padding needs a closed diagram and n >= dim")
    return GStratumDiagram(s.group, n, s.strata + ((),) * (n - s.dim))


def g_union(s: GStratumDiagram, t: GStratumDiagram) -> GStratumDiagram:
    if s.group != t.group or s.dim != t.dim or s.closed != t.closed:
        raise ValueError("disjoint union needs equal groups, dimensions and boundary status")
    b = None if s.closed else g_union(s.boundary, t.boundary)
    return GStratumDiagram(s.group, s.dim, tuple(a + c for a, c in zip(s.strata, t.strata)), b)


def diagram_chi(s: GStratumDiagram) -> BurnsideElement:
    """chi^H of the diagram, assembled from its orbit-type pieces."""
    coeffs = [0] * len(s.group.subgroup_classes)
    for _, _, p in s.pieces():
        coeffs[p.isotropy] += p.chi
    return BurnsideElement(s.group, tuple(coeffs))


def g_cone(s: GStratumDiagram) -> GStratumDiagram:
    """Cone with the cone point fixed by the whole group; boundary ``s``."""
    if not s.closed:
        raise ValueError("the cone is only defined here for closed diagrams")
    h = s.group
    link = ch(diagram_chi(s))
    apex = GPiece(1, h.whole_class(), link, tuple(x + 1 for x in link), (0,) * len(link))
    strata = ((apex,),) + tuple(tuple(p.shifted() for p in st) for st in s.strata)
    return GStratumDiagram(h, s.dim + 1, strata, s)


def g_cylinder(s: GStratumDiagram) -> GStratumDiagram:
    """s x [0, 1] with the trivial action on the interval."""
    if not s.closed:
        raise ValueError("cylinders are built on closed diagrams")
    strata = ((),) + tuple(tuple(p.shifted() for p in st) for st in s.strata)
    return GStratumDiagram(s.group, s.dim + 1, strata, g_union(s, s))


def g_glue(t1: GStratumDiagram, t2: GStratumDiagram) -> GStratumDiagram:
    if t1.closed or t2.closed or t1.group != t2.group or t1.dim != t2.dim:
        raise ValueError("glue needs two bounded diagrams of equal dimension over the same group")
    if not t1.boundary.same_shape(t2.boundary):
        raise ValueError("boundaries do not match")
    # seam pieces enter with -chi so that chi^H stays additive
    seam = ((),) + tuple(tuple(GPiece(-p.chi, p.isotropy, p.fiber, p.fiber_full, p.shifted().fixed_dims)
                               for p in st) for st in t1.boundary.strata)
    strata = tuple(a + b + c for a, b, c in zip(t1.strata, t2.strata, seam))
    return GStratumDiagram(t1.group, t1.dim, strata)


def _isotropy_group(h: PermGroup, k_index: int) -> PermGroup:
    return h.subgroup_classes[k_index].representative


def validate_g_euler(s: GStratumDiagram) -> ValidationReport:
    """Every fiber's chi^{G_x}(F \\ F0) must vanish in V_{G_x}."""
    failures = []
    for where, d in (("interior", s), ("boundary", s.boundary)):
        if d is None:
            continue
        for i, k, p in d.pieces():
            kgroup = _isotropy_group(s.group, p.isotropy)
            if not project_vh(from_character(kgroup, p.fiber)).is_zero():
                failures.append((where, i, k))
    return ValidationReport(tuple(failures))


def _require_g_euler(s: GStratumDiagram) -> None:
    report = validate_g_euler(s)
    if not report.ok:
        raise stratifold.NotEulerError("diagram is not G-Euler: " + "; ".join(
            f"{w} stratum {i} piece {k}" for w, i, k in report.failures))


def _fixed_closed(s: GStratumDiagram, l_index: int) -> StratumDiagram:
    h = s.group
    out: list[list[Component]] = [[] for _ in range(s.dim + 1)]
    for i, k, p in s.pieces():
        for m, count in sorted(fixed_coset_types(h, p.isotropy, l_index).items()):
            j = p.fixed_dims[m]
            if j is None:
                raise ValueError(f"stratum {i} piece {k} has a fixed part for class {m} but no fixed-dimension annotation")
            fib = FiberRecord(f=p.fiber_full[m] % 2, e=p.fiber[m] % 2)
            out[j].append(Component((p.chi * count) % 2, fib))
    return StratumDiagram(s.dim, tuple(tuple(x) for x in out))


def fixed_diagram(s: GStratumDiagram, l_index: int) -> StratumDiagram:
    """The L-fixed stratifold S^L as a non-equivariant diagram."""
    if not 0 <= l_index < len(s.group.subgroup_classes):
        raise ValueError(f"subgroup class {l_index} out of range")
    inner = _fixed_closed(s, l_index)
    if s.closed:
        return inner
    return StratumDiagram(s.dim, inner.strata, _fixed_closed(s.boundary, l_index))


def underlying(s: GStratumDiagram) -> StratumDiagram:
    return fixed_diagram(s, s.group.trivial_class())


def classify_equivariant_pt(s: GStratumDiagram) -> VHElement:
    """Class of a closed G-Euler diagram in the advanced coefficient group V_H."""
    if not s.closed:
        raise ValueError("only closed diagrams have a bordism class")
    _require_g_euler(s)
    return project_vh(diagram_chi(s))


def classify_naive_equivariant_pt(s: GStratumDiagram) -> int:
    if not s.closed:
        raise ValueError("only closed diagrams have a bordism class")
    return stratifold.classify_pt(underlying(s))


def boundary_vh(s: GStratumDiagram) -> VHElement:
    """chi-bar^H of the boundary, read off the boundary's orbit data."""
    if s.closed:
        raise ValueError("boundary_vh needs a diagram with boundary")
    _require_g_euler(s)
    return project_vh(diagram_chi(s.boundary))


def boundary_vh_via_fixed_points(s: GStratumDiagram) -> VHElement:
    """chi-bar^H of the boundary from chi((dS)^L) mod 2 of every fixed stratifold."""
    if s.closed:
        raise ValueError("boundary_vh_via_fixed_points needs a diagram with boundary")
    _require_g_euler(s)
    bits = [stratifold.boundary_chi_check(fixed_diagram(s, c.index)) for c in s.group.subgroup_classes]
    return vh_from_character_mod2(s.group, bits)
