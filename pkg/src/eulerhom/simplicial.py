"""Finite abstract simplicial complexes and their mod-2 homology."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from eulerhom.z2linalg import BitMatrix, rank


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed set of simplices, stored as sorted vertex tuples.

    ``simplices[d]`` holds the d-simplices in lexicographic order.  The empty
    complex has ``simplices == ()`` and dimension -1.
    """

    vertices: int
    simplices: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        seen = set()
        for d, bucket in enumerate(self.simplices):
            for s in bucket:
                if len(s) != d + 1 or tuple(sorted(set(s))) != s:
                    raise ValueError(f"malformed {d}-simplex {s}")
                if s[-1] >= self.vertices or s[0] < 0:
                    raise ValueError(f"simplex {s} uses a vertex outside 0..{self.vertices - 1}")
                if s in seen:
                    raise ValueError(f"duplicate simplex {s}")
                seen.add(s)
        for s in seen:
            if len(s) > 1:
                for face in combinations(s, len(s) - 1):
                    if face not in seen:
                        raise ValueError(f"face {face} of {s} is missing")

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.simplices)

    def facets(self) -> list[tuple[int, ...]]:
        covered = set()
        for bucket in self.simplices[1:]:
            for s in bucket:
                covered.update(combinations(s, len(s) - 1))
        return [s for bucket in self.simplices for s in bucket if s not in covered]

    @cached_property
    def _index(self) -> tuple[dict, ...]:
        return tuple({s: i for i, s in enumerate(b)} for b in self.simplices)

    def index_of(self, simplex: Sequence[int]) -> int:
        s = tuple(sorted(simplex))
        return self._index[len(s) - 1][s]

    def count(self, d: int) -> int:
        return len(self.simplices[d]) if 0 <= d <= self.dim else 0

    def boundary_matrix(self, d: int) -> BitMatrix:
        """Mod-2 boundary map from d-chains to (d-1)-chains.

        Rows index (d-1)-simplices and columns d-simplices; for ``d <= 0`` or
        ``d > dim`` the matrix is the appropriate zero map.
        """
        n_cols = self.count(d)
        n_rows = self.count(d - 1)
        if d <= 0 or n_cols == 0:
            return BitMatrix.zeros(n_rows, n_cols)
        rows = [0] * n_rows
        idx = self._index[d - 1]
        for j, s in enumerate(self.simplices[d]):
            for face in combinations(s, d):
                rows[idx[face]] |= 1 << j
        return BitMatrix(n_rows, n_cols, tuple(rows))

    def to_json(self) -> dict:
        out: dict = {"facets": [list(f) for f in self.facets()]}
        used = max((s[-1] for s in self.simplices[0]), default=-1) + 1 if self.simplices else 0
        if self.vertices != used:
            out["vertices"] = self.vertices  # unused trailing labels
        return out

    @classmethod
    def from_json(cls, obj: dict) -> SimplicialComplex:
        if not isinstance(obj, dict) or "facets" not in obj:
            raise ValueError('complex JSON must be an object with a "facets" list')
        facets = obj["facets"]
        if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
            raise ValueError('"facets" must be a list of vertex lists')
        return from_facets(facets, obj.get("vertices"))


def from_facets(facets: Iterable[Sequence[int]], vertices: int | None = None) -> SimplicialComplex:
    buckets: dict[int, set] = {}
    top = -1
    max_vertex = -1
    for facet in facets:
        f = list(facet)
        if not f:
            raise ValueError("facets must be nonempty")
        if not all(isinstance(v, int) and v >= 0 for v in f):
            raise ValueError(f"facet {f} must list nonnegative integer vertices")
        if len(set(f)) != len(f):
            raise ValueError(f"facet {f} repeats a vertex")
        f = tuple(sorted(f))
        max_vertex = max(max_vertex, f[-1])
        top = max(top, len(f) - 1)
        for k in range(1, len(f) + 1):
            buckets.setdefault(k - 1, set()).update(combinations(f, k))
    if vertices is None:
        vertices = max_vertex + 1
    elif vertices <= max_vertex:
        raise ValueError(f"vertex count {vertices} too small for vertex {max_vertex}")
    return SimplicialComplex(vertices, tuple(tuple(sorted(buckets[d])) for d in range(top + 1)))


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(c.f_vector()))


def betti_mod2(c: SimplicialComplex) -> tuple[int, ...]:
    ranks = [rank(c.boundary_matrix(d)) for d in range(c.dim + 2)]
    return tuple(c.count(d) - ranks[d] - ranks[d + 1] for d in range(c.dim + 1))


def cone_complex(c: SimplicialComplex) -> SimplicialComplex:
    apex = c.vertices
    facets = [f + (apex,) for f in c.facets()] or [(apex,)]
    return from_facets(facets, apex + 1)


def disjoint_union_complex(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    shift = a.vertices
    facets = a.facets() + [tuple(v + shift for v in f) for f in b.facets()]
    return from_facets(facets, a.vertices + b.vertices)


def suspension_complex(c: SimplicialComplex) -> SimplicialComplex:
    """Two cones on ``c`` glued along ``c``."""
    north, south = c.vertices, c.vertices + 1
    facets = [f + (p,) for f in c.facets() for p in (north, south)] or [(north,), (south,)]
    return from_facets(facets, c.vertices + 2)


def relabel(c: SimplicialComplex, perm: Sequence[int]) -> SimplicialComplex:
    if sorted(perm) != list(range(c.vertices)):
        raise ValueError("relabeling must be a permutation of the vertices")
    return from_facets([[perm[v] for v in f] for f in c.facets()], c.vertices)


# fixtures

def point() -> SimplicialComplex:
    return from_facets([[0]])


def sphere(n: int) -> SimplicialComplex:
    """Boundary of the (n+1)-simplex."""
    if n < 0:
        raise ValueError("sphere dimension must be nonnegative")
    return from_facets(list(combinations(range(n + 2), n + 1)))


def circle() -> SimplicialComplex:
    return sphere(1)


def projective_plane() -> SimplicialComplex:
    """Six-vertex RP^2 (the hemi-icosahedron)."""
    return from_facets([
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
        (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
    ])


def torus() -> SimplicialComplex:
    """Seven-vertex Möbius torus."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return from_facets(facets)


def klein_bottle() -> SimplicialComplex:
    """3x3 grid on the square with the vertical sides glued by a flip."""

    def v(i, j):
        j %= 3
        if i == 3:
            i, j = 0, (-j) % 3
        return 3 * i + j

    facets = []
    for i in range(3):
        for j in range(3):
            a, b, c, d = v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)
            facets.append((a, b, d))
            facets.append((a, c, d))
    return from_facets(facets)


FIXTURES = {
    "point": point,
    "circle": circle,
    "sphere2": lambda: sphere(2),
    "sphere3": lambda: sphere(3),
    "rp2": projective_plane,
    "torus": torus,
    "klein": klein_bottle,
}
