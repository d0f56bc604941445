"""Values of Euler homology: classes in H_*(X; Z/2) ⊗ Z/2[t].

Homology classes are chain-level cycle representatives on a fixed reference
complex, packed as ints (bit k = k-th simplex of that degree).  Two classes
are equal when their difference is a boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from eulerhom.simplicial import SimplicialComplex, betti_mod2, euler_characteristic
from eulerhom.stratifold import StratumDiagram, classify_pt
from eulerhom.z2linalg import bits_to_int, int_to_bits, solve_packed


def is_cycle(x: SimplicialComplex, degree: int, vec: int) -> bool:
    return x.boundary_matrix(degree).matvec(vec) == 0


def is_boundary(x: SimplicialComplex, degree: int, vec: int) -> bool:
    if vec == 0:
        return True
    return solve_packed(x.boundary_matrix(degree + 1), vec) is not None


def _as_vector(x: SimplicialComplex, degree: int, v: Sequence[int] | int) -> int:
    n = x.count(degree)
    if isinstance(v, int):
        if v < 0 or v >> n:
            raise ValueError(f"packed vector does not fit the {n} {degree}-simplices")
        return v
    if len(v) != n:
        raise ValueError(f"degree-{degree} vector has length {len(v)}, complex has {n} {degree}-simplices")
    return bits_to_int(v)


@dataclass(frozen=True)
class PolyClass:
    """Finite sum of terms ``class_j ⊗ t^k`` keyed by ``(j, k)``.

    Zero chains are dropped, so ``terms`` only lists nonzero representatives
    (which may still be boundaries).
    """

    complex: SimplicialComplex
    terms: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        cleaned = {}
        for (j, k), vec in self.terms:
            if k < 0:
                raise ValueError("t-exponents are nonnegative")
            if vec >> self.complex.count(j) or vec < 0:
                raise ValueError(f"vector for degree {j} is too long")
            if not is_cycle(self.complex, j, vec):
                raise ValueError(f"degree-{j} chain is not a cycle")
            cleaned[(j, k)] = cleaned.get((j, k), 0) ^ vec
        object.__setattr__(self, "terms", tuple(sorted((key, v) for key, v in cleaned.items() if v)))

    @classmethod
    def from_mapping(cls, x: SimplicialComplex, terms: Mapping[tuple[int, int], Sequence[int] | int]) -> PolyClass:
        return cls(x, tuple(((j, k), _as_vector(x, j, v)) for (j, k), v in terms.items()))

    @classmethod
    def zero(cls, x: SimplicialComplex) -> PolyClass:
        return cls(x, ())

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def coefficient(self, j: int, k: int) -> list[int]:
        return int_to_bits(self.as_dict().get((j, k), 0), self.complex.count(j))

    def __add__(self, other: PolyClass) -> PolyClass:
        if other.complex != self.complex:
            raise ValueError("classes live on different complexes")
        return PolyClass(self.complex, self.terms + other.terms)

    def is_zero(self) -> bool:
        """True when every term is homologous to zero."""
        return all(is_boundary(self.complex, j, v) for (j, _), v in self.terms)

    def homologous(self, other: PolyClass) -> bool:
        return (self + other).is_zero()


@dataclass(frozen=True)
class SWData:
    """Push-forwards ``f_* PD w_{i-j}(M)`` of an i-manifold's Stiefel-Whitney classes.

    ``classes[j]`` is a degree-j chain on the target complex; missing degrees
    are zero.
    """

    manifold_dim: int
    classes: tuple[tuple[int, int], ...]  # (j, packed chain)

    def __post_init__(self):
        for j, _ in self.classes:
            if not 0 <= j <= self.manifold_dim:
                raise ValueError(f"class degree {j} outside 0..{self.manifold_dim}")

    @classmethod
    def from_mapping(cls, target: SimplicialComplex, dim: int, classes: Mapping[int, Sequence[int] | int]) -> SWData:
        return cls(dim, tuple(sorted((j, _as_vector(target, j, v)) for j, v in classes.items())))

    def __xor__(self, other: SWData) -> SWData:
        """Disjoint union of two singular manifolds of the same dimension."""
        if other.manifold_dim != self.manifold_dim:
            raise ValueError("disjoint union needs equal manifold dimensions")
        merged = dict(self.classes)
        for j, v in other.classes:
            merged[j] = merged.get(j, 0) ^ v
        return SWData(self.manifold_dim, tuple(sorted(merged.items())))

    def to_json(self, target: SimplicialComplex) -> dict:
        return {"dim": self.manifold_dim,
                "classes": {str(j): int_to_bits(v, target.count(j)) for j, v in self.classes}}

    @classmethod
    def from_json(cls, obj: dict, target: SimplicialComplex) -> SWData:
        try:
            classes = {int(j): list(v) for j, v in obj.get("classes", {}).items()}
            return cls.from_mapping(target, int(obj["dim"]), classes)
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed SW data: {exc}") from exc


def eh_dims(x: SimplicialComplex, n_max: int) -> list[int]:
    """dim Eh_n(X) for n = 0..n_max, as partial sums of the mod-2 Betti numbers."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    betti = betti_mod2(x)
    out, acc = [], 0
    for n in range(n_max + 1):
        if n < len(betti):
            acc += betti[n]
        out.append(acc)
    return out


def phi_point(s: StratumDiagram) -> int:
    """Image of a closed manifold (or Euler diagram) in Eh_n(pt) = Z/2."""
    return classify_pt(s)


def mu(sw: SWData, n: int, target: SimplicialComplex) -> PolyClass:
    """[M^i, f] ⊗ t^(n-i)  ↦  Σ_j f_* PD w_{i-j}(M) ⊗ t^(n-j)."""
    if n < sw.manifold_dim:
        raise ValueError(f"degree {n} is below the manifold dimension {sw.manifold_dim}")
    terms = []
    for j, vec in sw.classes:
        if vec >> target.count(j):
            raise ValueError(f"degree-{j} class does not fit the target complex")
        if not is_cycle(target, j, vec):
            raise ValueError(f"degree-{j} class is not a cycle in the target")
        terms.append(((j, n - j), vec))
    return PolyClass(target, tuple(terms))


def module_action(chi_n: int, dim_n: int, c: PolyClass) -> PolyClass:
    """Action of [N] through [N] ↦ chi(N) t^dim(N)."""
    if dim_n < 0:
        raise ValueError("dim_n must be nonnegative")
    if chi_n % 2 == 0:
        return PolyClass.zero(c.complex)
    return PolyClass(c.complex, tuple(((j, k + dim_n), v) for (j, k), v in c.terms))


# Stiefel-Whitney fixtures.  Total classes of the fixture manifolds:
#   pt, S^n, T^2: w = 1;  RP^2: w = 1 + a + a^2;  Klein bottle: w = 1 + w1, w1^2 = 0.
# The top class evaluates to chi mod 2 (checked against the simplicial chi).
TOP_SW_NUMBER = {"point": 1, "circle": 0, "sphere2": 0, "sphere3": 0, "rp2": 1, "torus": 0, "klein": 0}


def fundamental_cycle(m: SimplicialComplex) -> int:
    """Sum of all top simplices, the mod-2 fundamental class of a closed manifold."""
    return (1 << m.count(m.dim)) - 1


def sw_to_point(name: str, m: SimplicialComplex) -> SWData:
    """SW data of the constant map ``m -> pt``; only degree 0 survives."""
    from eulerhom.simplicial import point

    return SWData.from_mapping(point(), m.dim, {0: [TOP_SW_NUMBER[name]]})


def nonzero_h1_cycle(m: SimplicialComplex) -> int:
    """Some 1-cycle that is not a boundary (first one found in kernel order)."""
    from eulerhom.z2linalg import kernel_basis

    for v in kernel_basis(m.boundary_matrix(1)):
        if not is_boundary(m, 1, v):
            return v
    raise ValueError("H_1 vanishes")


def sw_identity(name: str, m: SimplicialComplex) -> SWData:
    """SW data of the identity map of a fixture manifold.

    Only fixtures whose Poincaré duals are pinned down by H_*(M; Z/2) are
    covered: trivial tangent classes (pt, spheres, torus) and RP^2, where
    PD w1 is the unique nonzero class in H_1 and PD w2 is a point.
    """
    i = m.dim
    classes = {i: fundamental_cycle(m)}
    if name == "rp2":
        classes[1] = nonzero_h1_cycle(m)
        classes[0] = 1
    elif name not in ("point", "circle", "sphere2", "sphere3", "torus"):
        raise KeyError(f"no identity-map SW fixture for {name!r}")
    return SWData.from_mapping(m, i, classes)


def chi_mod2(m: SimplicialComplex) -> int:
    return euler_characteristic(m) % 2
