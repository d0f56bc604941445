"""Stratum diagrams: parity bookkeeping for compact p-stratifolds.

A diagram records, for every stratum ``T_i`` (i = 0..n), a list of pieces.
Each piece carries the parity of its Euler characteristic and the parities of
the local fiber ``F`` and of ``F \\ F0`` at its points.  The parities of the
pieces of a stratum add up to ``chi(T_i) mod 2``; a piece need not be a
connected component (gluing adds seam pieces, see :func:`glue`).

For a diagram with boundary, ``T_i`` already contains the collar
``(dT)_{i-1} x [0, eps)``.  ``chi_total`` optionally carries the parity of
``chi(T)`` as tracked independently by the constructors; it is what lets the
two stratum-sum formulas be checked against something.

Euler characteristics of open pieces (such as ``F \\ F0``) are compactly
supported; every identity used here holds mod 2 in either convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class NotEulerError(ValueError):
    """A diagram failed the Euler condition where an operation requires it."""


@dataclass(frozen=True, order=True)
class FiberRecord:
    f: int = 1  # chi(F) mod 2
    e: int = 0  # chi(F \ F0) mod 2

    def __post_init__(self):
        if self.f not in (0, 1) or self.e not in (0, 1):
            raise ValueError(f"fiber parities must be bits, got f={self.f!r} e={self.e!r}")

    @property
    def trivial(self) -> bool:
        return self.f == 1 and self.e == 0


TRIVIAL_FIBER = FiberRecord()


@dataclass(frozen=True, order=True)
class Component:
    chi: int
    fiber: FiberRecord = TRIVIAL_FIBER

    def __post_init__(self):
        if self.chi not in (0, 1):
            raise ValueError(f"component chi parity must be a bit, got {self.chi!r}")


@dataclass(frozen=True)
class StratumDiagram:
    dim: int
    strata: tuple[tuple[Component, ...], ...]
    boundary: StratumDiagram | None = None
    chi_total: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(tuple(s) for s in self.strata))
        if self.dim < 0:
            raise ValueError("diagram dimension must be nonnegative")
        if len(self.strata) != self.dim + 1:
            raise ValueError(f"a {self.dim}-dimensional diagram needs {self.dim + 1} strata, got {len(self.strata)}")
        for comp in self.strata[-1]:
            if not comp.fiber.trivial:
                raise ValueError("top-stratum pieces must have trivial fiber (F = F0)")
        if self.chi_total is not None and self.chi_total not in (0, 1):
            object.__setattr__(self, "chi_total", self.chi_total % 2)
        b = self.boundary
        if b is not None:
            if b.dim != self.dim - 1:
                raise ValueError(f"boundary of a {self.dim}-dimensional diagram must have dimension {self.dim - 1}")
            if b.boundary is not None:
                raise ValueError("the boundary diagram must itself be closed")
            for i, pieces in enumerate(b.strata):
                # the collar (dT)_i x [0, eps) sits inside T_{i+1}
                if pieces and not self.strata[i + 1]:
                    raise ValueError(f"boundary stratum {i} is nonempty but stratum {i + 1} is empty")

    @property
    def closed(self) -> bool:
        return self.boundary is None

    def stratum_parity(self, i: int) -> int:
        return sum(c.chi for c in self.strata[i]) % 2

    def canonical(self) -> StratumDiagram:
        """Same diagram with pieces sorted inside each stratum."""
        b = self.boundary.canonical() if self.boundary is not None else None
        return StratumDiagram(self.dim, tuple(tuple(sorted(s)) for s in self.strata), b, self.chi_total)

    def same_shape(self, other: StratumDiagram) -> bool:
        """Equality up to the order of pieces; ``chi_total`` is ignored."""
        return self.canonical() == other.canonical()

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "strata": [[{"chi": c.chi, "fiber": {"f": c.fiber.f, "e": c.fiber.e}} for c in s] for s in self.strata],
            "boundary": self.boundary.to_json() if self.boundary is not None else None,
            "chi_total": self.chi_total,
        }

    @classmethod
    def from_json(cls, obj: dict) -> StratumDiagram:
        try:
            strata = []
            for s in obj["strata"]:
                pieces = []
                for c in s:
                    fib = c.get("fiber") or {}
                    pieces.append(Component(c["chi"], FiberRecord(fib.get("f", 1), fib.get("e", 0))))
                strata.append(tuple(pieces))
            b = obj.get("boundary")
            return cls(obj["dim"], tuple(strata), cls.from_json(b) if b is not None else None, obj.get("chi_total"))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed stratum diagram: {exc}") from exc


def _pieces(chi: int) -> tuple[Component, ...]:
    return (Component(chi % 2),)


def empty(dim: int) -> StratumDiagram:
    return StratumDiagram(dim, ((),) * (dim + 1), chi_total=0)


def from_closed_manifold(chi: int, dim: int) -> StratumDiagram:
    if dim < 0:
        raise ValueError("manifold dimension must be nonnegative")
    return StratumDiagram(dim, ((),) * dim + (_pieces(chi),), chi_total=chi % 2)


def point(n: int = 0) -> StratumDiagram:
    """``pt_n``: the point, padded with empty strata up to dimension n."""
    return pad(from_closed_manifold(1, 0), n)


def interval() -> StratumDiagram:
    """[0, 1] as a 1-dimensional diagram with its two endpoints as boundary."""
    ends = StratumDiagram(0, ((Component(1), Component(1)),), chi_total=0)
    return StratumDiagram(1, ((), (Component(1),)), ends, chi_total=1)


def pad(s: StratumDiagram, n: int) -> StratumDiagram:
    if not s.closed:
        raise ValueError("only closed diagrams can be padded")
    if n < s.dim:
        raise ValueError(f"cannot pad a {s.dim}-dimensional diagram down to {n}")
    return StratumDiagram(n, s.strata + ((),) * (n - s.dim), chi_total=s.chi_total)


def cone(s: StratumDiagram) -> StratumDiagram:
    if not s.closed:
        raise ValueError("the cone is only defined here for closed diagrams")
    x = _strata_sum(s)
    apex = Component(1, FiberRecord(f=(x + 1) % 2, e=x))
    return StratumDiagram(s.dim + 1, ((apex,),) + s.strata, s, chi_total=1)


def _mul_optional(a: int | None, b: int | None) -> int | None:
    return None if a is None or b is None else (a * b) % 2


def _add_optional(*xs: int | None) -> int | None:
    return None if any(x is None for x in xs) else sum(xs) % 2


def product_fiber(a: FiberRecord, b: FiberRecord) -> FiberRecord:
    # (F x G) \ (F0 x G0) covered by (F\F0) x G and F x (G\G0)
    e = (a.e * b.f + a.f * b.e + a.e * b.e) % 2
    return FiberRecord(f=(a.f * b.f) % 2, e=e)


def _product_strata(s: StratumDiagram, t: StratumDiagram) -> tuple[tuple[Component, ...], ...]:
    out: list[list[Component]] = [[] for _ in range(s.dim + t.dim + 1)]
    for i, si in enumerate(s.strata):
        for j, tj in enumerate(t.strata):
            for a in si:
                for b in tj:
                    out[i + j].append(Component(a.chi * b.chi, product_fiber(a.fiber, b.fiber)))
    return tuple(tuple(x) for x in out)


def product(s: StratumDiagram, t: StratumDiagram) -> StratumDiagram:
    if not s.closed and not t.closed:
        raise ValueError("product of two bounded diagrams would need corner smoothing")
    if not s.closed:
        b = _closed_product(s.boundary, t)
    elif not t.closed:
        b = _closed_product(s, t.boundary)
    else:
        b = None
    return StratumDiagram(s.dim + t.dim, _product_strata(s, t), b, _mul_optional(s.chi_total, t.chi_total))


def _closed_product(s: StratumDiagram, t: StratumDiagram) -> StratumDiagram:
    return StratumDiagram(s.dim + t.dim, _product_strata(s, t), chi_total=_mul_optional(s.chi_total, t.chi_total))


def cylinder(s: StratumDiagram) -> StratumDiagram:
    return product(s, interval())


def disjoint_union(s: StratumDiagram, t: StratumDiagram) -> StratumDiagram:
    if s.dim != t.dim:
        raise ValueError(f"cannot unite diagrams of dimensions {s.dim} and {t.dim}")
    if s.closed != t.closed:
        raise ValueError("disjoint union needs both closed or both bounded")
    b = None if s.closed else disjoint_union(s.boundary, t.boundary)
    strata = tuple(a + c for a, c in zip(s.strata, t.strata))
    return StratumDiagram(s.dim, strata, b, _add_optional(s.chi_total, t.chi_total))


def glue(t1: StratumDiagram, t2: StratumDiagram) -> StratumDiagram:
    """Glue two bounded diagrams along their entire (equal) boundaries.

    The seam ``(dT)_{i-1} x (-eps, eps)`` lands in stratum ``i`` and keeps the
    boundary's fibers; ``chi(T1_i u T2_i) = chi(T1_i) + chi(T2_i) - chi((dT)_{i-1})``.
    """
    if t1.closed or t2.closed:
        raise ValueError("glue needs two bounded diagrams")
    if t1.dim != t2.dim or not t1.boundary.same_shape(t2.boundary):
        raise ValueError("boundaries do not match")
    seam = ((),) + t1.boundary.strata
    strata = tuple(a + b + c for a, b, c in zip(t1.strata, t2.strata, seam))
    chi = _add_optional(t1.chi_total, t2.chi_total, t1.boundary.chi_total)
    return StratumDiagram(t1.dim, strata, chi_total=chi)


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[tuple[str, int, int], ...] = ()  # (where, stratum, piece)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> list[str]:
        return [f"{where} stratum {i} piece {k}: chi(F \\ F0) is odd" for where, i, k in self.failures]


def _fiber_failures(s: StratumDiagram, where: str) -> list[tuple[str, int, int]]:
    return [(where, i, k) for i, st in enumerate(s.strata) for k, c in enumerate(st) if c.fiber.e]


def validate_euler(s: StratumDiagram) -> ValidationReport:
    failures = _fiber_failures(s, "interior")
    if s.boundary is not None:
        failures += _fiber_failures(s.boundary, "boundary")
    return ValidationReport(tuple(failures))


def is_euler(s: StratumDiagram) -> bool:
    return validate_euler(s).ok


def _strata_sum(s: StratumDiagram) -> int:
    return sum(s.stratum_parity(i) for i in range(s.dim + 1)) % 2


def _require_euler(s: StratumDiagram) -> None:
    report = validate_euler(s)
    if not report.ok:
        raise NotEulerError("diagram is not Euler: " + "; ".join(report.describe()))


def chi_via_strata(s: StratumDiagram) -> int:
    """chi(T) mod 2 as the sum of the stratum parities; needs the Euler property."""
    _require_euler(s)
    return _strata_sum(s)


def chi_via_collars(s: StratumDiagram) -> int:
    """chi(T) mod 2 as stratum sum plus chi of the boundary.

    Holds for every compact diagram, Euler or not; the boundary itself must be
    Euler so that its own chi can be read off its strata.
    """
    if s.closed:
        return _strata_sum(s)
    return (_strata_sum(s) + chi_via_strata(s.boundary)) % 2


def boundary_chi_check(s: StratumDiagram) -> int:
    """chi(dT) mod 2 as the difference of the two stratum-sum formulas.

    Zero for every valid bounded Euler diagram.
    """
    if s.closed:
        raise ValueError("boundary_chi_check needs a diagram with boundary")
    _require_euler(s)
    return (chi_via_collars(s) - chi_via_strata(s)) % 2


def classify_pt(s: StratumDiagram) -> int:
    """Class in Eh_n(pt) = Z/2: 1 means [S] = [pt_n], 0 means [S] = 0."""
    if not s.closed:
        raise ValueError("only closed diagrams have a bordism class")
    return chi_via_strata(s)


def union_all(diagrams: Iterable[StratumDiagram]) -> StratumDiagram:
    diagrams = list(diagrams)
    if not diagrams:
        raise ValueError("nothing to unite")
    out = diagrams[0]
    for d in diagrams[1:]:
        out = disjoint_union(out, d)
    return out


def pad_to_common(diagrams: Sequence[StratumDiagram]) -> list[StratumDiagram]:
    n = max(d.dim for d in diagrams)
    return [pad(d, n) for d in diagrams]
