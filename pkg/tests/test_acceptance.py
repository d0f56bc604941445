"""The twelve acceptance criteria, one check each.

Run with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``;
each check prints one PASS/FAIL line with its wall time.
"""

import random
import sys
import time

import pytest

from eulerhom import burnside as bs
from eulerhom import eulerhomology as eh
from eulerhom import permgroups as pg
from eulerhom import recipes as rc
from eulerhom import simplicial as sc
from eulerhom import stratifold as st


def crit_1_point_coefficients():
    assert eh.eh_dims(sc.point(), 8) == [1] * 9
    assert all(st.classify_pt(st.point(n)) == 1 for n in range(9))


def crit_2_boundary_parity():
    rng = random.Random(2)
    diagrams = [rc.bounded_euler(rng, 5) for _ in range(250)]
    # glued doubles enter the grammar through cylinders over them
    diagrams += [st.cylinder(st.glue(t, t)) for t in diagrams[:60]]
    for t in diagrams:
        assert st.is_euler(t)
        assert st.boundary_chi_check(t) == 0
    assert len(diagrams) >= 200


def crit_3_counting_matches_triangulation():
    corpus = rc.realizable_corpus(random.Random(3), 40)
    cases = 0
    for r in corpus:
        chi = sc.euler_characteristic(r.complex) % 2
        assert st.chi_via_strata(r.diagram) == chi
        cases += 1
        if chi == 0:  # cones are Euler exactly over even bases
            cone = st.cone(r.diagram)
            assert st.chi_via_strata(cone) == sc.euler_characteristic(sc.cone_complex(r.complex)) % 2
            cases += 1
    assert cases >= 30


def crit_4_cone_criterion():
    rng = random.Random(4)
    corpus = [rc.closed_euler(rng, 4) for _ in range(100)]
    classes = {st.classify_pt(s) for s in corpus}
    assert classes == {0, 1}
    for s in corpus:
        assert st.validate_euler(st.cone(s)).ok == (st.classify_pt(s) == 0)


def crit_5_graded_structure():
    expected = {"rp2": [1, 2, 3, 3, 3], "torus": [1, 3, 4, 4, 4]}
    for name in ["circle", "sphere2", "rp2", "torus", "klein"]:
        x = sc.FIXTURES[name]()
        betti = sc.betti_mod2(x)
        assert sum((-1) ** d * b for d, b in enumerate(betti)) == sc.euler_characteristic(x)
        sums = [sum(betti[: n + 1]) for n in range(5)]
        assert eh.eh_dims(x, 4) == sums
        if name in expected:
            assert sums == expected[name]


def crit_6_mu_on_fixtures():
    pt = sc.point()
    for n in range(8):
        assert eh.mu(eh.SWData.from_mapping(pt, 0, {0: [1]}), n, pt).as_dict() == {(0, n): 1}
    for name, make in sc.FIXTURES.items():
        m = make()
        n = m.dim + 1
        value = eh.mu(eh.sw_to_point(name, m), n, pt)
        assert value.coefficient(0, n) == [sc.euler_characteristic(m) % 2]


def crit_7_burnside_machinery():
    for name, make in pg.FIXTURE_GROUPS.items():
        h = make()
        m = bs.marks_matrix(h)
        assert m.is_lower_triangular()
        assert m.diagonal() == tuple(c.normalizer_index for c in h.subgroup_classes)
        for row, c in zip(m.entries, h.subgroup_classes):
            assert all(x % c.normalizer_index == 0 for x in row)
        if h.order <= 12:
            n = len(h.subgroup_classes)
            for k1 in range(n):
                for k2 in range(n):
                    a = pg.coset_action(h, h.subgroup_classes[k1].representative)
                    b = pg.coset_action(h, h.subgroup_classes[k2].representative)
                    size = (h.order // h.subgroup_classes[k1].order) * (h.order // h.subgroup_classes[k2].order)
                    types = pg.orbit_types(h, pg.product_action(a, b), size)
                    brute = tuple(types.get(i, 0) for i in range(n))
                    assert bs.burnside_mul(bs.orbit(h, k1), bs.orbit(h, k2)).coeffs == brute
    assert bs.marks_matrix(pg.symmetric(3)).entries == ((6, 0, 0, 0), (3, 1, 0, 0), (2, 0, 2, 0), (1, 1, 1, 1))


def crit_8_vh_dimensions():
    known = {"trivial": 1, "Z2": 1, "Z3": 2, "S3": 2}
    for name, make in pg.FIXTURE_GROUPS.items():
        h = make()
        # oracle: raw subgroup sets, conjugation by every element, normalizers by brute force
        seen, dim = set(), 0
        for k in _subgroups(h):
            if k in seen:
                continue
            seen |= {frozenset(x * y * x.inverse() for y in k) for x in h.elements}
            norm = sum(1 for x in h.elements if frozenset(x * y * x.inverse() for y in k) == k)
            dim += (norm // len(k)) % 2
        assert len(bs.vh_basis(h)) == dim
        if name in known:
            assert dim == known[name]


def _subgroups(h):
    els = sorted(h.elements)
    return sorted({pg.generate(h.degree, [a, b]).elements for a in els for b in els}, key=len)


def _hcw(h, rng):
    cells = []
    for d in range(rng.randint(1, 3)):
        images = [[] for _ in h.generators]
        offset = 0
        for _ in range(rng.randint(0, 3)):
            k = h.subgroup_classes[rng.randrange(len(h.subgroup_classes))].representative
            for gi, img in enumerate(pg.coset_action(h, k)):
                images[gi].extend(offset + p for p in img)
            offset += h.order // k.order
        cells.append(bs.CellOrbitData.make(h, d, offset, dict(enumerate(images))))
    return cells


def crit_9_character_identity():
    rng = random.Random(9)
    count = 0
    for name in ["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "A4"]:
        h = pg.FIXTURE_GROUPS[name]()
        for _ in range(3):
            cells = _hcw(h, rng)
            direct = []
            for c in h.subgroup_classes:
                total = 0
                for cell in cells:
                    rho = pg.extend_action(h, cell.action, cell.points)
                    fixed = sum(1 for p in range(cell.points)
                                if all(rho[y][p] == p for y in c.representative.elements))
                    total += (-1) ** cell.dim * fixed
                direct.append(total)
            assert bs.ch(bs.equivariant_chi(h, cells)) == tuple(direct)
            count += 1
    assert count >= 20


def crit_10_equivariant_boundary():
    rng = random.Random(10)
    for name in ["Z2", "Z3", "S3"]:
        h = pg.FIXTURE_GROUPS[name]()
        for _ in range(110):
            d = rc.g_bounded_euler(rng, h, 4)
            assert bs.validate_g_euler(d).ok
            assert bs.boundary_vh(d).is_zero()
            assert bs.boundary_vh_via_fixed_points(d).is_zero()


def crit_11_fixed_points_are_euler():
    rng = random.Random(11)
    for name in ["Z2", "Z3", "S3", "Z2xZ2", "D4"]:
        h = pg.FIXTURE_GROUPS[name]()
        for _ in range(40):
            for d in (rc.g_bounded_euler(rng, h, 3), rc.g_closed_euler(rng, h, 3)):
                assert bs.validate_g_euler(d).ok
                for c in h.subgroup_classes:
                    assert st.validate_euler(bs.fixed_diagram(d, c.index)).ok


def crit_12_equivariant_coefficients():
    for name in ["Z2", "Z3", "S3"]:
        h = pg.FIXTURE_GROUPS[name]()
        basis = bs.vh_basis(h)
        for n in range(5):
            assert bs.classify_naive_equivariant_pt(bs.g_point(h, n)) == 1
            images = [bs.classify_equivariant_pt(bs.g_orbit(h, c.index, n)).bits for c in basis]
            units = [tuple(int(i == j) for i in range(len(basis))) for j in range(len(basis))]
            assert images == units


CRITERIA = [
    (1, "Eh_n(pt) = Z/2", crit_1_point_coefficients, 1.0),
    (2, "boundary chi is even", crit_2_boundary_parity, 5.0),
    (3, "stratum count matches triangulation", crit_3_counting_matches_triangulation, 5.0),
    (4, "cone criterion", crit_4_cone_criterion, None),
    (5, "graded structure", crit_5_graded_structure, 2.0),
    (6, "mu on fixtures", crit_6_mu_on_fixtures, None),
    (7, "Burnside machinery", crit_7_burnside_machinery, 30.0),
    (8, "V_H dimensions", crit_8_vh_dimensions, None),
    (9, "character identity", crit_9_character_identity, None),
    (10, "equivariant boundary vanishing", crit_10_equivariant_boundary, 10.0),
    (11, "fixed points are Euler", crit_11_fixed_points_are_euler, None),
    (12, "equivariant coefficients", crit_12_equivariant_coefficients, None),
]


def evaluate(check, limit):
    start = time.perf_counter()
    try:
        check()
        error = None
    except AssertionError as exc:
        error = f"assertion failed {exc}".strip()
    elapsed = time.perf_counter() - start
    if error is None and limit is not None and elapsed > limit:
        error = f"took {elapsed:.2f}s, limit {limit:.0f}s"
    return error, elapsed


def report_line(number, title, error, elapsed):
    status = "PASS" if error is None else "FAIL"
    tail = "" if error is None else f" ({error})"
    return f"criterion {number:2d} {status} {title} [{elapsed:.2f}s]{tail}"


@pytest.mark.parametrize("number,title,check,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, limit, capsys):
    error, elapsed = evaluate(check, limit)
    with capsys.disabled():
        print("\n" + report_line(number, title, error, elapsed))
    assert error is None, error


if __name__ == "__main__":
    failed = 0
    for number, title, check, limit in CRITERIA:
        error, elapsed = evaluate(check, limit)
        failed += error is not None
        print(report_line(number, title, error, elapsed))
    sys.exit(1 if failed else 0)
