import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as hs

from conftest import ALL_GROUPS, seeds
from eulerhom import burnside as bs
from eulerhom import permgroups as pg


def s3():
    return pg.symmetric(3)


def test_s3_marks():
    assert bs.marks_matrix(s3()).entries == ((6, 0, 0, 0), (3, 1, 0, 0), (2, 0, 2, 0), (1, 1, 1, 1))


def test_small_marks():
    assert bs.marks_matrix(pg.trivial_group()).entries == ((1,),)
    assert bs.marks_matrix(pg.cyclic(2)).entries == ((2, 0), (1, 1))


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_marks_structure(groups, name):
    h = groups[name]
    m = bs.marks_matrix(h)
    assert m.is_lower_triangular()
    classes = h.subgroup_classes
    assert m.diagonal() == tuple(c.normalizer_index for c in classes)
    for k, c in enumerate(classes):
        assert all(x % c.normalizer_index == 0 for x in m.entries[k])
        for l, lc in enumerate(classes):
            assert m.entries[k][l] == pg.fixed_coset_count(h, c.representative, lc.representative)
            assert sum(bs.fixed_coset_types(h, k, l).values()) == m.entries[k][l]


def orbit_decomposition(h, k1, k2):
    """Brute force: orbit types of the diagonal action on H/K1 x H/K2."""
    a = pg.coset_action(h, h.subgroup_classes[k1].representative)
    b = pg.coset_action(h, h.subgroup_classes[k2].representative)
    n = (h.order // h.subgroup_classes[k1].order) * (h.order // h.subgroup_classes[k2].order)
    types = pg.orbit_types(h, pg.product_action(a, b), n)
    return tuple(types.get(i, 0) for i in range(len(h.subgroup_classes)))


@pytest.mark.parametrize("name", [n for n in ALL_GROUPS if pg.FIXTURE_GROUPS[n]().order <= 12])
def test_multiplication_matches_orbit_decomposition(groups, name):
    h = groups[name]
    n = len(h.subgroup_classes)
    for k1 in range(n):
        for k2 in range(n):
            prod = bs.burnside_mul(bs.orbit(h, k1), bs.orbit(h, k2))
            assert prod.coeffs == orbit_decomposition(h, k1, k2)


def test_s3_product_example():
    h = s3()
    c2 = bs.orbit(h, 1)
    assert bs.ch(c2 * c2) == (9, 1, 0, 0)
    assert c2 * c2 == bs.orbit(h, 0) + bs.orbit(h, 1)
    assert bs.ch(bs.orbit(h, 0)) == (6, 0, 0, 0)
    assert bs.ch(2 * bs.orbit(h, 2)) == (4, 0, 4, 0)


def random_element(h, r):
    return bs.BurnsideElement(h, tuple(r.randint(-4, 4) for _ in h.subgroup_classes))


@given(hs.sampled_from(["Z4", "S3", "D4", "A4"]), seeds)
def test_ring_axioms(name, seed):
    h = pg.FIXTURE_GROUPS[name]()
    r = random.Random(seed)
    a, b, c = (random_element(h, r) for _ in range(3))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert bs.unit(h) * a == a
    assert a * (b + c) == a * b + a * c
    free = bs.orbit(h, 0)
    for k, cls in enumerate(h.subgroup_classes):
        assert free * bs.orbit(h, k) == (h.order // cls.order) * free


@given(hs.sampled_from(ALL_GROUPS), seeds)
def test_character_is_injective_and_invertible(name, seed):
    h = pg.FIXTURE_GROUPS[name]()
    a = random_element(h, random.Random(seed))
    assert bs.from_character(h, bs.ch(a)) == a
    assert bs.ch(bs.unit(h)) == (1,) * len(h.subgroup_classes)


def test_from_character_rejects_non_characters():
    with pytest.raises(ValueError):
        bs.from_character(pg.cyclic(2), (1, 0))


def brute_vh_dim(h):
    """Conjugacy classes of subgroups with odd normalizer index, from raw element sets."""
    seen, count = set(), 0
    for k in sorted(h.all_subgroups, key=len):
        if k in seen:
            continue
        seen |= {frozenset(x * y * x.inverse() for y in k) for x in h.elements}
        norm = [x for x in h.elements if frozenset(x * y * x.inverse() for y in k) == k]
        count += (len(norm) // len(k)) % 2
    return count


@pytest.mark.parametrize("name,dim", [("trivial", 1), ("Z2", 1), ("Z3", 2), ("S3", 2)])
def test_vh_dimensions_known(groups, name, dim):
    assert len(bs.vh_basis(groups[name])) == dim


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_vh_dimensions_oracle(groups, name):
    h = groups[name]
    assert len(bs.vh_basis(h)) == brute_vh_dim(h)


def test_vh_examples():
    h = s3()
    assert [c.order for c in bs.vh_basis(h)] == [2, 6]
    assert bs.project_vh(bs.orbit(h, 2)).is_zero()
    assert bs.project_vh(2 * bs.orbit(h, 1)).is_zero()
    assert bs.project_vh(bs.unit(h)).bits == (0, 1)
    assert len(bs.vh_of_orbit(h, h)) == 2
    assert len(bs.vh_of_orbit(h, pg.generate(3, []))) == 1
    with pytest.raises(ValueError):
        bs.vh_of_orbit(h, pg.cyclic(4))


@given(hs.sampled_from(ALL_GROUPS), seeds)
def test_square_commutes(name, seed):
    h = pg.FIXTURE_GROUPS[name]()
    a = random_element(h, random.Random(seed))
    classes = h.subgroup_classes
    marks = bs.marks_matrix(h).entries
    # i(a) in x_K coordinates, then psi with the rational rows ch([H/K]) / |NK/K|
    x = [a.coeffs[c.index] * c.normalizer_index for c in classes]
    psi_x = [sum(Fraction(x[k] * marks[k][l], classes[k].normalizer_index) for k in range(len(classes)))
             for l in range(len(classes))]
    assert all(v.denominator == 1 for v in psi_x)
    reduced = [int(v) % 2 for v in psi_x]
    assert bs.psi_bar_inverse(h, reduced) == bs.pr_i(a) == bs.iota_bar(bs.project_vh(a))
    assert bs.vh_from_character_mod2(h, reduced) == bs.project_vh(a)


# finite H-CW fixtures: each cell dimension is a disjoint union of coset spaces

def hcw_fixture(h, r, max_dim=3):
    cells = []
    for d in range(r.randint(0, max_dim) + 1):
        blocks = [h.subgroup_classes[r.randrange(len(h.subgroup_classes))].representative
                  for _ in range(r.randint(0, 3))]
        images = [[] for _ in h.generators]
        offset = 0
        for k in blocks:
            act = pg.coset_action(h, k)
            for gi, img in enumerate(act):
                images[gi].extend(offset + p for p in img)
            offset += h.order // k.order
        cells.append(bs.CellOrbitData.make(h, d, offset, dict(enumerate(images))))
    return cells


def fixed_chi_by_counting(h, cells, l_elements):
    total = 0
    for c in cells:
        rho = pg.extend_action(h, c.action, c.points)
        fixed = sum(1 for p in range(c.points) if all(rho[y][p] == p for y in l_elements))
        total += (-1) ** c.dim * fixed
    return total


def hand_fixtures():
    z2 = pg.cyclic(2)
    return [
        (z2, [bs.CellOrbitData.make(z2, 0, 2, {0: [1, 0]})], (2, 0)),
        (z2, [bs.CellOrbitData.make(z2, 0, 2, {0: [0, 1]}), bs.CellOrbitData.make(z2, 1, 2, {0: [1, 0]})], (0, 2)),
        (s3(), [bs.CellOrbitData.make(s3(), 0, 1, {})], (1, 1, 1, 1)),
    ]


def test_hand_hcw_fixtures():
    for h, cells, character in hand_fixtures():
        assert bs.ch(bs.equivariant_chi(h, cells)) == character
    z2 = pg.cyclic(2)
    circle = hand_fixtures()[1][1]
    assert bs.equivariant_chi(z2, circle).coeffs == (-1, 2)


def test_character_identity_corpus():
    r = random.Random(7)
    fixtures = [(h, cells) for h, cells, _ in hand_fixtures()]
    for name in ["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "A4"]:
        h = pg.FIXTURE_GROUPS[name]()
        fixtures += [(h, hcw_fixture(h, r)) for _ in range(3)]
    assert len(fixtures) >= 20
    for h, cells in fixtures:
        expected = tuple(fixed_chi_by_counting(h, cells, c.representative.elements) for c in h.subgroup_classes)
        assert bs.ch(bs.equivariant_chi(h, cells)) == expected


def test_cell_data_contracts():
    z2 = pg.cyclic(2)
    with pytest.raises(ValueError):
        bs.CellOrbitData.make(z2, 0, 3, {0: [1, 0]})
    with pytest.raises(ValueError):
        bs.CellOrbitData.make(z2, 0, 2, {5: [1, 0]})
    with pytest.raises(ValueError):
        bs.CellOrbitData.from_json(z2, {"dim": 0})
    with pytest.raises(ValueError):
        bs.equivariant_chi(pg.cyclic(3), [bs.CellOrbitData.make(pg.cyclic(3), 0, 2, {0: [1, 0]})])


@pytest.mark.parametrize("make,subgroups,classes", [
    (lambda: pg.dihedral(12), 34, 16),
    (lambda: pg.direct_product(pg.symmetric(4), pg.cyclic(2)), 98, 33),
])
def test_marks_for_larger_groups(make, subgroups, classes):
    h = make()
    assert (len(h.all_subgroups), len(h.subgroup_classes)) == (subgroups, classes)
    m = bs.marks_matrix(h)
    assert m.is_lower_triangular()
    assert all(d > 0 for d in m.diagonal())
    for row, c in zip(m.entries, h.subgroup_classes):
        assert row[c.index] == c.normalizer_index
        assert all(x % c.normalizer_index == 0 for x in row)
