import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as hs

from conftest import ALL_GROUPS, SMALL_GROUPS
from eulerhom import permgroups as pg
from eulerhom.permgroups import GroupTooLarge, Perm


def subsets_oracle(g):
    """Every element subset containing the identity that is closed under products."""
    rest = sorted(g.elements - {g.identity})
    out = set()
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            s = frozenset(combo) | {g.identity}
            if all(a * b in s for a in s for b in s):
                out.add(s)
    return out


def two_generated_oracle(g):
    """Subgroups generated by at most two elements; covers every subgroup of the fixtures."""
    els = sorted(g.elements)
    return {pg.generate(g.degree, [a, b]).elements for a in els for b in els}


def conjugacy_oracle(g, subgroups):
    classes = []
    for k in subgroups:
        if any(k in c for c in classes):
            continue
        classes.append({frozenset(x * y * x.inverse() for y in k) for x in g.elements})
    return classes


EXPECTED_ORDERS = {"trivial": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Z2xZ2": 4, "S3": 6, "D4": 8, "Q8": 8,
                   "A4": 12, "S4": 24}
EXPECTED_COUNTS = {  # (subgroups, conjugacy classes)
    "trivial": (1, 1), "Z2": (2, 2), "Z3": (2, 2), "Z4": (3, 3), "Z2xZ2": (5, 5), "S3": (6, 4),
    "D4": (10, 8), "Q8": (6, 6), "A4": (10, 5), "S4": (30, 11),
}


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_orders_and_counts(groups, name):
    g = groups[name]
    assert g.order == EXPECTED_ORDERS[name]
    assert (len(g.all_subgroups), len(g.subgroup_classes)) == EXPECTED_COUNTS[name]


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_subgroups_match_subset_enumeration(groups, name):
    g = groups[name]
    assert set(g.all_subgroups) == subsets_oracle(g)


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_subgroup_classes_match_oracle(groups, name):
    g = groups[name]
    subs = two_generated_oracle(g)
    assert set(g.all_subgroups) == subs
    oracle = conjugacy_oracle(g, sorted(subs, key=len))
    assert sorted(len(c) for c in oracle) == sorted(c.conjugates for c in g.subgroup_classes)
    for c in g.subgroup_classes:
        n = pg.normalizer(g, c.representative)
        assert n.order == c.normalizer_order
        assert c.conjugates * c.normalizer_order == g.order


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_canonical_order(groups, name):
    classes = groups[name].subgroup_classes
    assert classes[0].order == 1 and classes[-1].order == groups[name].order
    assert [c.order for c in classes] == sorted(c.order for c in classes)
    assert len({c.label for c in classes}) == len(classes)


def test_s3_classes():
    g = pg.symmetric(3)
    assert [(c.order, c.conjugates, c.normalizer_index) for c in g.subgroup_classes] == [
        (1, 1, 6), (2, 3, 1), (3, 1, 2), (6, 1, 1)]


def test_perm_basics():
    p = Perm.from_cycles(4, (0, 1, 2))
    q = Perm.from_cycles(4, (1, 3))
    assert (p * q)(1) == p(q(1))
    assert p * p.inverse() == Perm.identity(4)
    with pytest.raises(ValueError):
        Perm((0, 0, 1))


def test_quaternion_relations():
    g = pg.quaternion()
    i, j = g.generators
    minus_one = i * i
    assert minus_one != g.identity and j * j == minus_one
    assert minus_one * minus_one == g.identity
    assert i * j * i * j == minus_one  # (ij)^2 = k^2 = -1


def test_group_size_bound():
    with pytest.raises(GroupTooLarge):
        pg.generate(8, [Perm.from_cycles(8, (0, 1)), Perm.from_cycles(8, range(8))], bound=1000)


def test_group_json_roundtrip():
    g = pg.dihedral(4)
    assert pg.PermGroup.from_json(json.loads(json.dumps(g.to_json()))) == g
    with pytest.raises(ValueError):
        pg.PermGroup.from_json({"degree": 3})
    with pytest.raises(ValueError):
        pg.PermGroup.from_json({"degree": 3, "generators": [[0, 1]]})


@pytest.mark.parametrize("name", ["S3", "D4", "A4"])
def test_fixed_coset_count_by_action(groups, name):
    g = groups[name]
    for kc in g.subgroup_classes:
        rho = pg.extend_action(g, pg.coset_action(g, kc.representative))
        for lc in g.subgroup_classes:
            l = lc.representative.elements
            fixed = sum(1 for p in range(g.order // kc.order) if all(rho[y][p] == p for y in l))
            assert pg.fixed_coset_count(g, kc.representative, l) == fixed


def test_extend_action_rejects_bad_images():
    g = pg.symmetric(3)
    with pytest.raises(ValueError):
        pg.extend_action(g, [(1, 0), (0, 1), (0, 1)])
    # transposition -> id, 3-cycle -> swap breaks (3-cycle)^3 = 1
    with pytest.raises(ValueError):
        pg.extend_action(g, [(0, 1), (1, 0)])


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_coset_action_has_one_orbit(groups, name):
    g = groups[name]
    for c in g.subgroup_classes:
        assert pg.orbit_types(g, pg.coset_action(g, c.representative), g.order // c.order) == {c.index: 1}


@given(hs.sampled_from(["S3", "D4", "Q8", "A4"]), hs.data())
def test_class_of_is_conjugation_invariant(name, data):
    g = pg.FIXTURE_GROUPS[name]()
    k = data.draw(hs.sampled_from(g.all_subgroups))
    x = data.draw(hs.sampled_from(g.sorted_elements))
    assert g.class_of(frozenset(x.conj(y) for y in k)) == g.class_of(k)
