import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from confblocks.lie import (
    build_root_system,
    connected_components,
    dynkin_index,
    enumerate_level_weights,
    form,
    kappa,
    kappa_inverse,
    longest_element,
    pair_theta,
    parse_algebra,
    reflect,
    to_dominant,
    weyl_apply,
    weyl_apply_inverse,
    weyl_group_order,
)

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2", "F4", "E6"]
POSITIVE_ROOTS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "C2": 4,
                  "C3": 9, "D4": 12, "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}
WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C2": 8, "G2": 12, "D4": 192, "F4": 1152}


def unit(r, i):
    return tuple(int(j == i) for j in range(r))


@pytest.mark.parametrize("name", sorted(POSITIVE_ROOTS))
def test_positive_root_count(name):
    assert len(build_root_system(name).positive_roots) == POSITIVE_ROOTS[name]


@pytest.mark.parametrize("name", sorted(WEYL_ORDERS))
def test_weyl_group_order(name):
    assert weyl_group_order(build_root_system(name)) == WEYL_ORDERS[name]


@pytest.mark.parametrize("name", TYPES + ["E7", "E8"])
def test_highest_root_is_long_and_normalized(name):
    rs = build_root_system(name)
    theta = rs.highest_root
    assert form(rs, theta, theta) == 2
    assert max(rs.root_lengths) == 2
    assert all(c >= 0 for c in theta)


@pytest.mark.parametrize("name,h", [("A1", 2), ("A3", 4), ("B3", 5), ("C3", 4), ("D4", 6),
                                    ("G2", 4), ("F4", 9), ("E6", 12), ("E7", 18), ("E8", 30)])
def test_dual_coxeter_numbers(name, h):
    assert build_root_system(name).dual_coxeter_number == h


def test_rank_one_and_a3_roots():
    a1 = build_root_system("A", 1)
    assert a1.highest_root == (2,)
    assert a1.positive_roots == ((1,),)
    a3 = build_root_system("A3")
    assert a3.positive_roots[-1] == (1, 1, 1)
    assert a3.highest_root == (1, 0, 1)


def test_c2_root_lengths():
    c2 = build_root_system("C2")
    a1, a2 = c2.simple_roots
    assert form(c2, a1, a1) == 1
    assert form(c2, a2, a2) == 2


def test_cached_by_value():
    assert build_root_system("A3") is build_root_system("A", 3)


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9),
                                 ("F", 3), ("G", 3), ("H", 2)])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        build_root_system(*bad)


def test_parse_algebra():
    assert parse_algebra("A3") == ("A", 3)
    assert parse_algebra(" e8 ") == ("E", 8)
    with pytest.raises(ValueError):
        parse_algebra("sl4")


def test_form_examples():
    a1 = build_root_system("A1")
    assert form(a1, (1,), (1,)) == Fraction(1, 2)
    a3 = build_root_system("A3")
    for i in range(3):
        for j in range(3):
            assert form(a3, unit(3, i), a3.simple_roots[j]) == int(i == j)


def test_form_dimension_mismatch():
    with pytest.raises(ValueError):
        form(build_root_system("A3"), (1, 0), (1, 0, 0))


def test_kappa_examples():
    a1 = build_root_system("A1")
    mu = kappa(a1, (1,))
    assert sum(c * m for c, m in zip(mu, (1,))) == 1  # theta(kappa(omega_1)) with theta = alpha_1
    a3 = build_root_system("A3")
    assert kappa(a3, (0, 0, 0)) == (0, 0, 0)
    assert pair_theta(a3, (4, 1, 0)) == 5


@pytest.mark.parametrize("name", TYPES)
def test_kappa_inverse_roundtrip(name):
    rs = build_root_system(name)
    for i in range(rs.rank):
        e = unit(rs.rank, i)
        assert kappa_inverse(rs, kappa(rs, e)) == e
        # alpha_j(kappa(omega_i)) = <alpha_j, omega_i>
        k = kappa(rs, e)
        for j in range(rs.rank):
            assert k[j] == form(rs, rs.simple_roots[j], e)


def test_reflection_examples():
    a1 = build_root_system("A1")
    assert weyl_apply(a1, (1,), (1,)) == (-1,)
    a3 = build_root_system("A3")
    assert weyl_apply(a3, (), (3, 1, 4)) == (3, 1, 4)
    assert weyl_apply(a3, longest_element(a3), (1, 0, 0)) == (0, 0, -1)


def test_reflection_rejects_bad_index():
    a3 = build_root_system("A3")
    with pytest.raises((ValueError, IndexError)):
        weyl_apply(a3, (4,), (1, 0, 0))


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "C2", "B2"])
def test_weyl_action_preserves_form(name):
    rs = build_root_system(name)
    rng = random.Random(name)
    for _ in range(100):
        word = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, 8)))
        a = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rs.rank))
        b = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rs.rank))
        wa, wb = weyl_apply(rs, word, a), weyl_apply(rs, word, b)
        assert form(rs, wa, wb) == form(rs, a, b)
        assert weyl_apply_inverse(rs, word, wa) == a


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2"])
def test_equal_elements_act_equally(name):
    # braid relations give different words of one element
    rs = build_root_system(name)
    rho = rs.weyl_vector
    rng = random.Random(7)
    words = {}
    for _ in range(400):
        word = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, 6)))
        words.setdefault(weyl_apply(rs, word, rho), []).append(word)
    for group in words.values():
        for _ in range(5):
            v = tuple(rng.randint(-5, 5) for _ in range(rs.rank))
            assert len({weyl_apply(rs, w, v) for w in group}) == 1


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_to_dominant(v):
    rs = build_root_system("A3")
    dom, sign = to_dominant(rs, tuple(v))
    assert all(c >= 0 for c in dom)
    assert form(rs, dom, dom) == form(rs, v, v)
    assert sign in (1, -1)


def subdiagrams(rs):
    nodes = range(1, rs.rank + 1)
    for mask in range(1, 2 ** rs.rank):
        sub = [i for i in nodes if mask >> (i - 1) & 1]
        if len(connected_components(rs, sub)) == 1:
            yield sub


@pytest.mark.parametrize("name", ["A4", "D4"])
def test_dynkin_index_simply_laced(name):
    rs = build_root_system(name)
    subs = list(subdiagrams(rs))
    assert subs
    assert all(dynkin_index(rs, s) == 1 for s in subs)


def test_dynkin_index_non_simply_laced():
    c2 = build_root_system("C2")
    assert dynkin_index(c2, [1]) == 2
    assert dynkin_index(c2, [2]) == 1
    b2 = build_root_system("B2")
    assert dynkin_index(b2, [2]) == 2
    g2 = build_root_system("G2")
    assert sorted(dynkin_index(g2, [i]) for i in (1, 2)) == [1, 3]


def test_dynkin_index_cross_check_by_root_lengths():
    # index of a rank one subalgebra is 2 / |alpha|^2 for its root
    for name in ["B3", "C3", "F4", "G2"]:
        rs = build_root_system(name)
        for i in range(1, rs.rank + 1):
            assert dynkin_index(rs, [i]) == 2 / rs.root_lengths[i - 1]


def test_dynkin_index_rejects_disconnected():
    with pytest.raises(ValueError):
        dynkin_index(build_root_system("A3"), [1, 3])


def test_enumerate_level_weights():
    a1 = build_root_system("A1")
    assert enumerate_level_weights(a1, 2) == [(0,), (1,), (2,)]
    a3 = build_root_system("A3")
    assert sorted(enumerate_level_weights(a3, 1)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)]
    for name in TYPES:
        rs = build_root_system(name)
        assert enumerate_level_weights(rs, 0) == [tuple([0] * rs.rank)]


@pytest.mark.parametrize("name", ["A2", "B2", "C3", "G2"])
def test_level_weights_nested_and_complete(name):
    rs = build_root_system(name)
    for level in range(4):
        now = enumerate_level_weights(rs, level)
        assert now == sorted(now)
        assert set(now) <= set(enumerate_level_weights(rs, level + 1))
        # brute-force scan of the box
        import itertools
        box = [w for w in itertools.product(range(level + 1), repeat=rs.rank)
               if pair_theta(rs, w) <= level]
        assert sorted(box) == now


def test_reflect_formula():
    rs = build_root_system("B3")
    v = (2, -1, 3)
    for i in range(3):
        alpha = rs.simple_roots[i]
        expected = tuple(a - v[i] * b for a, b in zip(v, alpha))
        assert reflect(rs, i, v) == expected
