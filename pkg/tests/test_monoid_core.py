# -*- coding: utf-8 -*-
import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.processing.exceptions import ConfigurationError, DimensionError, DomainError
from src.processing.monoid_core.counting import cardinality, cardinality_recursive, rank_count
from src.processing.monoid_core.group_table import GroupTable, cyclic_group, trivial_group
from src.processing.monoid_core.partial_perm import (
    PartialPerm, all_partial_perms, complement_domain, complement_range, compose, dom, extend,
    format_partial_perm, identity, idempotents, inverse,
    is_idempotent, leq, mobius, p_map, parse_partial_perm, partial_identity, perm_type, ran, zero,
)
from src.processing.monoid_core.wreath import (
    WreathElem, embed_partial_perm, format_wreath, parse_wreath, wreath_compose, wreath_identity,
    wreath_inverse, wreath_leq, wreath_mobius, wreath_perm_type, wreath_zero,
)


@st.composite
def partial_perms(draw, n):
    perm = draw(st.permutations(range(1, n + 1)))
    mask = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return PartialPerm(n, tuple(p if m else 0 for p, m in zip(perm, mask)))


@st.composite
def wreath_elems(draw, n, group):
    s = draw(partial_perms(n))
    labels = draw(st.lists(st.integers(0, group.order - 1), min_size=n, max_size=n))
    return WreathElem(group, s.image, tuple(labels))


# ---------------------------------------------------------------- 部分置换
def test_compose_identity_is_neutral():
    b = PartialPerm(4, (3, 0, 1, 4))
    assert compose(identity(4), b) == b
    assert compose(b, identity(4)) == b


def test_compose_worked_example():
    pi = PartialPerm(4, (4, 3, 0, 0))
    sigma = PartialPerm(4, (2, 0, 1, 0))
    assert compose(pi, sigma) == PartialPerm(4, (3, 0, 4, 0))


def test_compose_rejects_mismatched_n():
    with pytest.raises(DimensionError):
        compose(identity(3), identity(4))


@given(partial_perms(4), partial_perms(4))
def test_compose_matches_rook_matrix_product(a, b):
    assert np.array_equal(compose(a, b).to_matrix(), a.to_matrix() @ b.to_matrix())


def test_inverse_examples():
    assert inverse(zero(3)) == zero(3)
    assert inverse(PartialPerm(4, (0, 1, 0, 4))) == PartialPerm(4, (2, 0, 0, 4))


@given(partial_perms(5))
def test_inverse_is_transpose_and_semigroup_inverse(a):
    y = inverse(a)
    assert np.array_equal(y.to_matrix(), a.to_matrix().T)
    assert compose(compose(a, y), a) == a
    assert compose(compose(y, a), y) == y


def test_inverse_is_unique_on_r3():
    elems = all_partial_perms(3)
    for a in elems:
        found = [y for y in elems if compose(compose(a, y), a) == a and compose(compose(y, a), y) == y]
        assert found == [inverse(a)]


def test_leq_examples():
    s = PartialPerm(4, (0, 1, 0, 0))
    t = PartialPerm(4, (0, 1, 0, 4))
    assert leq(zero(4), t)
    assert leq(s, t)
    assert not leq(t, s)


def test_leq_matches_idempotent_restriction_on_r3():
    elems = all_partial_perms(3)
    idem = idempotents(3)
    for s, t in itertools.product(elems, repeat=2):
        assert leq(s, t) == any(compose(e, t) == s for e in idem)


def test_mobius_values():
    s = PartialPerm(3, (2, 0, 0))
    assert mobius(s, s) == 1
    assert mobius(zero(3), identity(3)) == -1
    with pytest.raises(DomainError):
        mobius(identity(3), zero(3))


def test_perm_type_worked_example():
    s = PartialPerm(4, (4, 0, 1, 2))
    assert perm_type(s) == (3, 1, 2)
    assert perm_type(partial_identity(4, [1, 3])) == (1, 2)
    assert perm_type(zero(4)) == ()


@given(partial_perms(5))
def test_perm_type_matches_order_preserving_maps(s):
    p_ran = p_map(5, s.range)
    p_dom = p_map(5, s.domain)
    core = compose(compose(inverse(p_ran), s), p_dom)
    k = s.rank
    assert core.image[:k] == perm_type(s)
    assert all(x == 0 for x in core.image[k:])


def test_p_map():
    assert p_map(4, [1, 2]) == partial_identity(4, [1, 2])
    assert p_map(4, [2, 4]) == PartialPerm(4, (2, 4, 0, 0))
    p = p_map(5, [1, 3, 5])
    assert p.domain == (1, 2, 3) and p.range == (1, 3, 5)
    assert perm_type(p) == (1, 2, 3)


def test_idempotents_by_rank():
    idem = idempotents(3)
    assert len(idem) == 8
    assert all(is_idempotent(e) for e in idem)
    assert [e.rank for e in idem] == [3, 2, 2, 2, 1, 1, 1, 0]
    assert idempotents(3, 2)[0] == partial_identity(3, [1, 2])


def test_partial_perm_validation():
    with pytest.raises(DomainError):
        PartialPerm(3, (1, 1, 0))
    with pytest.raises(DomainError):
        PartialPerm(3, (4, 0, 0))
    with pytest.raises(DimensionError):
        PartialPerm(3, (1, 2))


def test_parse_and_format():
    s = parse_partial_perm("2,-,5,-,-,-,3", 7)
    assert s.image == (2, 0, 5, 0, 0, 0, 3)
    assert format_partial_perm(s) == "2,-,5,-,-,-,3"
    with pytest.raises(DimensionError):
        parse_partial_perm("1,2", 3)
    with pytest.raises(DomainError):
        parse_partial_perm("1,x,-", 3)


# ---------------------------------------------------------------- 基数
@pytest.mark.parametrize("n, expected", list(enumerate([1, 2, 7, 34, 209, 1546, 13327, 130922])))
def test_cardinality(n, expected):
    assert cardinality(n) == expected


@pytest.mark.parametrize("n", range(3, 13))
def test_cardinality_recursive_agrees(n):
    assert cardinality_recursive(n) == cardinality(n)


def test_wreath_cardinality(z2):
    assert cardinality(3, z2) == 1 + 9 * 2 + 18 * 4 + 6 * 8 == 139
    assert cardinality(2, z2) == 17
    assert cardinality_recursive(3, z2) == 139
    z3 = cyclic_group(3)
    for n in range(3, 8):
        assert cardinality_recursive(n, z3) == cardinality(n, z3)


def test_cardinality_recursive_requires_n_at_least_3():
    with pytest.raises(DomainError):
        cardinality_recursive(2)


def test_cardinality_is_exact_for_large_n():
    assert cardinality(40) == sum(rank_count(40, k) for k in range(41))
    assert cardinality(40) > 2 ** 64


# ---------------------------------------------------------------- 群与圈积
def test_group_table_checks():
    with pytest.raises(DomainError):
        GroupTable([[0, 1], [1, 1]])
    g = cyclic_group(4)
    assert g.identity == 0
    assert list(g.inv) == [0, 3, 2, 1]
    assert g == cyclic_group(4)
    assert g.digest == cyclic_group(4).digest


def test_wreath_single_cell_product():
    z3 = cyclic_group(3)
    a = WreathElem.from_cells(3, z3, {(2, 1): 1})
    b = WreathElem.from_cells(3, z3, {(1, 3): 2})
    assert wreath_compose(a, b).cells == {(2, 3): 0}
    assert wreath_compose(wreath_identity(3, z3), a) == a


def _dense(x: WreathElem):
    """{0}∪G 上的矩阵，None 表示 0"""
    m = [[None] * x.n for _ in range(x.n)]
    for (row, col), g in x.cells.items():
        m[row - 1][col - 1] = g
    return m


@settings(max_examples=50)
@given(st.data())
def test_wreath_compose_matches_matrix_product(data):
    group = cyclic_group(2)
    a = data.draw(wreath_elems(3, group))
    b = data.draw(wreath_elems(3, group))
    ma, mb = _dense(a), _dense(b)
    expected = {}
    for i, j, k in itertools.product(range(3), repeat=3):
        if ma[i][k] is not None and mb[k][j] is not None:
            expected[(i + 1, j + 1)] = group.multiply(ma[i][k], mb[k][j])
    assert wreath_compose(a, b).cells == expected


@settings(max_examples=50)
@given(st.data())
def test_wreath_inverse_is_semigroup_inverse(data):
    group = cyclic_group(3)
    a = data.draw(wreath_elems(3, group))
    y = wreath_inverse(a)
    assert wreath_compose(wreath_compose(a, y), a) == a
    assert wreath_compose(wreath_compose(y, a), y) == y


def test_wreath_parse_and_format(z2):
    x = parse_wreath("2,1:1;3,3:0", 3, z2)
    assert x.cells == {(2, 1): 1, (3, 3): 0}
    assert format_wreath(x) == "2,1:1;3,3:0"
    assert format_wreath(parse_wreath("-", 3, z2)) == "-"
    with pytest.raises(DomainError):
        parse_wreath("2,1:1;3,1:0", 3, z2)


# ---------------------------------------------------------------- 辅助运算
def test_dom_and_ran_are_semigroup_products():
    s = PartialPerm(4, (3, 0, 1, 0))
    assert dom(s) == compose(inverse(s), s) == partial_identity(4, [1, 3])
    assert ran(s) == compose(s, inverse(s)) == partial_identity(4, [1, 3])
    t = PartialPerm(4, (0, 4, 0, 0))
    assert dom(t) == partial_identity(4, [2]) and ran(t) == partial_identity(4, [4])


def test_extend_and_complements():
    s = PartialPerm(4, (0, 3, 0, 0))
    assert complement_domain(s) == (1, 3, 4)
    assert complement_range(s) == (1, 2, 4)
    t = extend(s, 1, 4)
    assert t == PartialPerm(4, (4, 3, 0, 0))
    assert leq(s, t) and t.rank == s.rank + 1
    with pytest.raises(DomainError):
        extend(s, 2, 1)
    with pytest.raises(DomainError):
        extend(s, 1, 3)


def test_wreath_order_and_perm_type(z2):
    t = parse_wreath("2,1:1;3,2:0", 3, z2)
    s = parse_wreath("2,1:1", 3, z2)
    assert wreath_leq(s, t)
    assert not wreath_leq(parse_wreath("2,1:0", 3, z2), t)
    assert wreath_mobius(s, t) == -1
    assert wreath_mobius(t, t) == 1
    with pytest.raises(DomainError):
        wreath_mobius(t, s)
    assert wreath_perm_type(t) == ((1, 2), (1, 0))
    assert wreath_perm_type(parse_wreath("3,1:1;1,2:0", 3, z2)) == ((2, 1), (1, 0))


def test_embedded_rook_elements_compose_like_rook(z2):
    a = PartialPerm(3, (2, 0, 1))
    b = PartialPerm(3, (0, 3, 1))
    product = wreath_compose(embed_partial_perm(a, z2), embed_partial_perm(b, z2))
    assert product == embed_partial_perm(compose(a, b), z2)
    assert wreath_zero(3, z2).rank == 0


def test_group_table_from_json(tmp_path):
    path = tmp_path / "klein.json"
    path.write_text(json.dumps({
        "name": "klein", "identity": 0,
        "mul": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
    }), encoding="utf-8")
    group = GroupTable.from_json(str(path))
    assert group.order == 4 and group.name == "klein" and group.kind == "table"
    assert list(group.inv) == [0, 1, 2, 3]
    assert trivial_group().order == 1
    with pytest.raises(ConfigurationError):
        GroupTable.from_json(str(tmp_path / "missing.json"))
