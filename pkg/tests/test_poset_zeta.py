# -*- coding: utf-8 -*-
import numpy as np
import pytest

from src.processing.exceptions import DomainError
from src.processing.monoid_core.counting import cardinality
from src.processing.monoid_core.element_index import ElementIndex
from src.processing.monoid_core.group_table import cyclic_group
from src.processing.monoid_core.partial_perm import PartialPerm, identity, is_idempotent, leq, mobius
from src.processing.monoid_core.poset import mobius_matrix, zeta_matrix
from src.processing.poset_zeta.bounds import (
    naive_cost, pipeline_bound, step_bound, storage_bound, total_bound, trivial_storage_bound,
)
from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector
from src.processing.poset_zeta.op_counter import OpCounter
from src.processing.poset_zeta.zeta_fast import (
    mobius_transform, zeta_fast, zeta_fast_rook, zeta_fast_wreath,
)
from src.processing.poset_zeta.zeta_naive import mobius_naive, zeta_naive


def _integer_vector(index, rng):
    return CoeffVector.random(index, rng, integer=True)


# ---------------------------------------------------------------- 朴素 zeta
def test_zeta_of_identity_marks_idempotents():
    index = ElementIndex(3)
    g = zeta_naive(CoeffVector.delta(index, identity(3)))
    assert g.basis == Basis.GROUPOID
    for i, s in enumerate(index.enumerate()):
        assert g.values[i] == (1 if is_idempotent(s) else 0)


def test_zeta_of_constant_counts_upper_sets():
    index = ElementIndex(4)
    g = zeta_naive(CoeffVector(index, np.ones(index.total)))
    for i, s in enumerate(index.enumerate()):
        assert g.values[i] == cardinality(4 - s.rank)


def test_zeta_of_full_permutation():
    index = ElementIndex(4)
    t0 = PartialPerm(4, (3, 1, 4, 2))
    g = zeta_naive(CoeffVector.delta(index, t0))
    assert int(np.count_nonzero(g.values)) == 2 ** 4
    for i, s in enumerate(index.enumerate()):
        assert g.values[i] == (1 if leq(s, t0) else 0)


def test_mobius_matrix_inverts_zeta_on_r2():
    index = ElementIndex(2)
    product = (zeta_matrix(index) @ mobius_matrix(index)).toarray()
    assert np.array_equal(product, np.eye(index.total, dtype=product.dtype))
    elems = list(index.enumerate())
    dense = mobius_matrix(index).toarray()
    for i, s in enumerate(elems):
        for j, t in enumerate(elems):
            assert dense[i, j] == (mobius(s, t) if leq(s, t) else 0)


# ---------------------------------------------------------------- 快速 zeta
def test_zeta_fast_n1():
    index = ElementIndex(1)
    g = zeta_fast(CoeffVector(index, [3.0, 5.0]))
    assert list(g.values) == [3.0, 8.0]


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_zeta_fast_rook_matches_naive(n, rng):
    index = ElementIndex(n)
    for _ in range(20 if n < 5 else 3):
        f = _integer_vector(index, rng)
        assert np.array_equal(zeta_fast_rook(f).values, zeta_naive(f).values)


@pytest.mark.parametrize("n, m", [(2, 2), (3, 2), (2, 3)])
def test_zeta_fast_wreath_matches_naive(n, m, rng):
    group = cyclic_group(m)
    index = ElementIndex(n, group)
    for _ in range(5):
        f = _integer_vector(index, rng)
        assert np.array_equal(zeta_fast_wreath(f, group).values, zeta_naive(f).values)


def test_trivial_group_wreath_equals_rook(rng):
    trivial = cyclic_group(1)
    f_rook = _integer_vector(ElementIndex(3), rng)
    f_wreath = CoeffVector(ElementIndex(3, trivial), f_rook.values)
    assert np.array_equal(zeta_fast_wreath(f_wreath, trivial).values, zeta_fast_rook(f_rook).values)


@pytest.mark.parametrize("n, m", [(4, None), (3, 2)])
def test_zeta_fast_is_linear(n, m, rng):
    index = ElementIndex(n, None if m is None else cyclic_group(m))
    f = CoeffVector.random(index, rng)
    g = CoeffVector.random(index, rng)
    alpha, beta = complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2))
    combined = zeta_fast(CoeffVector(index, alpha * f.values + beta * g.values)).values
    expected = alpha * zeta_fast(f).values + beta * zeta_fast(g).values
    assert np.abs(combined - expected).max() <= 1e-12 * max(1.0, np.abs(expected).max())


def test_zeta_fast_requires_semigroup_basis():
    index = ElementIndex(2)
    with pytest.raises(DomainError):
        zeta_fast(CoeffVector.zeros(index, Basis.GROUPOID))


# ---------------------------------------------------------------- Möbius
@pytest.mark.parametrize("n", range(5))
def test_mobius_inverts_zeta(n, rng):
    index = ElementIndex(n)
    f = _integer_vector(index, rng)
    g = zeta_naive(f)
    assert np.array_equal(mobius_transform(g).values, f.values)
    assert np.array_equal(mobius_transform(g, naive=True).values, f.values)
    assert np.array_equal(mobius_naive(g).values, f.values)


def test_mobius_transform_wreath(z2, rng):
    index = ElementIndex(3, z2)
    f = _integer_vector(index, rng)
    assert np.array_equal(mobius_transform(zeta_fast(f)).values, f.values)


def test_mobius_of_identity_delta():
    n = 3
    index = ElementIndex(n)
    f = mobius_transform(CoeffVector.delta(index, identity(n), Basis.GROUPOID))
    for i, s in enumerate(index.enumerate()):
        expected = (-1) ** (n - s.rank) if is_idempotent(s) else 0
        assert f.values[i] == expected


def test_mobius_of_constant_n2():
    # 秩 1: 1 − 1 = 0；空映射: 1 − 4 + 2 = −1
    index = ElementIndex(2)
    f = mobius_transform(CoeffVector(index, np.ones(index.total), Basis.GROUPOID))
    expected = {2: 1, 1: 0, 0: -1}
    for i, s in enumerate(index.enumerate()):
        assert f.values[i] == expected[s.rank]


# ---------------------------------------------------------------- 计数与上界
@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_rook_operation_and_storage_bounds(n, rng):
    index = ElementIndex(n)
    counter = OpCounter()
    zeta_fast(_integer_vector(index, rng), counter)
    for k in range(n):
        assert counter.step_operations.get(k, 0) <= step_bound(n, k)
    assert counter.operations <= total_bound(n)
    assert counter.peak_stored <= storage_bound(n)
    assert counter.peak_stored <= trivial_storage_bound(n)


@pytest.mark.parametrize("n, m", [(3, 2), (4, 2), (3, 3)])
def test_wreath_operation_bounds(n, m, rng):
    group = cyclic_group(m)
    index = ElementIndex(n, group)
    counter = OpCounter()
    zeta_fast(_integer_vector(index, rng), counter)
    for k in range(n):
        assert counter.step_operations.get(k, 0) <= step_bound(n, k, group)
    assert counter.operations <= total_bound(n, group)
    assert counter.peak_stored <= storage_bound(n, group)


def test_bound_values():
    # n = 3: 步 1..3 的上界 (c² + (c−1)c(2c−1)/6)·C(3,k)²k!
    assert [step_bound(3, k) for k in (2, 1, 0)] == [18, 45, 14]
    assert total_bound(3) == 2 * 27 * 34 / 3
    assert storage_bound(3) == 2 * 34 + 3 * 9
    assert trivial_storage_bound(3) == 4 * 34
    assert naive_cost(2) == 1 * 6 + 4 * 1 + 2 * 0
    assert pipeline_bound(3) > total_bound(3)


def test_op_counter_as_dict():
    counter = OpCounter()
    counter.add_step(1, 5)
    counter.add_step(0, 2)
    counter.add_group(7)
    counter.observe_storage(10)
    counter.observe_storage(4)
    assert counter.as_dict() == {
        "operations": 7, "peak_stored": 10, "step_operations": {"0": 2, "1": 5}, "group_operations": 7,
    }
