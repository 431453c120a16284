# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest

from src.processing.exceptions import ConfigurationError, DimensionError, DomainError
from src.processing.monoid_core.combinatorics import (
    colex_rank, colex_subsets, lehmer_rank, lehmer_unrank, permutations_lex,
)
from src.processing.monoid_core.element_index import ElementIndex, rank_block_shape
from src.processing.monoid_core.partial_perm import PartialPerm, compose, identity, zero
from src.processing.monoid_core.wreath import WreathElem, wreath_compose


def test_colex_order():
    assert colex_subsets(4, 2) == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))
    for i, subset in enumerate(colex_subsets(5, 3)):
        assert colex_rank(subset) == i


def test_lehmer_round_trip():
    for i, perm in enumerate(permutations_lex(4)):
        assert lehmer_rank(perm) == i
        assert lehmer_unrank(i, 4) == tuple(perm)


def test_layout_n2():
    index = ElementIndex(2)
    assert index.total == 7
    assert index.element_at(0) == identity(2)
    assert index.element_at(1) == PartialPerm(2, (2, 1))
    assert index.element_at(6) == zero(2)


@pytest.mark.parametrize("n", range(5))
def test_index_round_trip(n):
    index = ElementIndex(n)
    for i in range(index.total):
        assert index.index_of(index.element_at(i)) == i


def test_wreath_round_trip(z2):
    index = ElementIndex(3, z2)
    assert index.total == 139
    for i in range(index.total):
        assert index.index_of(index.element_at(i)) == i


def test_ranks_are_descending():
    index = ElementIndex(4)
    ranks = [index.element_at(i).rank for i in range(index.total)]
    assert ranks == sorted(ranks, reverse=True)
    for k in range(5):
        sl = index.rank_slice(k)
        assert sl.stop - sl.start == math.comb(4, k) ** 2 * math.factorial(k)
        assert index.rank_of(sl.start) == k


def test_rank_block_shape_matches_slices(z2):
    index = ElementIndex(3, z2)
    for k in range(4):
        sl = index.rank_slice(k)
        assert int(np.prod(rank_block_shape(3, k, 2))) == sl.stop - sl.start


def test_compose_indices_matches_compose():
    index = ElementIndex(3)
    elems = list(index.enumerate())
    for i in (0, 5, 17, 33):
        got = index.compose_indices(i)
        expected = [index.index_of(compose(elems[i], t)) for t in elems]
        assert list(got) == expected


def test_compose_indices_wreath(z2):
    index = ElementIndex(2, z2)
    elems = list(index.enumerate())
    for i in range(index.total):
        got = index.compose_indices(i)
        assert list(got) == [index.index_of(wreath_compose(elems[i], t)) for t in elems]


def test_index_errors(z2):
    index = ElementIndex(3)
    with pytest.raises(DomainError):
        index.element_at(index.total)
    with pytest.raises(DimensionError):
        index.index_of(identity(4))
    with pytest.raises(DimensionError):
        ElementIndex(2, z2).index_of(identity(2))
    with pytest.raises(DimensionError):
        index.index_of(WreathElem(z2, (1, 2, 3), (0, 0, 0)))


def test_n_cap():
    with pytest.raises(ConfigurationError):
        ElementIndex(9)
    with pytest.raises(DomainError):
        ElementIndex(-1)
