# -*- coding: utf-8 -*-
# 文件路径: src/processing/monoid_core/combinatorics.py
# -----------------------------------------
# 功能: 规范枚举所需的组合工具
# 接口:
#     colex_subsets(n, k) -> list[tuple[int, ...]]
#     colex_rank(subset) -> int
#     permutations_lex(k) -> np.ndarray
#     lehmer_rank(perm) / lehmer_rank_batch(perms) / lehmer_unrank(rank, k)
#     label_tuples(k, order) / label_rank(labels, order)
# 版本: 1.0.0
# 最新更改时间: 2026-10-08
# 说明: 所有子集、置换均为 0 基；置换以一行记号给出，perm[j] 为 j 的像
# -----------------------------------------

import itertools
import math
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np


@lru_cache(maxsize=None)
def colex_subsets(n: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    """n 元集合的全部 k 子集，按 colex 序排列"""
    return tuple(sorted(itertools.combinations(range(n), k), key=lambda c: c[::-1]))


def colex_rank(subset: Sequence[int]) -> int:
    """升序 0 基子集在 colex 序中的位置"""
    return sum(math.comb(a, i + 1) for i, a in enumerate(sorted(subset)))


@lru_cache(maxsize=None)
def _perm_table(k: int) -> np.ndarray:
    table = np.array(list(itertools.permutations(range(k))), dtype=np.int64)
    return table.reshape(math.factorial(k), k)


def permutations_lex(k: int) -> np.ndarray:
    """S_k 的全部元素，按一行记号的字典序（即 Lehmer 码顺序），形状 (k!, k)"""
    return _perm_table(k)


def lehmer_rank(perm: Sequence[int]) -> int:
    k = len(perm)
    rank = 0
    for j in range(k):
        smaller = sum(1 for l in range(j + 1, k) if perm[l] < perm[j])
        rank += smaller * math.factorial(k - 1 - j)
    return rank


def lehmer_rank_batch(perms: np.ndarray) -> np.ndarray:
    """向量化的 Lehmer 秩，perms 形状 (m, k)"""
    perms = np.asarray(perms)
    m, k = perms.shape
    ranks = np.zeros(m, dtype=np.int64)
    for j in range(k):
        smaller = (perms[:, j + 1:] < perms[:, j:j + 1]).sum(axis=1)
        ranks += smaller * math.factorial(k - 1 - j)
    return ranks


def lehmer_unrank(rank: int, k: int) -> Tuple[int, ...]:
    if not 0 <= rank < math.factorial(k):
        raise ValueError(f"Lehmer 秩越界: {rank}")
    pool = list(range(k))
    out = []
    for j in range(k):
        f = math.factorial(k - 1 - j)
        q, rank = divmod(rank, f)
        out.append(pool.pop(q))
    return tuple(out)


@lru_cache(maxsize=None)
def label_tuples(k: int, order: int) -> np.ndarray:
    """长度 k 的群标签元组，里程表顺序（第一位最高位），形状 (order**k, k)"""
    table = np.array(list(itertools.product(range(order), repeat=k)), dtype=np.int64)
    return table.reshape(order ** k, k)


def label_rank(labels: Sequence[int], order: int) -> int:
    rank = 0
    for x in labels:
        rank = rank * order + int(x)
    return rank


def label_rank_batch(labels: np.ndarray, order: int) -> np.ndarray:
    labels = np.asarray(labels, dtype=np.int64)
    ranks = np.zeros(labels.shape[0], dtype=np.int64)
    for j in range(labels.shape[1]):
        ranks = ranks * order + labels[:, j]
    return ranks


def inverse_perm(perm: Sequence[int]) -> Tuple[int, ...]:
    inv = [0] * len(perm)
    for j, p in enumerate(perm):
        inv[p] = j
    return tuple(inv)
