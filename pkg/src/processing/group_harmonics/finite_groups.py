# -*- coding: utf-8 -*-
# 文件路径: src/processing/group_harmonics/finite_groups.py
# -----------------------------------------
# 功能: 极大子群 G_k（S_k 或 G≀S_k）的元素编号与向量化乘法
# 接口:
#     MaximalSubgroup(group, k)
#         .order / .perms / .col_labels / .identity
#         .index_of(perms, col_labels) / .compose(a, b) / .inverse(a)
#         .generators() / .element(i)
# 版本: 1.0.0
# 最新更改时间: 2026-10-12
# 说明: 元素按 (perm 的 Lehmer 码, 按行标签里程表) 排列，与 ElementIndex 中
#       秩 k、dom = ran = {1..k} 的那一段逐一对应；
#       乘积 (π_w, g^w)(π_v, g^v) = (π_w π_v, l ↦ g^w_{π_v(l)} g^v_l)，标签按列存放
# -----------------------------------------

import math
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from src.processing.monoid_core.combinatorics import (
    label_rank_batch, label_tuples, lehmer_rank_batch, permutations_lex,
)
from src.processing.monoid_core.group_table import GroupTable


class MaximalSubgroup:
    """
    G_k = G≀S_k（group 为 None 或平凡群时即 S_k）

    属性:
        k: 次数
        group: 标签群，None 表示 S_k
        q: |G|
        order: k!·|G|^k
        perms: (order, k) 0 基一行记号
        col_labels: (order, k) 按列标签
    """

    def __init__(self, group: Optional[GroupTable], k: int):
        self.group = group
        self.k = k
        self.q = 1 if group is None else group.order
        self.order = math.factorial(k) * self.q ** k
        self.mul = np.zeros((1, 1), dtype=np.int64) if group is None else group.mul
        self.inv_label = np.zeros(1, dtype=np.int64) if group is None else group.inv
        self.identity_label = 0 if group is None else group.identity

        perms = permutations_lex(k)
        rows = label_tuples(k, self.q)
        self.perms = np.repeat(perms, len(rows), axis=0)
        row_labels = np.tile(rows, (len(perms), 1))
        self.col_labels = np.take_along_axis(row_labels, self.perms, axis=1)
        self.identity = int(self.index_of(np.arange(k)[None, :],
                                          np.full((1, k), self.identity_label, dtype=np.int64))[0])

    @property
    def is_symmetric(self) -> bool:
        return self.q == 1

    @property
    def descriptor(self) -> str:
        base = "trivial" if self.group is None else self.group.name
        return f"{base}≀S_{self.k}"

    def index_of(self, perms: np.ndarray, col_labels: np.ndarray) -> np.ndarray:
        perms = np.asarray(perms, dtype=np.int64)
        col_labels = np.asarray(col_labels, dtype=np.int64)
        m = perms.shape[0]
        if self.k == 0:
            return np.zeros(m, dtype=np.int64)
        rows = np.empty_like(col_labels)
        np.put_along_axis(rows, perms, col_labels, axis=1)
        return lehmer_rank_batch(perms) * self.q ** self.k + label_rank_batch(rows, self.q)

    def compose(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """逐对乘积 a[i]∘b[i] 的下标"""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        pa, pb = self.perms[a], self.perms[b]
        perm = np.take_along_axis(pa, pb, axis=1)
        labels = self.mul[np.take_along_axis(self.col_labels[a], pb, axis=1), self.col_labels[b]]
        return self.index_of(perm, labels)

    def inverse(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        pa = self.perms[a]
        perm = np.empty_like(pa)
        np.put_along_axis(perm, pa, np.arange(self.k)[None, :].repeat(len(a), axis=0), axis=1)
        labels = np.empty_like(pa)
        np.put_along_axis(labels, pa, self.inv_label[self.col_labels[a]], axis=1)
        return self.index_of(perm, labels)

    def generators(self) -> List[int]:
        """相邻对换 (s_i, 1) 与首列带标签的基群元素 (id, (g, 1, …, 1))"""
        k = self.k
        ident = np.full(k, self.identity_label, dtype=np.int64)
        gens = []
        for i in range(k - 1):
            perm = np.arange(k)
            perm[i], perm[i + 1] = i + 1, i
            gens.append(int(self.index_of(perm[None, :], ident[None, :])[0]))
        if k >= 1:
            for g in range(self.q):
                if g == self.identity_label:
                    continue
                labels = ident.copy()
                labels[0] = g
                gens.append(int(self.index_of(np.arange(k)[None, :], labels[None, :])[0]))
        return gens

    def element(self, i: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(int(x) for x in self.perms[i]), tuple(int(x) for x in self.col_labels[i])

    def __repr__(self) -> str:
        return f"MaximalSubgroup({self.descriptor}, order={self.order})"


@lru_cache(maxsize=32)
def symmetric_group(k: int) -> MaximalSubgroup:
    return MaximalSubgroup(None, k)
