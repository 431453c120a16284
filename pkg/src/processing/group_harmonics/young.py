# -*- coding: utf-8 -*-
# 文件路径: src/processing/group_harmonics/young.py
# -----------------------------------------
# 功能: 整数分拆、标准 Young 表与 Young 正交形式
# 接口:
#     partitions(k) -> list[tuple]                  反字典序
#     removable_corners(shape) -> list[int]         可移角所在行，自上而下
#     standard_tableaux(shape) -> list[tuple]       末字母序
#     hook_length_dim(shape) -> int
#     young_generators(shape) -> tuple[np.ndarray]  相邻对换 s_1..s_{k-1} 的正交矩阵
#     young_matrix(shape, perm) -> np.ndarray
#     reduced_word(perm) -> list[int]
# 版本: 1.0.0
# 最新更改时间: 2026-10-12
# 说明:
#   标准表以"每个字母所在格子 (row, col)"的元组表示，字母 1..k 对应下标 0..k-1。
#   末字母序: 先按字母 k 所在的可移角分组（角自上而下），组内递归沿用 k−1 的顺序，
#   于是 ρ_λ 限制到 S_{k−1} 恰为按角顺序排列的 ⊕ ρ_{λ⁻} 分块对角形式。
#   轴距 r = c(j+1) − c(j)，c = col − row；同行 +1，同列 −1。
# -----------------------------------------

import math
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from src.processing.exceptions import DomainError

Partition = Tuple[int, ...]
Tableau = Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def _partitions(k: int, largest: int) -> Tuple[Partition, ...]:
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(k: int) -> List[Partition]:
    """k 的全部分拆，按反字典序: (k), (k−1,1), (k−2,2), (k−2,1,1), …"""
    if k < 0:
        raise DomainError(f"k 必须非负: {k}")
    return list(_partitions(k, k))


def removable_corners(shape: Partition) -> List[int]:
    return [i for i, part in enumerate(shape)
            if part > 0 and (i + 1 == len(shape) or shape[i + 1] < part)]


def remove_corner(shape: Partition, row: int) -> Partition:
    out = list(shape)
    out[row] -= 1
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@lru_cache(maxsize=None)
def _tableaux(shape: Partition) -> Tuple[Tableau, ...]:
    if sum(shape) == 0:
        return ((),)
    out = []
    for row in removable_corners(shape):
        col = shape[row] - 1
        for t in _tableaux(remove_corner(shape, row)):
            out.append(t + ((row, col),))
    return tuple(out)


def standard_tableaux(shape: Sequence[int]) -> List[Tableau]:
    return list(_tableaux(tuple(shape)))


def hook_length_dim(shape: Sequence[int]) -> int:
    """钩长公式 f^λ = k! / Π hook(x)"""
    shape = tuple(shape)
    k = sum(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, part in enumerate(shape):
        for j in range(part):
            hooks *= (part - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(k) // hooks


@lru_cache(maxsize=None)
def young_generators(shape: Partition) -> Tuple[np.ndarray, ...]:
    """
    Young 正交形式下 s_j（对换字母 j+1 与 j+2，j = 0..k−2）的矩阵

    第 t 列是基向量 T_t 的像
    """
    tabs = _tableaux(shape)
    where = {t: i for i, t in enumerate(tabs)}
    k = sum(shape)
    d = len(tabs)
    gens = []
    for j in range(k - 1):
        m = np.zeros((d, d), dtype=np.float64)
        for t, tab in enumerate(tabs):
            (r0, c0), (r1, c1) = tab[j], tab[j + 1]
            if r0 == r1:
                m[t, t] = 1.0
            elif c0 == c1:
                m[t, t] = -1.0
            else:
                axial = (c1 - r1) - (c0 - r0)
                m[t, t] = 1.0 / axial
                swapped = list(tab)
                swapped[j], swapped[j + 1] = tab[j + 1], tab[j]
                m[where[tuple(swapped)], t] = math.sqrt(1.0 - 1.0 / axial ** 2)
        m.setflags(write=False)
        gens.append(m)
    return tuple(gens)


def reduced_word(perm: Sequence[int]) -> List[int]:
    """
    把 0 基一行记号的置换分解为 s_{i1}∘s_{i2}∘…（s_i 交换值 i 与 i+1）

    每次剥去一个左降位 i（值 i+1 出现在值 i 之前）
    """
    p = list(perm)
    pos = [0] * len(p)
    for x, v in enumerate(p):
        pos[v] = x
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if pos[i] > pos[i + 1]:
                word.append(i)
                # s_i∘p: 交换值 i 与 i+1
                a, b = pos[i], pos[i + 1]
                p[a], p[b] = i + 1, i
                pos[i], pos[i + 1] = b, a
                changed = True
                break
    return word


def young_matrix(shape: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """ρ_λ(perm)，由约化字上的生成元矩阵连乘得到"""
    shape = tuple(shape)
    if len(perm) != sum(shape):
        raise DomainError(f"置换长度 {len(perm)} 与分拆 {shape} 的大小不符")
    gens = young_generators(shape)
    out = np.eye(hook_length_dim(shape) if shape else 1)
    for i in reduced_word(perm):
        out = out @ gens[i]
    return out
