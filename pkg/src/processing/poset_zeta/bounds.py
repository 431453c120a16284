# -*- coding: utf-8 -*-
# 文件路径: src/processing/poset_zeta/bounds.py
# -----------------------------------------
# 功能: 快速 zeta 变换的闭式运算/存储上界，以及朴素算法与整体流水线的参考代价
# 接口:
#     step_bound(n, k, group=None) -> int
#     total_bound(n, group=None) -> Fraction
#     storage_bound(n, group=None) -> int
#     trivial_storage_bound(n, group=None) -> int
#     naive_cost(n, group=None) -> int
#     naive_rook_bound(n) -> int
#     group_stage_naive_ops(n, group=None) -> int
#     pipeline_bound(n) -> Fraction
#     storage_lower_ratio(n) -> float
# 版本: 1.0.0
# 最新更改时间: 2026-10-11
# -----------------------------------------

import math
from fractions import Fraction
from typing import Optional

from src.processing.monoid_core.counting import cardinality, rank_count
from src.processing.monoid_core.group_table import GroupTable


def _q(group: Optional[GroupTable]) -> int:
    return 1 if group is None else group.order


def step_bound(n: int, k: int, group: Optional[GroupTable] = None) -> int:
    """第 n−k 步: (|G|(n−k)² + |G|²(n−k−1)(n−k)(2n−2k−1)/6)·C(n,k)²k!|G|^k"""
    c = n - k
    q = _q(group)
    per_element = q * c * c + q * q * ((c - 1) * c * (2 * c - 1) // 6) if c > 0 else 0
    return per_element * rank_count(n, k, group)


def total_bound(n: int, group: Optional[GroupTable] = None) -> Fraction:
    """⅔|G|²n³|S|；|G| = 1 时为 ⅔n³|R_n|"""
    q = _q(group)
    return Fraction(2 * q * q * n ** 3 * cardinality(n, group), 3)


def storage_bound(n: int, group: Optional[GroupTable] = None) -> int:
    """2|S| + 3·max_{k<n} (n−k−1)·C(n,k)²k!|G|^k"""
    peak_workspace = max([(n - k - 1) * rank_count(n, k, group) for k in range(n)], default=0)
    return 2 * cardinality(n, group) + 3 * peak_workspace


def trivial_storage_bound(n: int, group: Optional[GroupTable] = None) -> int:
    """每个秩 k 元素保存 n−k+1 个部分和时的总量 (n+1)|S|"""
    return (n + 1) * cardinality(n, group)


def naive_cost(n: int, group: Optional[GroupTable] = None) -> int:
    """逐个区间求和的加法次数: 每个秩 k 元素的上集与 G≀R_{n−k} 同构"""
    return sum(rank_count(n, k, group) * (cardinality(n - k, group) - 1) for k in range(n + 1))


def naive_rook_bound(n: int) -> int:
    """朴素 zeta 的粗略上界 2ⁿ|R_n|"""
    return 2 ** n * cardinality(n)


def group_stage_naive_ops(n: int, group: Optional[GroupTable] = None) -> int:
    """r_k² 次直接群 Fourier 变换，每次 |G_k|·Σd_ρ² = |G_k|²"""
    total = 0
    for k in range(n + 1):
        g_k = math.factorial(k) * _q(group) ** k
        total += math.comb(n, k) ** 2 * g_k * g_k
    return total


def pipeline_bound(n: int) -> Fraction:
    """采用 S_k 上 ¾k(k−1)k! 的快速群 FFT 时整体的上界 ⅔n³|R_n| + ¾n(n−1)|R_n|"""
    card = cardinality(n)
    return Fraction(2 * n ** 3 * card, 3) + Fraction(3 * n * (n - 1) * card, 4)


def storage_lower_ratio(n: int) -> float:
    """(1/3)·n^{1/4}: 大的完全平方 n 下存储需求与 |R_n| 之比的渐近下界，仅供报告"""
    return n ** 0.25 / 3.0
