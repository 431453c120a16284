# -*- coding: utf-8 -*-
# 文件路径: src/processing/monoid_core/counting.py
# -----------------------------------------
# 功能: R_n 与 G≀R_n 的基数公式（闭式求和与三项递推），全部使用 Python 精确整数
# 接口:
#     rank_count(n, k, group=None) -> int
#     cardinality(n, group=None) -> int
#     cardinality_recursive(n, group=None) -> int
# 版本: 1.0.0
# 最新更改时间: 2026-10-09
# -----------------------------------------

import math
from typing import Optional

from src.processing.exceptions import DomainError
from src.processing.monoid_core.group_table import GroupTable


def _order(group: Optional[GroupTable]) -> int:
    return 1 if group is None else group.order


def rank_count(n: int, k: int, group: Optional[GroupTable] = None) -> int:
    """秩为 k 的元素个数 C(n,k)²·k!·|G|^k"""
    if not 0 <= k <= n:
        return 0
    return math.comb(n, k) ** 2 * math.factorial(k) * _order(group) ** k


def cardinality(n: int, group: Optional[GroupTable] = None) -> int:
    """|R_n| = Σ_k C(n,k)² k!，带群时每项再乘 |G|^k"""
    if n < 0:
        raise DomainError(f"n 必须非负: {n}")
    return sum(rank_count(n, k, group) for k in range(n + 1))


def cardinality_recursive(n: int, group: Optional[GroupTable] = None) -> int:
    """
    三项递推（仅对 n ≥ 3 成立）:
        |G≀R_n| = ((2n−1)|G| + 1)·|G≀R_{n−1}| − (n−1)²|G|²·|G≀R_{n−2}|
    |G| = 1 时即 |R_n| = 2n|R_{n−1}| − (n−1)²|R_{n−2}|
    """
    if n < 3:
        raise DomainError(f"递推公式要求 n ≥ 3，实际 n={n}")
    q = _order(group)
    prev2 = cardinality(1, group)
    prev1 = cardinality(2, group)
    for m in range(3, n + 1):
        prev2, prev1 = prev1, ((2 * m - 1) * q + 1) * prev1 - (m - 1) ** 2 * q * q * prev2
    return prev1
