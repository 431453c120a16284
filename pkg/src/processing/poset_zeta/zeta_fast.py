# -*- coding: utf-8 -*-
# 文件路径: src/processing/poset_zeta/zeta_fast.py
# -----------------------------------------
# 功能: R_n 与 G≀R_n 上的快速 zeta 变换及其带符号变体（快速 Möbius 反演）
# 接口:
#     zeta_fast(f, counter=None) -> CoeffVector[groupoid]
#     zeta_fast_rook(f, counter=None)
#     zeta_fast_wreath(f, group, counter=None)
#     mobius_transform(g, counter=None, naive=False) -> CoeffVector[semigroup]
# 版本: 1.0.0
# 最新更改时间: 2026-10-11
# 说明:
#   对秩 k 元素 s（余秩 c = n − k），记 d_1 < … < d_c、r_1 < … < r_c 为定义域/值域之补，
#   ζ(s, m) 为对所有 t ≥ s 且 t 不用到 d_1..d_m、r_1..r_m 的 f(t) 求和。
#   ζ(s, c) = f(s)，ζ(s, 0) 即所求；自顶向下逐秩计算，
#   m < c−1 时
#     ζ(s,m) = ζ(s,m+1) + Σ_{j>m} Σ_g ζ(s*(d_{m+1}→r_j, g), m)
#                       + Σ_{i>m+1} Σ_g ζ(s*(d_i→r_{m+1}, g), m)
#                       − Σ_{i,j>m+1} Σ_{g,h} ζ(s*(d_{m+1}→r_j, g)*(d_i→r_{m+1}, h), m)
#   扩张元的补集前 m 项与 s 相同，故按长度 m 直接取其已存的部分和。
#   工作区只保留当前秩及其上两个秩；输入 f 与输出整体常驻。
# -----------------------------------------

import logging
from typing import Dict, Optional

import numpy as np

from src.processing.exceptions import DimensionError
from src.processing.monoid_core.element_index import ElementIndex
from src.processing.monoid_core.group_table import GroupTable
from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector
from src.processing.poset_zeta.op_counter import OpCounter
from src.processing.poset_zeta.zeta_naive import mobius_naive

logger = logging.getLogger(__name__)


def _small_transform(f: np.ndarray, index: ElementIndex, counter: OpCounter, sign: int) -> np.ndarray:
    """n ≤ 1: 秩 1 的 |G| 个元素位于零映射之上"""
    out = f.copy()
    counter.observe_storage(2 * index.total)
    if index.n == 1:
        top = index.rank_slice(1)
        bottom = index.rank_slice(0).start
        for i in range(top.start, top.stop):
            out[bottom] += sign * f[i]
        counter.add_step(0, index.order)
    counter.add_step(index.n, 0)
    return out


def _fast_transform(f: np.ndarray, index: ElementIndex, counter: OpCounter, sign: int) -> np.ndarray:
    """
    sign = +1 为 zeta，sign = −1 为 Möbius（单扩张项取负，双扩张修正项不变）
    """
    n = index.n
    if n <= 1:
        return _small_transform(f, index, counter, sign)

    order = index.order
    stride = n + 1
    out = np.zeros(index.total, dtype=np.complex128)
    workspaces: Dict[int, np.ndarray] = {}

    def partial(k: int, gidx: np.ndarray, m: int) -> np.ndarray:
        """秩 k 元素（全局下标）在长度 m 处的部分和"""
        c = n - k
        if m == c:
            return f[gidx]
        if m == 0:
            return out[gidx]
        return workspaces[k][gidx - index.rank_offsets[k], m - 1]

    for k in range(n, -1, -1):
        c = n - k
        sl = index.rank_slice(k)
        cnt = sl.stop - sl.start

        for kk in [kk for kk in workspaces if kk > k + 2]:
            del workspaces[kk]
        work = np.zeros((cnt, max(c - 1, 0)), dtype=np.complex128)
        workspaces[k] = work
        counter.observe_storage(2 * index.total + sum(w.size for w in workspaces.values()))

        if c == 0:
            out[sl] = f[sl]
            counter.add_step(k, 0)
            continue

        keys = index.keys[sl]
        dcomp, rcomp = index.complements(k)
        dpow = index.powers[dcomp]

        def single(a: int, b: int, g: int) -> np.ndarray:
            return index.lookup(keys + (rcomp[:, b] + 1 + stride * g) * dpow[:, a])

        def double(a: int, b: int, g: int, h: int, m: int) -> np.ndarray:
            # d_{m+1} → r_{b+1}（标签 g），d_{a+1} → r_{m+1}（标签 h）
            ext = keys + (rcomp[:, b] + 1 + stride * g) * dpow[:, m]
            ext = ext + (rcomp[:, m] + 1 + stride * h) * dpow[:, a]
            return index.lookup(ext)

        current = f[sl].copy()
        per_element = 0
        for m in range(c - 1, -1, -1):
            acc = current.copy()
            if m == c - 1:
                for g in range(order):
                    acc += sign * partial(k + 1, single(m, m, g), m)
                per_element += order
            else:
                for b in range(m, c):
                    for g in range(order):
                        acc += sign * partial(k + 1, single(m, b, g), m)
                for a in range(m + 1, c):
                    for g in range(order):
                        acc += sign * partial(k + 1, single(a, m, g), m)
                for a in range(m + 1, c):
                    for b in range(m + 1, c):
                        for g in range(order):
                            for h in range(order):
                                acc -= partial(k + 2, double(a, b, g, h, m), m)
                per_element += order * (2 * (c - m) - 1) + order * order * (c - m - 1) ** 2
            if m >= 1:
                work[:, m - 1] = acc
            else:
                out[sl] = acc
            current = acc
        counter.add_step(k, per_element * cnt)
        logger.debug(f"步 {c}（秩 {k}）完成: {cnt} 个元素, 运算 {per_element * cnt}")

    return out


def _run(vec: CoeffVector, counter: Optional[OpCounter], sign: int, target: Basis) -> CoeffVector:
    counter = counter if counter is not None else OpCounter()
    values = _fast_transform(vec.values, vec.index, counter, sign)
    logger.info(f"快速{'zeta' if sign > 0 else ' Möbius'} 变换完成: {vec.index}, "
                f"运算 {counter.operations}, 峰值存储 {counter.peak_stored}")
    return CoeffVector(vec.index, values, target)


def zeta_fast_rook(f: CoeffVector, counter: Optional[OpCounter] = None) -> CoeffVector:
    f.require(Basis.SEMIGROUP)
    if f.index.group is not None and f.index.order > 1:
        raise DimensionError("zeta_fast_rook 不接受带非平凡标签群的向量")
    return _run(f, counter, +1, Basis.GROUPOID)


def zeta_fast_wreath(f: CoeffVector, group: GroupTable, counter: Optional[OpCounter] = None) -> CoeffVector:
    f.require(Basis.SEMIGROUP)
    if f.index.group is None or f.index.group != group:
        raise DimensionError(f"向量的标签群与 {group.name} 不符")
    return _run(f, counter, +1, Basis.GROUPOID)


def zeta_fast(f: CoeffVector, counter: Optional[OpCounter] = None) -> CoeffVector:
    """按编号是否带标签群分派到 rook / wreath 版本"""
    if f.index.group is None:
        return zeta_fast_rook(f, counter)
    return zeta_fast_wreath(f, f.index.group, counter)


def mobius_transform(g: CoeffVector, counter: Optional[OpCounter] = None, naive: bool = False) -> CoeffVector:
    """zeta 的逆: f(s) = Σ_{t ≥ s} (−1)^{rk t − rk s} g(t)"""
    g.require(Basis.GROUPOID)
    if naive:
        return mobius_naive(g)
    return _run(g, counter, -1, Basis.SEMIGROUP)
