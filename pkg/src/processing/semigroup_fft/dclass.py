# -*- coding: utf-8 -*-
# 文件路径: src/processing/semigroup_fft/dclass.py
# -----------------------------------------
# 功能: D 类结构 DClassInfo 与 groupoid 系数到极大子群函数 h_{b,a} 的抽取
# 接口:
#     DClassInfo
#     build_dclasses(n, group=None) -> list[DClassInfo]   按 k = 0..n
#     extract_h(v, k, b, a) -> np.ndarray                  长度 |G_k|
#     rank_blocks(v, k) -> np.ndarray                      (r_k, r_k, |G_k|)，下标 [a, b, s]
# 版本: 1.0.0
# 最新更改时间: 2026-10-15
# 说明:
#   e_k 取 {1..k} 上的部分恒等映射，p_a 为 {1..k} 到 a 的定义域的保序双射。
#   ElementIndex 的秩 k 段按 (dom, ran, perm, 行标签) 排列，恰好
#   h_{b,a}(s) = v(p_b∘s∘p_a⁻¹) = 该段 reshape 后的 [a, b, s]。
# -----------------------------------------

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from src.processing.exceptions import DomainError
from src.processing.group_harmonics.finite_groups import MaximalSubgroup, symmetric_group
from src.processing.monoid_core.combinatorics import colex_rank
from src.processing.monoid_core.element_index import Element, rank_block_shape
from src.processing.monoid_core.group_table import GroupTable
from src.processing.monoid_core.partial_perm import (
    PartialPerm, idempotents, is_idempotent, p_map, partial_identity,
)
from src.processing.monoid_core.wreath import WreathElem, embed_partial_perm
from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector

logger = logging.getLogger(__name__)


@dataclass
class DClassInfo:
    """
    秩 k 的 D 类

    属性:
        k: 秩
        idempotents: C(n,k) 个部分恒等映射，按定义域 colex 序
        e_k: {1..k} 上的部分恒等映射
        p_maps: 与 idempotents 一一对应的 p_a
        subgroup: 极大子群 G_k（S_k 或 G≀S_k）
    """
    n: int
    k: int
    idempotents: List[Element]
    e_k: Element
    p_maps: List[Element]
    subgroup: MaximalSubgroup

    @property
    def r(self) -> int:
        return len(self.idempotents)

    @property
    def size(self) -> int:
        """|D_k| = r_k²·|G_k|"""
        return self.r ** 2 * self.subgroup.order


def _shape(e: Element) -> PartialPerm:
    return e.shape if isinstance(e, WreathElem) else e


def build_dclasses(n: int, group: Optional[GroupTable] = None) -> List[DClassInfo]:
    wreath = group is not None
    out = []
    for k in range(n + 1):
        idem = idempotents(n, k)
        maps = [p_map(n, a.domain) for a in idem]
        e_k = partial_identity(n, range(1, k + 1))
        if wreath:
            idem = [embed_partial_perm(a, group) for a in idem]
            maps = [embed_partial_perm(p, group) for p in maps]
            e_k = embed_partial_perm(e_k, group)
        subgroup = MaximalSubgroup(group, k) if wreath and group.order > 1 else symmetric_group(k)
        out.append(DClassInfo(n, k, idem, e_k, maps, subgroup))
    logger.debug(f"D 类构建完成: n={n}, r_k={[d.r for d in out]}")
    return out


def rank_blocks(v: CoeffVector, k: int) -> np.ndarray:
    """秩 k 段的 groupoid 系数，形状 (r_k, r_k, |G_k|)，下标 [a(定义域), b(值域), s]"""
    index = v.index
    return v.values[index.rank_slice(k)].reshape(rank_block_shape(index.n, k, index.order))


def _idempotent_position(e: Element, n: int, k: int) -> int:
    shape = _shape(e)
    if shape.n != n or shape.rank != k or not is_idempotent(shape):
        raise DomainError(f"{e} 不是秩 {k} 的幂等元")
    if isinstance(e, WreathElem) and any(
            g != e.group.identity for y, g in zip(e.image, e.labels) if y):
        raise DomainError(f"{e} 的标签不是单位元，不是幂等元")
    return colex_rank([x - 1 for x in shape.domain])


def extract_h(v: CoeffVector, k: int, b: Element, a: Element) -> np.ndarray:
    """h_{b,a}(s) = v(p_b∘s∘p_a⁻¹)，s 取遍 G_k"""
    v.require(Basis.GROUPOID)
    n = v.index.n
    ai = _idempotent_position(a, n, k)
    bi = _idempotent_position(b, n, k)
    return rank_blocks(v, k)[ai, bi].copy()
