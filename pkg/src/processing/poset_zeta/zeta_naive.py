# -*- coding: utf-8 -*-
# 文件路径: src/processing/poset_zeta/zeta_naive.py
# -----------------------------------------
# 功能: 基于稀疏关联矩阵的朴素 zeta / Möbius 变换（O(|S|²) 参考实现）
# 接口:
#     zeta_naive(f: CoeffVector[semigroup]) -> CoeffVector[groupoid]
#     mobius_naive(g: CoeffVector[groupoid]) -> CoeffVector[semigroup]
# 版本: 1.0.0
# 最新更改时间: 2026-10-10
# -----------------------------------------

import logging
from functools import lru_cache

from scipy import sparse

from src.processing.monoid_core.element_index import ElementIndex
from src.processing.monoid_core.poset import mobius_matrix, zeta_matrix
from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def _zeta(index: ElementIndex) -> sparse.csr_matrix:
    return zeta_matrix(index)


@lru_cache(maxsize=8)
def _mobius(index: ElementIndex) -> sparse.csr_matrix:
    return mobius_matrix(index)


def zeta_naive(f: CoeffVector) -> CoeffVector:
    """g(s) = Σ_{t ≥ s} f(t)"""
    f.require(Basis.SEMIGROUP)
    logger.debug(f"朴素 zeta 变换: {f.index}")
    return CoeffVector(f.index, _zeta(f.index) @ f.values, Basis.GROUPOID)


def mobius_naive(g: CoeffVector) -> CoeffVector:
    """f(s) = Σ_{t ≥ s} (−1)^{rk t − rk s} g(t)"""
    g.require(Basis.GROUPOID)
    logger.debug(f"朴素 Möbius 变换: {g.index}")
    return CoeffVector(g.index, _mobius(g.index) @ g.values, Basis.SEMIGROUP)
