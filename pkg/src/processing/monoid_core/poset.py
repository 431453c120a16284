# -*- coding: utf-8 -*-
# 文件路径: src/processing/monoid_core/poset.py
# -----------------------------------------
# 功能: 自然偏序的稀疏关联矩阵
# 接口:
#     domain_masks(index) -> np.ndarray
#     zeta_matrix(index) -> scipy.sparse.csr_matrix   Z[s, t] = 1 ⇔ s ≤ t
#     mobius_matrix(index) -> scipy.sparse.csr_matrix M[s, t] = μ(s, t)
# 版本: 1.0.0
# 最新更改时间: 2026-10-10
# 说明: s ≤ t 当且仅当 s 是 t 在其定义域某子集上的限制，按位掩码枚举子集
# -----------------------------------------

import logging

import numpy as np
from scipy import sparse

from src.processing.monoid_core.element_index import ElementIndex

logger = logging.getLogger(__name__)


def domain_masks(index: ElementIndex) -> np.ndarray:
    """每个元素定义域的位掩码（第 c 位对应第 c+1 列）"""
    if index.n == 0:
        return np.zeros(index.total, dtype=np.int64)
    bits = np.int64(1) << np.arange(index.n, dtype=np.int64)
    return (index.images > 0).astype(np.int64) @ bits


def _incidence(index: ElementIndex, signed: bool) -> sparse.csr_matrix:
    n = index.n
    masks = domain_masks(index)
    popcount = np.array([bin(int(m)).count("1") for m in range(1 << n)], dtype=np.int64)
    t_rank = popcount[masks]
    rows, cols, vals = [], [], []
    for m in range(1 << n):
        t = np.nonzero((masks & m) == m)[0]
        if t.size == 0:
            continue
        keep = np.array([(m >> c) & 1 for c in range(n)], dtype=np.int16)
        s = index.lookup(index.element_keys(index.images[t] * keep, index.labels[t] * keep))
        rows.append(s)
        cols.append(t)
        if signed:
            vals.append(np.where((t_rank[t] - popcount[m]) % 2 == 1, -1, 1))
        else:
            vals.append(np.ones(t.size, dtype=np.int64))
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    vals = np.concatenate(vals).astype(np.int64)
    mat = sparse.coo_matrix((vals, (rows, cols)), shape=(index.total, index.total)).tocsr()
    logger.debug(f"关联矩阵构建完成: {index}, nnz={mat.nnz}, signed={signed}")
    return mat


def zeta_matrix(index: ElementIndex) -> sparse.csr_matrix:
    return _incidence(index, signed=False)


def mobius_matrix(index: ElementIndex) -> sparse.csr_matrix:
    """μ(s,t) = (−1)^{rk t − rk s}（s ≤ t），否则 0"""
    return _incidence(index, signed=True)
