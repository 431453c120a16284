# -*- coding: utf-8 -*-
# 文件路径: src/processing/group_harmonics/symmetric.py
# -----------------------------------------
# 功能: 对称群 S_k 的 Young 正交形式完备表示集，以及循环群、平凡群的特征标
# 接口:
#     symmetric_irreps(k) -> IrrepSet
#     cyclic_irreps(m) -> IrrepSet
#     trivial_irreps() -> IrrepSet
# 版本: 1.0.0
# 最新更改时间: 2026-10-12
# 说明: 阶不超过 MAX_FULL_TABLE_ORDER 时整表预计算，否则 ρ(σ) 按约化字按需计算，
#       群 Fourier 变换改走 chain 递推；首次构建后缓存
# -----------------------------------------

import logging
from functools import lru_cache

import numpy as np

from src.constants import MAX_FULL_TABLE_ORDER, MAX_SYMMETRIC_DEGREE
from src.processing.exceptions import ConfigurationError
from src.processing.group_harmonics.finite_groups import MaximalSubgroup, symmetric_group
from src.processing.group_harmonics.irreps import Irrep, IrrepSet, build_table, validate_irrep_set
from src.processing.group_harmonics.young import (
    hook_length_dim, partitions, young_generators, young_matrix,
)
from src.processing.monoid_core.group_table import cyclic_group

logger = logging.getLogger(__name__)


def _lazy_matrix(shape, group: MaximalSubgroup):
    def matrix(index: int) -> np.ndarray:
        return young_matrix(shape, group.perms[index])
    return matrix


@lru_cache(maxsize=None)
def symmetric_irreps(k: int) -> IrrepSet:
    """每个分拆 λ ⊢ k 一个表示，按分拆反字典序排列"""
    if not 0 <= k <= MAX_SYMMETRIC_DEGREE:
        raise ConfigurationError(f"symmetric_irreps 仅支持 0 ≤ k ≤ {MAX_SYMMETRIC_DEGREE}，实际 k={k}")
    group = symmetric_group(k)
    full = group.order <= MAX_FULL_TABLE_ORDER
    gens = group.generators()
    irreps = []
    for shape in partitions(k):
        dim = hook_length_dim(shape)
        if full:
            mats = dict(zip(gens, young_generators(shape)))
            irreps.append(Irrep(shape, dim, table=build_table(group, mats, dim)))
        else:
            irreps.append(Irrep(shape, dim, matrix_fn=_lazy_matrix(shape, group)))
    result = IrrepSet(group, irreps, kind="symmetric")
    validate_irrep_set(result)
    logger.info(f"S_{k} 表示集构建完成: {len(irreps)} 个不可约表示, 维数 {result.dims}, 全表={full}")
    return result


@lru_cache(maxsize=None)
def cyclic_irreps(m: int) -> IrrepSet:
    """Z_m 的 m 个特征标 χ_j(x) = exp(2πi·jx/m)"""
    group = MaximalSubgroup(cyclic_group(m), 1)
    x = np.arange(m)
    irreps = []
    for j in range(m):
        table = np.exp(2j * np.pi * j * x / m).reshape(m, 1, 1)
        table.setflags(write=False)
        irreps.append(Irrep(j, 1, table=table))
    result = IrrepSet(group, irreps, kind="base")
    validate_irrep_set(result)
    return result


def trivial_irreps() -> IrrepSet:
    """平凡群 Z_1 的唯一表示"""
    return cyclic_irreps(1)
