# -*- coding: utf-8 -*-
# 文件路径: src/processing/group_harmonics/provider.py
# -----------------------------------------
# 功能: 按标签群与秩取得极大子群 G_k 的完备表示集（进程内记忆 + 可选磁盘缓存）
# 接口:
#     base_irreps(group) -> IrrepSet
#     maximal_subgroup_irreps(group, k, cache_dir=None) -> IrrepSet
# 版本: 1.0.0
# 最新更改时间: 2026-10-14
# -----------------------------------------

import logging
from typing import Dict, Optional, Tuple

from src.processing.exceptions import ConfigurationError
from src.processing.group_harmonics.irrep_cache import IrrepCache, read_irrep_file
from src.processing.group_harmonics.irreps import IrrepSet
from src.processing.group_harmonics.symmetric import cyclic_irreps, symmetric_irreps, trivial_irreps
from src.processing.group_harmonics.wreath_irreps import wreath_irreps
from src.processing.monoid_core.group_table import GroupTable

logger = logging.getLogger(__name__)

_MEMO: Dict[Tuple[str, int], IrrepSet] = {}


def base_irreps(group: GroupTable) -> IrrepSet:
    """标签群 G 自身的表示集: 循环群现算，表群从其 JSON 描述指向的表示文件读取"""
    if group.kind == "trivial":
        return trivial_irreps()
    if group.kind == "cyclic":
        return cyclic_irreps(group.order)
    if group.irreps_path:
        return read_irrep_file(group.irreps_path, group, 1, kind="base")
    raise ConfigurationError(f"群 {group.name} 未提供不可约表示文件（JSON 描述中的 irreps 字段）")


def maximal_subgroup_irreps(group: Optional[GroupTable], k: int,
                            cache_dir: Optional[str] = None) -> IrrepSet:
    """G 为空或平凡时返回 S_k 的 Young 正交形式，否则为 G≀S_k 的诱导表示"""
    symmetric = group is None or group.order == 1
    key = ("trivial" if symmetric else group.digest, k)
    if key in _MEMO:
        return _MEMO[key]

    cache = IrrepCache(cache_dir) if cache_dir else None
    kind = "symmetric" if symmetric else "wreath"
    lookup = None if symmetric else group
    result = cache.load(lookup, k, kind) if cache is not None else None
    if result is None:
        result = symmetric_irreps(k) if symmetric else wreath_irreps(base_irreps(group), k)
        if cache is not None and result.has_tables:
            cache.store(result)
    else:
        logger.info(f"表示缓存命中: {result.group.descriptor}")
    _MEMO[key] = result
    return result


def clear_memo():
    _MEMO.clear()
