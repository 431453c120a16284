# -*- coding: utf-8 -*-
"""
poset_zeta: semigroup 基与 groupoid 基之间的 zeta / Möbius 变换及其计数
"""

from src.processing.poset_zeta.bounds import (
    group_stage_naive_ops, naive_cost, naive_rook_bound, pipeline_bound, step_bound,
    storage_bound, storage_lower_ratio, total_bound, trivial_storage_bound,
)
from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector
from src.processing.poset_zeta.op_counter import OpCounter
from src.processing.poset_zeta.zeta_fast import (
    mobius_transform, zeta_fast, zeta_fast_rook, zeta_fast_wreath,
)
from src.processing.poset_zeta.zeta_naive import mobius_naive, zeta_naive

__all__ = [
    "Basis", "CoeffVector", "OpCounter",
    "zeta_naive", "mobius_naive", "zeta_fast", "zeta_fast_rook", "zeta_fast_wreath",
    "mobius_transform",
    "step_bound", "total_bound", "storage_bound", "trivial_storage_bound", "naive_cost",
    "naive_rook_bound", "group_stage_naive_ops", "pipeline_bound", "storage_lower_ratio",
]
