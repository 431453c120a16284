# -*- coding: utf-8 -*-
"""
group_harmonics: 极大子群 S_k / G≀S_k 的不可约表示与群 Fourier 变换
"""

from src.processing.group_harmonics.chain import chain_ft, chain_ift
from src.processing.group_harmonics.finite_groups import MaximalSubgroup, symmetric_group
from src.processing.group_harmonics.group_ft import (
    GroupSpectrum, group_convolve, group_ft, group_ift, inverse_blocks, transform_blocks,
)
from src.processing.group_harmonics.irrep_cache import IrrepCache, read_irrep_file, write_irrep_file
from src.processing.group_harmonics.irreps import Irrep, IrrepSet, validate_irrep_set
from src.processing.group_harmonics.provider import base_irreps, maximal_subgroup_irreps
from src.processing.group_harmonics.symmetric import cyclic_irreps, symmetric_irreps, trivial_irreps
from src.processing.group_harmonics.wreath_irreps import wreath_irreps
from src.processing.group_harmonics.young import (
    hook_length_dim, partitions, standard_tableaux, young_matrix,
)

__all__ = [
    "Irrep", "IrrepSet", "GroupSpectrum", "MaximalSubgroup", "IrrepCache",
    "symmetric_irreps", "wreath_irreps", "cyclic_irreps", "trivial_irreps",
    "base_irreps", "maximal_subgroup_irreps", "symmetric_group",
    "group_ft", "group_ift", "group_convolve", "transform_blocks", "inverse_blocks",
    "chain_ft", "chain_ift", "validate_irrep_set", "read_irrep_file", "write_irrep_file",
    "partitions", "standard_tableaux", "hook_length_dim", "young_matrix",
]
