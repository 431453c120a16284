# -*- coding: utf-8 -*-
"""
monoid_core: R_n 与 G≀R_n 的元素、运算、规范编号、偏序结构与计数公式
"""

from src.processing.monoid_core.counting import cardinality, cardinality_recursive, rank_count
from src.processing.monoid_core.element_index import ElementIndex
from src.processing.monoid_core.group_table import GroupTable, cyclic_group, trivial_group
from src.processing.monoid_core.partial_perm import (
    PartialPerm, complement_domain, complement_range, compose, dom, extend,
    format_partial_perm, idempotents, identity, inverse, is_idempotent, leq,
    mobius, p_map, parse_partial_perm, perm_type, ran, zero,
)
from src.processing.monoid_core.poset import mobius_matrix, zeta_matrix
from src.processing.monoid_core.wreath import (
    WreathElem, embed_partial_perm, format_wreath, parse_wreath, wreath_compose,
    wreath_identity, wreath_idempotents, wreath_inverse, wreath_leq, wreath_mobius,
    wreath_perm_type, wreath_zero,
)

__all__ = [
    "PartialPerm", "WreathElem", "GroupTable", "ElementIndex",
    "compose", "inverse", "leq", "mobius", "perm_type", "p_map", "dom", "ran",
    "extend", "complement_domain", "complement_range", "idempotents", "identity", "zero",
    "is_idempotent", "parse_partial_perm", "format_partial_perm",
    "wreath_compose", "wreath_inverse", "wreath_leq", "wreath_mobius", "wreath_perm_type",
    "wreath_identity", "wreath_zero", "wreath_idempotents", "embed_partial_perm",
    "parse_wreath", "format_wreath",
    "cardinality", "cardinality_recursive", "rank_count",
    "cyclic_group", "trivial_group", "zeta_matrix", "mobius_matrix",
]
