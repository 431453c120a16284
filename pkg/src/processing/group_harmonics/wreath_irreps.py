# -*- coding: utf-8 -*-
# 文件路径: src/processing/group_harmonics/wreath_irreps.py
# -----------------------------------------
# 功能: 由 G 的完备表示集构造 G≀S_k 的完备表示集（张量-扩张-诱导）
# 接口:
#     compositions(k, parts) -> list[tuple]
#     wreath_irreps(base: IrrepSet, k, factored=None) -> IrrepSet
# 版本: 1.1.0
# 最新更改时间: 2026-10-19
# 说明:
#   标签 (λ_1, …, λ_q) 为每个 G-表示 η_t 指定一个分拆，Σ|λ_t| = k。
#   1) 位置按块分配: 前 |λ_1| 个位置归 η_1，依此类推；
#   2) 在块稳定子群 H = Π G≀S_{|λ_t|} 上取
#        ρ_H(π, g) = P(π)·T(g) ⊗ σ(π)，T(g) = ⊗_l η_{a(l)}(g_l)，
#      P(π) 把第 j 个张量因子移到第 π(j) 位，σ(π) = ⊗_t ρ_{λ_t}(π|块t)；
#   3) 诱导到 G≀S_k: 陪集 ↔ 着色（每个位置一种颜色，颜色 t 恰出现 |λ_t| 次），
#      按着色序列的字典序排列，代表元 τ_c 为保序地把块 t 送到颜色 t 位置的置换。
#   阶 ≤ MAX_FULL_TABLE_ORDER 时生成元上的矩阵按上述方式直接构造，再沿左乘扩展成全表；
#   更大时只存因子: (π, c) = (id, 行标签)·(π, 1)，故 ρ(s) = ρ(id, 行标签)·ρ(π, 1)，
#   共 k! + |G|^k 个矩阵。
# -----------------------------------------

import itertools
import logging
import math
from functools import reduce
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.constants import MAX_FULL_TABLE_ORDER, MAX_WREATH_ORDER
from src.processing.exceptions import ConfigurationError, ConstructionError
from src.processing.group_harmonics.finite_groups import MaximalSubgroup
from src.processing.group_harmonics.irreps import Irrep, IrrepSet, build_table, validate_irrep_set
from src.processing.group_harmonics.young import hook_length_dim, partitions, young_matrix
from src.processing.monoid_core.combinatorics import label_tuples, permutations_lex
from src.processing.monoid_core.group_table import trivial_group

logger = logging.getLogger(__name__)


def compositions(k: int, parts: int) -> List[Tuple[int, ...]]:
    """k 拆成 parts 个非负整数之和，字典序降序"""
    if parts == 0:
        return [()] if k == 0 else []
    out = []
    for first in range(k, -1, -1):
        for rest in compositions(k - first, parts - 1):
            out.append((first,) + rest)
    return out


class _InducedRep:
    """一个标签对应的诱导表示，在单个元素上求值"""

    def __init__(self, base_tables: Sequence[np.ndarray], comp: Tuple[int, ...], shapes):
        self.k = k = sum(comp)
        self.base_tables = base_tables
        self.shapes = shapes
        self.assign = np.repeat(np.arange(len(comp)), comp)
        self.offsets = np.concatenate([[0], np.cumsum(comp)[:-1]]).astype(np.int64)
        self.comp = comp

        self.colorings = sorted(set(itertools.permutations(self.assign.tolist())))
        self.where = {c: i for i, c in enumerate(self.colorings)}
        self.taus = [self._tau(c) for c in self.colorings]
        self.tau_invs = [np.argsort(t) for t in self.taus]

        self.factor_dims = [base_tables[t].shape[1] for t in self.assign]
        self.e_dim = int(np.prod(self.factor_dims)) if k else 1
        self.s_dim = int(np.prod([hook_length_dim(s) for s in shapes]))
        self.h_dim = self.e_dim * self.s_dim
        self.dim = len(self.colorings) * self.h_dim

        if k:
            self._multi = np.indices(self.factor_dims).reshape(k, -1)

    def _tau(self, coloring) -> np.ndarray:
        coloring = np.asarray(coloring)
        tau = np.empty(self.k, dtype=np.int64)
        for t, size in enumerate(self.comp):
            if size:
                tau[self.offsets[t]:self.offsets[t] + size] = np.nonzero(coloring == t)[0]
        return tau

    def _factor_permutation(self, perm: np.ndarray) -> np.ndarray:
        if self.k == 0:
            return np.ones((1, 1))
        out = np.empty_like(self._multi)
        out[perm, :] = self._multi
        target = np.ravel_multi_index(out, self.factor_dims)
        mat = np.zeros((self.e_dim, self.e_dim))
        mat[target, np.arange(self.e_dim)] = 1.0
        return mat

    def _subgroup_matrix(self, perm: np.ndarray, labels: np.ndarray) -> np.ndarray:
        base = reduce(np.kron, (self.base_tables[t][g] for t, g in zip(self.assign, labels)),
                      np.ones((1, 1), dtype=np.complex128))
        young = np.ones((1, 1))
        for t, size in enumerate(self.comp):
            o = self.offsets[t]
            local = perm[o:o + size] - o
            young = np.kron(young, young_matrix(self.shapes[t], local))
        return np.kron(self._factor_permutation(perm) @ base, young)

    def matrix(self, perm: Sequence[int], labels: Sequence[int]) -> np.ndarray:
        perm = np.asarray(perm, dtype=np.int64)
        labels = np.asarray(labels, dtype=np.int64)
        inv_perm = np.argsort(perm)
        hd = self.h_dim
        out = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for j, coloring in enumerate(self.colorings):
            moved = tuple(int(x) for x in np.asarray(coloring, dtype=np.int64)[inv_perm]) if self.k else ()
            i = self.where[moved]
            h_perm = self.tau_invs[i][perm[self.taus[j]]]
            h_labels = labels[self.taus[j]]
            out[i * hd:(i + 1) * hd, j * hd:(j + 1) * hd] = self._subgroup_matrix(h_perm, h_labels)
        return out


def wreath_irreps(base: IrrepSet, k: int, factored: Optional[bool] = None) -> IrrepSet:
    """
    G≀S_k 的完备表示集；标签按 (组成的字典序降序, 各分拆反字典序) 排列

    G 平凡时与 symmetric_irreps(k) 给出同样的矩阵。
    factored 为 None 时按阶自动选择全表或分解因子，True/False 强制其一。
    """
    if not base.has_tables:
        raise ConfigurationError("G 的表示集须带全表")
    group = base.group.group if base.group.group is not None else trivial_group()
    order = math.factorial(k) * group.order ** k
    if order > MAX_WREATH_ORDER:
        raise ConfigurationError(f"|{group.name}≀S_{k}| = {order} 超过上限 {MAX_WREATH_ORDER}")
    target = MaximalSubgroup(group, k)
    base_tables = [rho.table for rho in base]
    full = target.order <= MAX_FULL_TABLE_ORDER if factored is None else not factored
    if full:
        gens = target.generators()
    else:
        perms = permutations_lex(k)
        rows = label_tuples(k, group.order)
        ident = np.full(k, target.identity_label, dtype=np.int64)
        straight = np.arange(k)

    irreps = []
    for comp in compositions(k, len(base_tables)):
        for shapes in itertools.product(*(partitions(c) for c in comp)):
            rep = _InducedRep(base_tables, comp, shapes)
            if full:
                mats = {g: rep.matrix(*target.element(g)) for g in gens}
                table = build_table(target, mats, rep.dim, dtype=np.complex128)
                irreps.append(Irrep(tuple(shapes), rep.dim, table=table))
                continue
            perm_part = np.stack([rep.matrix(p, ident) for p in perms])
            label_part = np.stack([rep.matrix(straight, r) for r in rows])
            perm_part.setflags(write=False)
            label_part.setflags(write=False)
            irreps.append(Irrep(tuple(shapes), rep.dim, factors=(perm_part, label_part)))

    dim_sum = sum(rho.dim ** 2 for rho in irreps)
    if dim_sum != target.order:
        raise ConstructionError(f"{target.descriptor}: Σd² = {dim_sum} ≠ {target.order}")
    result = IrrepSet(target, irreps, kind="wreath")
    validate_irrep_set(result)
    logger.info(f"{target.descriptor} 表示集构建完成: {len(irreps)} 个不可约表示, "
                f"Σd² = {dim_sum} = {math.factorial(k)}·{group.order}^{k}, 全表={full}")
    return result
