# -*- coding: utf-8 -*-
# 文件路径: src/processing/group_harmonics/irreps.py
# -----------------------------------------
# 功能: 不可约酉表示 Irrep / 完备表示集 IrrepSet，表示表的生成与结构检验
# 接口:
#     Irrep(label, dim, table=None, matrix_fn=None, factors=None)
#     IrrepSet(group, irreps, kind)
#     build_table(group, generator_matrices, dim, dtype) -> np.ndarray
#     validate_irrep_set(irreps, tolerance=STAGE_TOLERANCE, rng=None)
#     label_to_str(label) / label_from_str(text)
# 版本: 1.1.0
# 最新更改时间: 2026-10-19
# -----------------------------------------

import json
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from src.constants import (
    CHARACTER_SEPARATION, EXHAUSTIVE_CHECK_ORDER, SAMPLED_CHECK_PAIRS, STAGE_TOLERANCE,
)
from src.processing.exceptions import ConstructionError
from src.processing.group_harmonics.finite_groups import MaximalSubgroup

logger = logging.getLogger(__name__)


@dataclass
class Irrep:
    """
    一个不可约表示

    属性:
        label: 分拆（S_k）、分拆元组（G≀S_k）或整数（基群 G 的表示）
        dim: d_ρ
        table: (|group|, d, d) 全表；过大时为 None，通过 matrix_fn 或 factors 按需计算
        factors: G≀S_k 的分解 (perm_part, label_part)，形状 (k!, d, d) 与 (|G|^k, d, d)，
            ρ(p·|G|^k + r) = label_part[r] @ perm_part[p]
    """
    label: object
    dim: int
    table: Optional[np.ndarray] = None
    matrix_fn: Optional[Callable[[int], np.ndarray]] = field(default=None, repr=False)
    factors: Optional[Tuple[np.ndarray, np.ndarray]] = field(default=None, repr=False)

    def matrix(self, index: int) -> np.ndarray:
        if self.table is not None:
            return self.table[index]
        if self.factors is not None:
            perm_part, label_part = self.factors
            p, r = divmod(int(index), len(label_part))
            return label_part[r] @ perm_part[p]
        if self.matrix_fn is None:
            raise ConstructionError(f"表示 {self.label} 既无全表也无按需构造")
        return self.matrix_fn(index)


@dataclass
class IrrepSet:
    """群 G_k 的完备不等价不可约表示集合；kind 为 symmetric / wreath / base"""
    group: MaximalSubgroup
    irreps: List[Irrep]
    kind: str = "symmetric"

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def dims(self) -> List[int]:
        return [rho.dim for rho in self.irreps]

    @property
    def labels(self) -> List[object]:
        return [rho.label for rho in self.irreps]

    @property
    def has_tables(self) -> bool:
        return all(rho.table is not None for rho in self.irreps)

    @property
    def is_factored(self) -> bool:
        return all(rho.factors is not None for rho in self.irreps)

    @property
    def is_real(self) -> bool:
        return self.has_tables and all(not np.iscomplexobj(rho.table) for rho in self.irreps)

    def __len__(self) -> int:
        return len(self.irreps)

    def __iter__(self):
        return iter(self.irreps)


def _to_list(label):
    if isinstance(label, tuple):
        return [_to_list(x) for x in label]
    return label


def _to_tuple(obj):
    if isinstance(obj, list):
        return tuple(_to_tuple(x) for x in obj)
    return obj


def label_to_str(label) -> str:
    return json.dumps(_to_list(label), separators=(",", ":"))


def label_from_str(text: str):
    return _to_tuple(json.loads(text))


def build_table(group: MaximalSubgroup, generator_matrices: Dict[int, np.ndarray],
                dim: int, dtype=np.float64) -> np.ndarray:
    """
    沿左乘生成元做广度优先扩展: ρ(x∘w) = ρ(x)ρ(w)
    """
    table = np.zeros((group.order, dim, dim), dtype=dtype)
    filled = np.zeros(group.order, dtype=bool)
    table[group.identity] = np.eye(dim, dtype=dtype)
    filled[group.identity] = True
    frontier = np.array([group.identity], dtype=np.int64)
    while frontier.size:
        fresh_all = []
        for g, mat in generator_matrices.items():
            prod = group.compose(np.full(frontier.size, g, dtype=np.int64), frontier)
            fresh = ~filled[prod]
            if not fresh.any():
                continue
            targets = prod[fresh]
            table[targets] = np.matmul(mat, table[frontier[fresh]])
            filled[targets] = True
            fresh_all.append(targets)
        frontier = np.concatenate(fresh_all) if fresh_all else np.zeros(0, dtype=np.int64)
    if not filled.all():
        raise ConstructionError(f"生成元未能生成整个群 {group.descriptor}")
    table.setflags(write=False)
    return table


def _check_pairs(irreps: IrrepSet, rng: np.random.Generator):
    """返回 (左因子下标, 右因子下标) 检验对；无全表时按需构造矩阵代价高，抽样减为 1/10"""
    n = irreps.order
    if n <= EXHAUSTIVE_CHECK_ORDER and irreps.has_tables:
        return None
    count = SAMPLED_CHECK_PAIRS if irreps.has_tables else SAMPLED_CHECK_PAIRS // 10
    return rng.integers(0, n, size=count), rng.integers(0, n, size=count)


def validate_irrep_set(irreps: IrrepSet, tolerance: float = STAGE_TOLERANCE,
                       rng: Optional[np.random.Generator] = None) -> Dict[str, float]:
    """
    结构检验: 同态、酉性、单位元、Σd² = |G|、特征标两两可分

    阶 ≤ EXHAUSTIVE_CHECK_ORDER 时同态穷举检验全部元素对，否则随机抽样。
    任一项不通过即抛出 ConstructionError；返回各项最大误差。
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    group = irreps.group
    n = group.order
    report = {"homomorphism": 0.0, "unitarity": 0.0, "identity": 0.0}

    dim_sum = sum(d * d for d in irreps.dims)
    if dim_sum != n:
        raise ConstructionError(f"{group.descriptor}: Σd² = {dim_sum} ≠ |G| = {n}")

    pairs = _check_pairs(irreps, rng)
    sample = np.arange(n) if pairs is None else np.unique(np.concatenate(pairs))
    characters = []
    for rho in irreps:
        d = rho.dim
        eye = np.eye(d)
        report["identity"] = max(report["identity"], float(np.abs(rho.matrix(group.identity) - eye).max()))

        if rho.table is not None:
            mats = rho.table
            unit = float(np.abs(np.matmul(mats, np.conj(np.swapaxes(mats, -1, -2))) - eye).max())
            trace = np.trace(mats, axis1=-2, axis2=-1)
        else:
            # 逐个元素现算，不堆叠 |sample|·d² 的矩阵
            unit, trace = 0.0, np.empty(len(sample), dtype=np.complex128)
            for pos, i in enumerate(sample):
                m = rho.matrix(int(i))
                unit = max(unit, float(np.abs(m @ np.conj(m.T) - eye).max()))
                trace[pos] = np.trace(m)
        report["unitarity"] = max(report["unitarity"], unit)
        characters.append(trace)

        if pairs is None:
            everyone = np.arange(n)
            for s in range(n):
                prod = group.compose(np.full(n, s, dtype=np.int64), everyone)
                err = np.abs(np.matmul(rho.table[s], rho.table) - rho.table[prod]).max()
                report["homomorphism"] = max(report["homomorphism"], float(err))
        else:
            left, right = pairs
            prod = group.compose(left, right)
            for a, b, c in zip(left, right, prod):
                err = np.abs(rho.matrix(int(a)) @ rho.matrix(int(b)) - rho.matrix(int(c))).max()
                report["homomorphism"] = max(report["homomorphism"], float(err))

    for key, value in report.items():
        if value > tolerance:
            raise ConstructionError(f"{group.descriptor}: {key} 误差 {value:.3e} 超过容差 {tolerance}")

    for i in range(len(characters)):
        for j in range(i + 1, len(characters)):
            gap = float(np.abs(characters[i] - characters[j]).max())
            if gap <= CHARACTER_SEPARATION:
                raise ConstructionError(
                    f"{group.descriptor}: 表示 {irreps.labels[i]} 与 {irreps.labels[j]} 的特征标无法区分")
    report["dim_sum"] = float(dim_sum)
    logger.debug(f"{group.descriptor} 表示集检验通过: {report}")
    return report
