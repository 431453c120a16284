# -*- coding: utf-8 -*-
# 文件路径: src/processing/poset_zeta/coeff_vector.py
# -----------------------------------------
# 功能: 半群上的复值系数向量（按 ElementIndex 稠密存储）
# 接口:
#     Basis.SEMIGROUP / Basis.GROUPOID
#     CoeffVector(index, values, basis)
#     CoeffVector.zeros / delta / random
# 版本: 1.0.0
# 最新更改时间: 2026-10-10
# -----------------------------------------

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from src.processing.exceptions import DimensionError, DomainError
from src.processing.monoid_core.element_index import Element, ElementIndex


class Basis(str, Enum):
    SEMIGROUP = "semigroup"
    GROUPOID = "groupoid"


@dataclass
class CoeffVector:
    """
    f = Σ f(s)·s（semigroup 基）或 f = Σ g(s)·⌊s⌋（groupoid 基）

    属性:
        index: 元素编号
        values: (index.total,) complex128
        basis: 当前所在的基
    """
    index: ElementIndex
    values: np.ndarray
    basis: Basis = Basis.SEMIGROUP

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.shape != (self.index.total,):
            raise DimensionError(f"系数向量长度 {self.values.shape} 与元素总数 {self.index.total} 不符")
        self.basis = Basis(self.basis)

    @classmethod
    def zeros(cls, index: ElementIndex, basis: Basis = Basis.SEMIGROUP) -> "CoeffVector":
        return cls(index, np.zeros(index.total, dtype=np.complex128), basis)

    @classmethod
    def delta(cls, index: ElementIndex, elem: Element, basis: Basis = Basis.SEMIGROUP) -> "CoeffVector":
        vec = cls.zeros(index, basis)
        vec.values[index.index_of(elem)] = 1.0
        return vec

    @classmethod
    def random(cls, index: ElementIndex, rng: Optional[np.random.Generator] = None,
               integer: bool = False, basis: Basis = Basis.SEMIGROUP) -> "CoeffVector":
        """随机向量: integer=True 时取 [-9, 9] 内整数，否则为标准复高斯"""
        rng = rng if rng is not None else np.random.default_rng()
        if integer:
            values = rng.integers(-9, 10, size=index.total).astype(np.complex128)
        else:
            values = rng.standard_normal(index.total) + 1j * rng.standard_normal(index.total)
        return cls(index, values, basis)

    def require(self, basis: Basis):
        if self.basis != basis:
            raise DomainError(f"需要 {basis.value} 基的系数，实际为 {self.basis.value}")

    def relabel(self, basis: Basis) -> "CoeffVector":
        return CoeffVector(self.index, self.values.copy(), basis)

    def copy(self) -> "CoeffVector":
        return CoeffVector(self.index, self.values.copy(), self.basis)

    def same_space(self, other: "CoeffVector"):
        if self.index is not other.index and (
                self.index.n != other.index.n or self.index.group != other.index.group):
            raise DimensionError("两个系数向量不在同一半群上")

    def __len__(self) -> int:
        return self.index.total
