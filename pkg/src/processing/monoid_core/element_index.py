# -*- coding: utf-8 -*-
# 文件路径: src/processing/monoid_core/element_index.py
# -----------------------------------------
# 功能: R_n / G≀R_n 元素的规范稠密编号 ElementIndex
# 接口:
#     ElementIndex(n, group=None, max_n=DEFAULT_N_CAP, allow_unsafe=False)
#     .enumerate() / .index_of(elem) / .element_at(i)
#     .rank_slice(k) / .rank_offsets / .counts
#     .lookup(keys) / .element_keys(images, labels)
#     .complements(k) / .compose_indices(i)
# 版本: 1.0.0
# 最新更改时间: 2026-10-10
# 说明:
#   排列顺序: 秩降序（秩 n 在前）→ 定义域子集 colex → 值域子集 colex
#            → perm_type 的 Lehmer 码 → （圈积）按行升序的标签里程表，首位最高
#   每个元素有唯一整数键 key = Σ_c (image[c] + (n+1)·label[c])·B^c，B = (n+1)|G|，
#   查找通过已排序键上的 searchsorted 完成
# -----------------------------------------

import logging
import math
from typing import Iterator, Optional, Tuple, Union

import numpy as np

from src.constants import DEFAULT_N_CAP, MAX_DENSE_ELEMENTS
from src.processing.exceptions import ConfigurationError, DimensionError, DomainError
from src.processing.monoid_core.combinatorics import (
    colex_subsets, label_tuples, permutations_lex,
)
from src.processing.monoid_core.counting import cardinality, rank_count
from src.processing.monoid_core.group_table import GroupTable
from src.processing.monoid_core.partial_perm import PartialPerm
from src.processing.monoid_core.wreath import WreathElem

logger = logging.getLogger(__name__)

Element = Union[PartialPerm, WreathElem]


class ElementIndex:
    """
    规范枚举与稠密下标之间的双射

    属性:
        n: 基集大小
        group: 标签群；None 表示车monoid R_n
        order: |G|（R_n 时为 1）
        total: 元素总数
        counts: counts[k] 为秩 k 的元素个数
        rank_offsets: rank_offsets[k] 为第一个秩 k 元素的下标
        images / labels: (total, n) 的像与按列标签数组（0 基存储 1 基像，0 为无定义）
        keys: (total,) 元素键
    """

    def __init__(self, n: int, group: Optional[GroupTable] = None,
                 max_n: int = DEFAULT_N_CAP, allow_unsafe: bool = False):
        if n < 0:
            raise DomainError(f"n 必须非负: {n}")
        self.n = n
        self.group = group
        self.order = 1 if group is None else group.order
        self.total = cardinality(n, group)

        if not allow_unsafe:
            if n > max_n:
                raise ConfigurationError(f"n={n} 超过上限 {max_n}（如确需请使用 --unsafe-n）")
            if self.total > MAX_DENSE_ELEMENTS:
                raise ConfigurationError(
                    f"元素总数 {self.total} 超过稠密上限 {MAX_DENSE_ELEMENTS}（如确需请使用 --unsafe-n）")

        self.base = (n + 1) * self.order
        if self.base ** n >= 2 ** 63:
            raise ConfigurationError(f"元素键超出 int64 范围: ((n+1)|G|)^n = {self.base ** n}")
        self.powers = np.array([self.base ** c for c in range(n)], dtype=np.int64)

        self.counts = np.array([rank_count(n, k, group) for k in range(n + 1)], dtype=np.int64)
        self.rank_offsets = np.zeros(n + 1, dtype=np.int64)
        offset = 0
        for k in range(n, -1, -1):
            self.rank_offsets[k] = offset
            offset += int(self.counts[k])

        self.images = np.zeros((self.total, n), dtype=np.int16)
        self.labels = np.zeros((self.total, n), dtype=np.int16)
        for k in range(n, -1, -1):
            img, lab = self._enumerate_rank(k)
            sl = self.rank_slice(k)
            self.images[sl] = img
            self.labels[sl] = lab

        self.keys = self.element_keys(self.images, self.labels)
        self._order_by_key = np.argsort(self.keys, kind="stable")
        self._sorted_keys = self.keys[self._order_by_key]
        if np.any(np.diff(self._sorted_keys) == 0):
            raise ConfigurationError("元素键冲突")
        logger.debug(f"ElementIndex 构建完成: n={n}, |G|={self.order}, total={self.total}")

    # ------------------------------------------------------------------
    @property
    def is_wreath(self) -> bool:
        return self.group is not None

    def rank_slice(self, k: int) -> slice:
        if not 0 <= k <= self.n:
            raise DomainError(f"秩 {k} 超出 0..{self.n}")
        start = int(self.rank_offsets[k])
        return slice(start, start + int(self.counts[k]))

    def rank_of(self, i: int) -> int:
        self._check_index(i)
        for k in range(self.n + 1):
            sl = self.rank_slice(k)
            if sl.start <= i < sl.stop:
                return k
        raise DomainError(f"下标越界: {i}")

    def _check_index(self, i: int):
        if not 0 <= i < self.total:
            raise DomainError(f"下标 {i} 超出 [0, {self.total})")

    # ------------------------------------------------------------------
    def _enumerate_rank(self, k: int) -> Tuple[np.ndarray, np.ndarray]:
        """秩 k 块的像与标签数组，顺序为 (dom, ran, perm, 行标签)"""
        n = self.n
        subsets = np.array(colex_subsets(n, k), dtype=np.int64).reshape(math.comb(n, k), k)
        perms = permutations_lex(k)
        row_labels = label_tuples(k, self.order)
        c, f, l = len(subsets), len(perms), len(row_labels)
        di, ri, pi, li = np.indices((c, c, f, l)).reshape(4, -1)
        cnt = di.size

        cols = subsets[di]
        rows = np.take_along_axis(subsets[ri], perms[pi], axis=1)
        col_labels = np.take_along_axis(row_labels[li], perms[pi], axis=1)

        images = np.zeros((cnt, n), dtype=np.int16)
        labels = np.zeros((cnt, n), dtype=np.int16)
        if k:
            ar = np.arange(cnt)[:, None]
            images[ar, cols] = rows + 1
            labels[ar, cols] = col_labels
        return images, labels

    def element_keys(self, images: np.ndarray, labels: np.ndarray) -> np.ndarray:
        digits = np.asarray(images, dtype=np.int64) + (self.n + 1) * np.asarray(labels, dtype=np.int64)
        if self.n == 0:
            return np.zeros(digits.shape[0], dtype=np.int64)
        return digits @ self.powers

    def lookup(self, keys: np.ndarray, check: bool = True) -> np.ndarray:
        """键 → 稠密下标（向量化）"""
        keys = np.asarray(keys, dtype=np.int64)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.total - 1)
        if check and not np.array_equal(self._sorted_keys[pos], keys):
            raise DomainError("存在不属于该半群的键")
        return self._order_by_key[pos]

    # ------------------------------------------------------------------
    def _coerce(self, elem: Element) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        if elem.n != self.n:
            raise DimensionError(f"元素的 n={elem.n} 与编号的 n={self.n} 不符")
        if isinstance(elem, WreathElem):
            if self.group is None or elem.group != self.group:
                raise DimensionError("元素的标签群与编号不符")
            return elem.image, elem.labels
        if self.group is not None and self.order > 1:
            raise DimensionError("圈积编号需要 WreathElem")
        return elem.image, (0,) * self.n

    def index_of(self, elem: Element) -> int:
        image, labels = self._coerce(elem)
        key = self.element_keys(np.array([image]), np.array([labels]))
        return int(self.lookup(key)[0])

    def element_at(self, i: int) -> Element:
        self._check_index(i)
        image = tuple(int(x) for x in self.images[i])
        if self.group is None:
            return PartialPerm(self.n, image)
        return WreathElem(self.group, image, tuple(int(x) for x in self.labels[i]))

    def enumerate(self) -> Iterator[Element]:
        for i in range(self.total):
            yield self.element_at(i)

    # ------------------------------------------------------------------
    def complements(self, k: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        秩 k 块中每个元素的 d_1 < … < d_c 与 r_1 < … < r_c（0 基列/行号），c = n − k
        """
        sl = self.rank_slice(k)
        img = self.images[sl].astype(np.int64)
        c = self.n - k
        cols = np.arange(self.n)
        dcomp = np.sort(np.where(img == 0, cols, self.n), axis=1)[:, :c]
        present = np.zeros((img.shape[0], self.n + 1), dtype=bool)
        np.put_along_axis(present, img, True, axis=1)
        present = present[:, 1:]
        rcomp = np.sort(np.where(present, self.n, cols), axis=1)[:, :c]
        return dcomp, rcomp

    def compose_indices(self, i: int) -> np.ndarray:
        """element_i ∘ t 对全部 t 的下标"""
        self._check_index(i)
        a_img = self.images[i].astype(np.int64)
        a_lab = self.labels[i].astype(np.int64)
        t_img = self.images.astype(np.int64)
        t_lab = self.labels.astype(np.int64)
        through = np.where(t_img > 0, t_img - 1, 0)
        defined = (t_img > 0) & (a_img[through] > 0)
        img = np.where(defined, a_img[through], 0)
        if self.group is None:
            lab = np.zeros_like(img)
        else:
            lab = np.where(defined, self.group.mul[a_lab[through], t_lab], 0)
        return self.lookup(self.element_keys(img, lab))

    def __repr__(self) -> str:
        name = "R" if self.group is None else f"{self.group.name}≀R"
        return f"ElementIndex({name}_{self.n}, total={self.total})"


def rank_block_shape(n: int, k: int, order: int = 1) -> Tuple[int, int, int]:
    """秩 k 块按 (dom, ran, G_k) 展开的形状"""
    c = math.comb(n, k)
    return c, c, math.factorial(k) * order ** k
