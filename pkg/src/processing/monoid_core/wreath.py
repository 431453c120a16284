# -*- coding: utf-8 -*-
# 文件路径: src/processing/monoid_core/wreath.py
# -----------------------------------------
# 功能: 圈积 G≀R_n 的元素（{0}∪G 上每行每列至多一个非零元的 n×n 矩阵）
# 接口:
#     WreathElem(group, image, labels)
#     WreathElem.from_cells(n, group, cells) / .cells
#     wreath_compose / wreath_inverse / wreath_leq / wreath_mobius
#     wreath_perm_type / wreath_identity / wreath_zero / embed_partial_perm
#     parse_wreath / format_wreath
# 版本: 1.0.0
# 最新更改时间: 2026-10-09
# 说明: 与 PartialPerm 相同的 image 记号（列 j 映到行 image[j-1]），
#       labels[j-1] 为该列非零元的群元素编号；无定义列的标签统一记 0
# -----------------------------------------

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from src.processing.exceptions import DimensionError, DomainError
from src.processing.monoid_core.group_table import GroupTable
from src.processing.monoid_core.partial_perm import UNDEFINED, PartialPerm, idempotents


@dataclass(frozen=True)
class WreathElem:
    """
    G≀R_n 的元素

    属性:
        group: 标签群 G
        image: 底层部分置换的 1 基像元组
        labels: 每列的群标签（按列存放）
    """
    group: GroupTable
    image: Tuple[int, ...]
    labels: Tuple[int, ...]
    shape: PartialPerm = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        shape = PartialPerm(len(self.image), self.image)
        if len(self.labels) != shape.n:
            raise DimensionError(f"labels 长度 {len(self.labels)} 与 n={shape.n} 不符")
        labels = []
        for y, g in zip(shape.image, self.labels):
            g = int(g)
            if y == UNDEFINED:
                labels.append(0)
                continue
            if not 0 <= g < self.group.order:
                raise DomainError(f"群元素编号 {g} 超出 0..{self.group.order - 1}")
            labels.append(g)
        object.__setattr__(self, "image", shape.image)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "shape", shape)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def rank(self) -> int:
        return self.shape.rank

    @property
    def domain(self) -> Tuple[int, ...]:
        return self.shape.domain

    @property
    def range(self) -> Tuple[int, ...]:
        return self.shape.range

    @property
    def cells(self) -> Dict[Tuple[int, int], int]:
        """稀疏形式 {(row, col): g}，行列均为 1 基"""
        return {(y, j + 1): g for j, (y, g) in enumerate(zip(self.image, self.labels)) if y}

    @classmethod
    def from_cells(cls, n: int, group: GroupTable, cells: Dict[Tuple[int, int], int]) -> "WreathElem":
        image = [UNDEFINED] * n
        labels = [0] * n
        for (row, col), g in cells.items():
            if not (1 <= row <= n and 1 <= col <= n):
                raise DomainError(f"单元 ({row},{col}) 超出 {n}×{n}")
            if image[col - 1]:
                raise DomainError(f"第 {col} 列出现两个非零元")
            image[col - 1] = row
            labels[col - 1] = g
        return cls(group, tuple(image), tuple(labels))

    def __str__(self) -> str:
        return format_wreath(self)


def _check_compatible(a: WreathElem, b: WreathElem):
    if a.n != b.n:
        raise DimensionError(f"n 不一致: {a.n} vs {b.n}")
    if a.group != b.group:
        raise DimensionError(f"标签群不一致: {a.group.name} vs {b.group.name}")


def embed_partial_perm(s: PartialPerm, group: GroupTable) -> WreathElem:
    """R_n → G≀R_n，非零元全部取单位元"""
    return WreathElem(group, s.image, tuple(group.identity if y else 0 for y in s.image))


def wreath_identity(n: int, group: GroupTable) -> WreathElem:
    return WreathElem(group, tuple(range(1, n + 1)), (group.identity,) * n)


def wreath_zero(n: int, group: GroupTable) -> WreathElem:
    return WreathElem(group, (UNDEFINED,) * n, (0,) * n)


def wreath_compose(a: WreathElem, b: WreathElem) -> WreathElem:
    """矩阵乘积 a·b: (a∘b)(i,j) = a(i,k)·b(k,j)，k = b 的第 j 列所在行"""
    _check_compatible(a, b)
    image = []
    labels = []
    for y, g in zip(b.image, b.labels):
        if y and a.image[y - 1]:
            image.append(a.image[y - 1])
            labels.append(a.group.multiply(a.labels[y - 1], g))
        else:
            image.append(UNDEFINED)
            labels.append(0)
    return WreathElem(a.group, tuple(image), tuple(labels))


def wreath_inverse(a: WreathElem) -> WreathElem:
    """转置并对每个非零元取群逆"""
    image = [UNDEFINED] * a.n
    labels = [0] * a.n
    for j, (y, g) in enumerate(zip(a.image, a.labels)):
        if y:
            image[y - 1] = j + 1
            labels[y - 1] = int(a.group.inv[g])
    return WreathElem(a.group, tuple(image), tuple(labels))


def wreath_dom(a: WreathElem) -> WreathElem:
    return wreath_compose(wreath_inverse(a), a)


def wreath_ran(a: WreathElem) -> WreathElem:
    return wreath_compose(a, wreath_inverse(a))


def wreath_is_idempotent(a: WreathElem) -> bool:
    return all(y == 0 or (y == j + 1 and g == a.group.identity)
               for j, (y, g) in enumerate(zip(a.image, a.labels)))


def wreath_leq(s: WreathElem, t: WreathElem) -> bool:
    """s ≤ t 当且仅当 t 的矩阵在 s 的全部非零位置上与 s 相同"""
    _check_compatible(s, t)
    return all(y == 0 or (t.image[j] == y and t.labels[j] == g)
               for j, (y, g) in enumerate(zip(s.image, s.labels)))


def wreath_mobius(s: WreathElem, t: WreathElem) -> int:
    if not wreath_leq(s, t):
        raise DomainError(f"{s} ≰ {t}，Möbius 函数无定义")
    return -1 if (t.rank - s.rank) % 2 else 1


def wreath_perm_type(s: WreathElem) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    p_{ran}⁻¹ s p_{dom} ∈ G≀S_k

    返回 (perm, col_labels): perm 为 1 基一行记号，col_labels[i] 为定义域第 i 小元素所在列的标签
    """
    perm = []
    labels = []
    rng = {y: j for j, y in enumerate(s.range, start=1)}
    for x in s.domain:
        perm.append(rng[s.image[x - 1]])
        labels.append(s.labels[x - 1])
    return tuple(perm), tuple(labels)


def extend_wreath(s: WreathElem, d: int, r: int, g: int) -> WreathElem:
    """s*(g E_{r,d}): 在 (r, d) 处添加标签 g"""
    if s.image[d - 1]:
        raise DomainError(f"{d} 已在定义域中")
    if r in s.range:
        raise DomainError(f"{r} 已在值域中")
    image = list(s.image)
    labels = list(s.labels)
    image[d - 1] = r
    labels[d - 1] = g
    return WreathElem(s.group, tuple(image), tuple(labels))


def parse_wreath(text: str, n: int, group: GroupTable) -> WreathElem:
    """
    解析 "row,col:label;row,col:label" 形式，"-" 表示零矩阵

    例: "2,1:1;3,3:0" 表示 (2,1) 处为 g_1、(3,3) 处为 g_0
    """
    text = text.strip()
    if text == "-":
        return wreath_zero(n, group)
    cells: Dict[Tuple[int, int], int] = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            pos, label = part.split(":")
            row, col = (int(x) for x in pos.split(","))
            g = int(label)
        except ValueError as e:
            raise DomainError(f"无法解析的单元: {part!r}") from e
        if (row, col) in cells:
            raise DomainError(f"重复单元: {part!r}")
        cells[(row, col)] = g
    return WreathElem.from_cells(n, group, cells)


def format_wreath(s: WreathElem) -> str:
    cells = sorted(s.cells.items())
    if not cells:
        return "-"
    return ";".join(f"{row},{col}:{g}" for (row, col), g in cells)


def wreath_idempotents(n: int, group: GroupTable) -> List[WreathElem]:
    """G≀R_n 的幂等元恰为 R_n 幂等元的嵌入"""
    return [embed_partial_perm(e, group) for e in idempotents(n)]
