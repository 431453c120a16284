# -*- coding: utf-8 -*-
# 文件路径: src/processing/monoid_core/partial_perm.py
# -----------------------------------------
# 功能: 车monoid R_n 的元素（部分置换）及其代数运算
# 接口:
#     PartialPerm(n, image)
#     compose(a, b) / inverse(a) / leq(s, t) / mobius(s, t)
#     perm_type(s) / p_map(n, A) / dom(s) / ran(s)
#     extend(s, d, r) / complement_domain(s) / complement_range(s)
#     parse_partial_perm(text, n) / format_partial_perm(s)
# 版本: 1.0.0
# 最新更改时间: 2026-10-09
# 说明: image 采用 1 基取值，0 为"无定义"哨兵；映射作用在集合左侧，
#       compose(a, b) 即 a∘b，先作用 b
# -----------------------------------------

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.processing.exceptions import DimensionError, DomainError
from src.processing.monoid_core.combinatorics import colex_subsets

UNDEFINED = 0


@dataclass(frozen=True)
class PartialPerm:
    """
    {1..n} 上的单射部分映射

    属性:
        n: 基集大小
        image: 长度 n 的元组，image[i] 为 i+1 的像（1 基），0 表示无定义
        domain_mask / range_mask: 定义域与值域的位掩码（第 i 位对应元素 i+1）
    """
    n: int
    image: Tuple[int, ...]
    domain_mask: int = field(init=False, repr=False, compare=False)
    range_mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if self.n < 0 or len(image) != self.n:
            raise DimensionError(f"image 长度 {len(image)} 与 n={self.n} 不符")
        dmask = 0
        rmask = 0
        for i, x in enumerate(image):
            if x == UNDEFINED:
                continue
            if not 1 <= x <= self.n:
                raise DomainError(f"像 {x} 超出 1..{self.n}")
            if rmask >> (x - 1) & 1:
                raise DomainError(f"非单射: 像 {x} 重复出现")
            dmask |= 1 << i
            rmask |= 1 << (x - 1)
        object.__setattr__(self, "image", image)
        object.__setattr__(self, "domain_mask", dmask)
        object.__setattr__(self, "range_mask", rmask)

    @property
    def rank(self) -> int:
        return bin(self.domain_mask).count("1")

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.domain_mask >> i & 1)

    @property
    def range(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.range_mask >> i & 1)

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def to_matrix(self) -> np.ndarray:
        """车阵: 若 s(j) = i，则 (i, j) 处为 1"""
        m = np.zeros((self.n, self.n), dtype=np.int64)
        for j, i in enumerate(self.image):
            if i:
                m[i - 1, j] = 1
        return m

    def __str__(self) -> str:
        return format_partial_perm(self)


def identity(n: int) -> PartialPerm:
    return PartialPerm(n, tuple(range(1, n + 1)))


def zero(n: int) -> PartialPerm:
    return PartialPerm(n, (UNDEFINED,) * n)


def partial_identity(n: int, subset: Iterable[int]) -> PartialPerm:
    chosen = set(subset)
    return PartialPerm(n, tuple(i if i in chosen else UNDEFINED for i in range(1, n + 1)))


def _check_same_n(a: PartialPerm, b: PartialPerm):
    if a.n != b.n:
        raise DimensionError(f"n 不一致: {a.n} vs {b.n}")


def compose(a: PartialPerm, b: PartialPerm) -> PartialPerm:
    """a∘b: x 有定义当且仅当 x ∈ dom(b) 且 b(x) ∈ dom(a)"""
    _check_same_n(a, b)
    return PartialPerm(a.n, tuple(a.image[y - 1] if y else UNDEFINED for y in b.image))


def inverse(a: PartialPerm) -> PartialPerm:
    """唯一的半群逆，作为车阵即转置"""
    out = [UNDEFINED] * a.n
    for i, y in enumerate(a.image):
        if y:
            out[y - 1] = i + 1
    return PartialPerm(a.n, tuple(out))


def dom(s: PartialPerm) -> PartialPerm:
    """定义域对应的部分恒等映射，等于 s⁻¹s"""
    return partial_identity(s.n, s.domain)


def ran(s: PartialPerm) -> PartialPerm:
    """值域对应的部分恒等映射，等于 ss⁻¹"""
    return partial_identity(s.n, s.range)


def is_idempotent(s: PartialPerm) -> bool:
    return all(y == 0 or y == i + 1 for i, y in enumerate(s.image))


def idempotents(n: int, k: Optional[int] = None) -> List[PartialPerm]:
    """
    R_n 的幂等元（部分恒等映射）

    按秩降序、同秩内按定义域 colex 序排列；给定 k 时只返回秩 k 的 C(n,k) 个
    """
    ranks = [k] if k is not None else range(n, -1, -1)
    return [partial_identity(n, (a + 1 for a in subset))
            for r in ranks for subset in colex_subsets(n, r)]


def leq(s: PartialPerm, t: PartialPerm) -> bool:
    """自然偏序: t 作为部分函数扩张 s"""
    _check_same_n(s, t)
    return all(y == 0 or t.image[i] == y for i, y in enumerate(s.image))


def mobius(s: PartialPerm, t: PartialPerm) -> int:
    """区间 [s, t] 上的 Möbius 函数 (−1)^{rk t − rk s}"""
    if not leq(s, t):
        raise DomainError(f"{s} ≰ {t}，Möbius 函数无定义")
    return -1 if (t.rank - s.rank) % 2 else 1


def perm_type(s: PartialPerm) -> Tuple[int, ...]:
    """
    置换型 perm(s) = p_{ran(s)}⁻¹ s p_{dom(s)}

    返回 1 基一行记号: 第 i 位为 j 表示定义域第 i 小元素映到值域第 j 小元素。
    秩为 0 时返回空元组。
    """
    rng = {y: j for j, y in enumerate(s.range, start=1)}
    return tuple(rng[s.image[x - 1]] for x in s.domain)


def p_map(n: int, subset: Sequence[int]) -> PartialPerm:
    """{1..|A|} 到 A 的唯一保序双射"""
    elems = sorted(set(subset))
    if len(elems) != len(subset) or any(not 1 <= a <= n for a in elems):
        raise DomainError(f"{tuple(subset)} 不是 {{1..{n}}} 的子集")
    image = [UNDEFINED] * n
    for i, a in enumerate(elems):
        image[i] = a
    return PartialPerm(n, tuple(image))


def complement_domain(s: PartialPerm) -> Tuple[int, ...]:
    """d_1(s) < d_2(s) < …: 不在定义域中的元素"""
    return tuple(i + 1 for i in range(s.n) if not s.domain_mask >> i & 1)


def complement_range(s: PartialPerm) -> Tuple[int, ...]:
    """r_1(s) < r_2(s) < …: 不在值域中的元素"""
    return tuple(i + 1 for i in range(s.n) if not s.range_mask >> i & 1)


def extend(s: PartialPerm, d: int, r: int) -> PartialPerm:
    """s*(d→r): 把 d 加入定义域并映到 r"""
    if s.domain_mask >> (d - 1) & 1:
        raise DomainError(f"{d} 已在定义域中")
    if s.range_mask >> (r - 1) & 1:
        raise DomainError(f"{r} 已在值域中")
    image = list(s.image)
    image[d - 1] = r
    return PartialPerm(s.n, tuple(image))


def from_perm_type(n: int, domain: Sequence[int], rng: Sequence[int], perm: Sequence[int]) -> PartialPerm:
    """由 (dom, ran, perm) 还原元素: p_ran ∘ perm ∘ p_dom⁻¹"""
    domain = sorted(domain)
    rng = sorted(rng)
    image = [UNDEFINED] * n
    for i, x in enumerate(domain):
        image[x - 1] = rng[perm[i] - 1]
    return PartialPerm(n, tuple(image))


def parse_partial_perm(text: str, n: int) -> PartialPerm:
    """解析 "2,-,5,-,-,-,3" 形式的文本"""
    parts = [p.strip() for p in text.strip().split(",")]
    if len(parts) != n:
        raise DimensionError(f"元素 {text!r} 有 {len(parts)} 项，期望 {n} 项")
    image = []
    for p in parts:
        if p == "-":
            image.append(UNDEFINED)
        elif p.isdigit():
            image.append(int(p))
        else:
            raise DomainError(f"无法解析的像: {p!r}")
    return PartialPerm(n, tuple(image))


def format_partial_perm(s: PartialPerm) -> str:
    return ",".join(str(y) if y else "-" for y in s.image)


def all_partial_perms(n: int) -> Tuple[PartialPerm, ...]:
    """按规范枚举顺序列出 R_n 的全部元素（小 n 的穷举测试用）"""
    from src.processing.monoid_core.element_index import ElementIndex
    index = ElementIndex(n)
    return tuple(index.element_at(i) for i in range(index.total))
