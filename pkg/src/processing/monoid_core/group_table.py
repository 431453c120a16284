# -*- coding: utf-8 -*-
# 文件路径: src/processing/monoid_core/group_table.py
# -----------------------------------------
# 功能: 有限群乘法表 GroupTable（G≀R_n 的标签群 G）
# 接口:
#     GroupTable(mul, identity=None, name="table")
#     trivial_group() -> GroupTable
#     cyclic_group(m) -> GroupTable
#     GroupTable.from_json(path) -> GroupTable
# 版本: 1.0.0
# 最新更改时间: 2026-10-08
# 说明: 元素以 0..order-1 的整数编号；阶 ≤ 64 时构造期穷举检验结合律
# -----------------------------------------

import hashlib
import json
import logging
from pathlib import Path
from typing import Optional

import numpy as np

from src.constants import MAX_GROUP_ORDER
from src.processing.exceptions import ConfigurationError, DomainError

logger = logging.getLogger(__name__)


class GroupTable:
    """
    以乘法表给出的有限群

    属性:
        order: 群的阶
        mul: (order, order) 乘法表，mul[x, y] = x·y
        inv: 逆元数组
        identity: 单位元编号
        name: 群描述符（"trivial"、"cyclic:3" 或自定义名）
    """

    def __init__(self, mul, identity: Optional[int] = None, name: str = "table",
                 kind: str = "table", irreps_path: Optional[str] = None):
        table = np.asarray(mul, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
            raise DomainError(f"乘法表形状非法: {table.shape}")
        order = table.shape[0]
        if order > MAX_GROUP_ORDER:
            raise ConfigurationError(f"群的阶 {order} 超过上限 {MAX_GROUP_ORDER}")
        if table.min() < 0 or table.max() >= order:
            raise DomainError("乘法表含越界元素编号")

        if identity is None:
            candidates = [e for e in range(order)
                          if np.array_equal(table[e], np.arange(order))
                          and np.array_equal(table[:, e], np.arange(order))]
            if not candidates:
                raise DomainError("乘法表没有单位元")
            identity = candidates[0]
        elif not (np.array_equal(table[identity], np.arange(order))
                  and np.array_equal(table[:, identity], np.arange(order))):
            raise DomainError(f"元素 {identity} 不是单位元")

        # 结合律穷举检验: (xy)z == x(yz)
        left = table[table[:, :, None], np.arange(order)[None, None, :]]
        right = table[np.arange(order)[:, None, None], table[None, :, :]]
        if not np.array_equal(left, right):
            raise DomainError("乘法表不满足结合律")

        hits = np.argwhere(table == identity)
        inv = np.full(order, -1, dtype=np.int64)
        for x, y in hits:
            if table[y, x] == identity:
                inv[x] = y
        if (inv < 0).any():
            raise DomainError("存在没有逆元的元素")

        self.order = order
        self.mul = table
        self.mul.setflags(write=False)
        self.inv = inv
        self.inv.setflags(write=False)
        self.identity = int(identity)
        self.name = name
        # kind: "trivial" / "cyclic" / "table"；表群的不可约表示须由 irreps_path 提供
        self.kind = "trivial" if order == 1 else kind
        self.irreps_path = irreps_path

    @property
    def descriptor(self) -> str:
        return self.name

    @property
    def digest(self) -> str:
        """乘法表的 SHA-256 摘要，用作缓存键"""
        h = hashlib.sha256()
        h.update(self.name.encode("utf-8"))
        h.update(self.mul.astype("<i8").tobytes())
        return h.hexdigest()

    def multiply(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupTable):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.mul, other.mul)

    def __hash__(self) -> int:
        return hash((self.order, self.mul.tobytes()))

    def __repr__(self) -> str:
        return f"GroupTable(name={self.name!r}, order={self.order})"

    @classmethod
    def from_json(cls, path: str) -> "GroupTable":
        """
        读取 JSON 群描述: {"name": ..., "mul": [[...]], "identity": 0, "irreps": "G.irr"}

        irreps 为可选的不可约表示缓存文件路径（相对路径以 JSON 所在目录为基准）
        """
        p = Path(path)
        try:
            with open(p, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigurationError(f"无法读取群描述文件 {path}: {e}") from e
        if "mul" not in data:
            raise ConfigurationError(f"群描述文件缺少 mul 字段: {path}")
        name = data.get("name", f"table:{p.name}")
        irreps_path = data.get("irreps")
        if irreps_path is not None:
            irreps_path = str((p.parent / irreps_path).resolve())
        logger.info(f"加载群乘法表: {path} (name={name})")
        return cls(data["mul"], identity=data.get("identity"), name=name,
                   kind="table", irreps_path=irreps_path)


def trivial_group() -> GroupTable:
    return GroupTable([[0]], identity=0, name="trivial")


def cyclic_group(m: int) -> GroupTable:
    """Z_m，元素 x 表示生成元的 x 次幂"""
    if m < 1:
        raise DomainError(f"循环群的阶必须为正: {m}")
    x = np.arange(m)
    return GroupTable((x[:, None] + x[None, :]) % m, identity=0, name=f"cyclic:{m}", kind="cyclic")
