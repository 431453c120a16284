# -*- coding: utf-8 -*-
# 文件路径: src/processing/poset_zeta/op_counter.py
# -----------------------------------------
# 功能: 运算次数与峰值存储计数器
# 说明: 一次"运算"指一次复数乘法加一次复数加法；zeta 阶段的系数均为 ±1，
#       每累加一项计一次
# -----------------------------------------

from dataclasses import dataclass, field
from typing import Dict


@dataclass
class OpCounter:
    operations: int = 0
    peak_stored: int = 0
    step_operations: Dict[int, int] = field(default_factory=dict)  # 秩 k → 该步运算数
    group_operations: int = 0

    def add_step(self, k: int, ops: int):
        self.step_operations[k] = self.step_operations.get(k, 0) + int(ops)
        self.operations += int(ops)

    def add_group(self, ops: int):
        self.group_operations += int(ops)

    def observe_storage(self, stored: int):
        self.peak_stored = max(self.peak_stored, int(stored))

    def as_dict(self) -> dict:
        return {
            "operations": self.operations,
            "peak_stored": self.peak_stored,
            "step_operations": {str(k): v for k, v in sorted(self.step_operations.items())},
            "group_operations": self.group_operations,
        }
