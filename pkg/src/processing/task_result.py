#!/usr/bin/env python3.12
# -*- coding: utf-8 -*-
"""
文件: task_result.py
模块: src.processing.task_result
功能: 定义任务执行结果统一返回类型 TaskResult
版本: v1.1.0
最近更新: 2026-10-08
较上一版改进:
  1. 新增 payload（机器可读报告）与 exit_code 字段，供 CLI 输出 JSON 与退出码
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class TaskResult:
    """
    任务结果封装类

    属性:
        status: 执行状态，"success" 或 "failure"
        message: 详细信息或错误消息
        outputs: 生成的文件路径列表
        logs: 运行日志列表
        payload: 机器可读的报告内容（写到 stdout 的 JSON）
        exit_code: 进程退出码，0 成功，1 校验错误，2 上界/自检失败
    """
    status: str
    message: str
    outputs: List[str]
    logs: List[str]
    payload: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "success"
