# -*- coding: utf-8 -*-
# 文件路径: src/processing/exceptions.py
# -----------------------------------------
# 功能: 统一异常类型，run_* 任务层据此映射退出码
# 版本: 1.0.0
# 最新更改时间: 2026-10-08
# -----------------------------------------


class SpectraError(Exception):
    """所有本项目异常的基类"""


class DimensionError(SpectraError, ValueError):
    """n、群或块形状不一致"""


class DomainError(SpectraError, ValueError):
    """参数超出运算的定义域（如 s ≰ t、递推要求 n ≥ 3、下标越界）"""


class ConfigurationError(SpectraError, ValueError):
    """规模或群描述超出支持范围"""


class DatasetFormatError(SpectraError, ValueError):
    """数据集文件格式错误，携带行号"""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"第 {line_no} 行: {message}"
        super().__init__(message)


class ConstructionError(SpectraError, RuntimeError):
    """不可约表示集合未通过完备性/同态/酉性检验，或缓存文件损坏"""


class BoundViolation(SpectraError):
    """实测运算次数或存储量超过闭式上界"""
