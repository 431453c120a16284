# config.py
#!/usr/bin/env python3.12
# -*- coding: utf-8 -*-
"""
文件: config.py
模块: 根目录
功能: 默认配置，命令行未给出的参数从这里取
版本: v2.0.0
创建时间: 2025-06-19
最近更新: 2026-10-17
较上一版改进:
  - 任务参数改为谱变换各命令的 <command>_params
  - EngineConfig 可由关键字参数构造，供 YAML 配置复用
"""
import os

from src.constants import DEFAULT_CACHE_DIR, DEFAULT_N_CAP, DEFAULT_SEED, OUTPUT_DIR, PIPELINE_TOLERANCE


class EngineConfig:
    """配置容器，全局项与各任务参数以子属性形式挂载"""

    def __init__(self, **kwargs):
        self.n_cap = DEFAULT_N_CAP
        self.cache_dir = DEFAULT_CACHE_DIR
        self.tolerance = PIPELINE_TOLERANCE
        self.__dict__.update(kwargs)


# 实例化配置
config = EngineConfig()
# 基准：命令行不给 --n 时用 n=5 的 R_n
config.bench_params = {
    "n": 5,
    "group": "none",
    "seed": DEFAULT_SEED,
    "output_path": os.path.join(OUTPUT_DIR, "bench", "steps.csv"),
}
# 自检
config.selftest_params = {
    "seed": DEFAULT_SEED,
}
# 数据命令须由 --in 给出输入文件，默认为空，不参与按配置顺序执行
config.transform_params = {}
config.inverse_params = {}
config.convolve_params = {}
config.energy_params = {}
