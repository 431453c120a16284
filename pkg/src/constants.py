#!/usr/bin/env python3.12
# -*- coding: utf-8 -*-
"""
文件: constants.py
模块: 根目录
功能: 常量定义（路径、规模上限、数值容差、命令列表）
版本: v2.0.0
创建时间: 2025-06-19
最近更新: 2026-10-12
较上一版改进:
  1. 任务列表改为谱变换命令 transform / inverse / convolve / energy / bench / selftest；
  2. 新增规模上限与容差常量，缓存目录支持环境变量覆盖；
"""
import os
from pathlib import Path

# 项目根目录（src 上一级）
ROOT_DIR = Path(__file__).resolve().parent.parent
# 默认结果输出目录
OUTPUT_DIR = str(ROOT_DIR / "results")
# 不可约表示缓存目录，可被 SPECTRA_CACHE_DIR 覆盖
CACHE_ENV_VAR = "SPECTRA_CACHE_DIR"
DEFAULT_CACHE_DIR = os.environ.get(CACHE_ENV_VAR, str(ROOT_DIR / "results" / "irrep_cache"))

# 支持的命令
SUPPORTED_TASKS = [
    "transform", "inverse", "convolve",
    "energy", "bench", "selftest",
]

# 规模上限
DEFAULT_N_CAP = 8           # |R_8| ≈ 1.44e6 个稠密复数
MAX_GROUP_ORDER = 64        # GroupTable 的阶上限（结合律穷举检验的上限）
MAX_SYMMETRIC_DEGREE = 8    # symmetric_irreps 支持的 k
MAX_FULL_TABLE_ORDER = 2048  # 超过此阶不再整表预计算 ρ(s)，S_k 改走 chain 递推，G≀S_k 改存分解因子
MAX_WREATH_ORDER = 1_000_000  # |G≀S_k| 上限
MAX_DENSE_ELEMENTS = 2_000_000  # 稠密系数向量长度上限（--unsafe-n 可越过）
EXHAUSTIVE_CHECK_ORDER = 720
SAMPLED_CHECK_PAIRS = 2000
FFT_WORKERS = 4             # D 类并行的线程数

# 数值容差
STAGE_TOLERANCE = 1e-10     # 单阶段检验
PIPELINE_TOLERANCE = 1e-9   # 端到端检验
CHARACTER_SEPARATION = 1e-6
ZERO_THRESHOLD = 1e-12      # 写出数据集时忽略的系数

# 退出码
EXIT_SUCCESS = 0
EXIT_VALIDATION_ERROR = 1
EXIT_BOUND_FAILURE = 2

# 谱文件布局版本
SPECTRUM_LAYOUT_VERSION = 1
DEFAULT_SEED = 42
