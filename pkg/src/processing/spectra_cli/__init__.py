# -*- coding: utf-8 -*-
"""
spectra_cli: 六个命令（transform / inverse / convolve / energy / bench / selftest）的任务入口、
运行配置、数据集格式与 JSON 报告
"""

from src.processing.spectra_cli.dataset import parse_dataset, parse_value, write_dataset
from src.processing.spectra_cli.reports import report_schemas
from src.processing.spectra_cli.run_bench import run as run_bench
from src.processing.spectra_cli.run_config import RunConfig, parse_group
from src.processing.spectra_cli.run_selftest import run as run_selftest
from src.processing.spectra_cli.run_spectra import run_convolve, run_energy, run_inverse, run_transform

__all__ = [
    "RunConfig", "parse_group",
    "parse_dataset", "parse_value", "write_dataset", "report_schemas",
    "run_transform", "run_inverse", "run_convolve", "run_energy", "run_bench", "run_selftest",
]
