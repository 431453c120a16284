#!/usr/bin/env python3.12
# -*- coding: utf-8 -*-
"""
文件: run_spectra.py
模块: src.processing.spectra_cli.run_spectra
功能: transform / inverse / convolve / energy 四个数据命令的任务入口
版本: v1.0.0
最近更新: 2026-10-16

说明:
    每个 run_* 接受配置对象与命令参数，返回 TaskResult；payload 为写到 stdout 的 JSON 报告。
    未给出 --out 时输出写到 results/<command>/ 下。
"""

import logging
import os
from typing import Any

import numpy as np

from src.constants import EXIT_BOUND_FAILURE, EXIT_SUCCESS, OUTPUT_DIR
from src.processing.exceptions import ConfigurationError
from src.processing.poset_zeta.op_counter import OpCounter
from src.processing.semigroup_fft.convolution import convolve_naive, convolve_spectral
from src.processing.semigroup_fft.energy import energy_table
from src.processing.semigroup_fft.fft import fft, ifft, subgroup_irreps
from src.processing.semigroup_fft.spectrum import load_spectrum, save_spectrum
from src.processing.spectra_cli.common import failure_result, make_run_config, success_result
from src.processing.spectra_cli.dataset import parse_dataset, write_dataset
from src.processing.spectra_cli.reports import EnergyReport, EnergyRow, TransformReport, VectorReport
from src.processing.task_result import TaskResult
from src.utils.json_utils import np_to_py

logger = logging.getLogger(__name__)


def _output(rc, default_name: str) -> str:
    return rc.output_path or os.path.join(OUTPUT_DIR, rc.command, default_name)


def _require_input(rc, attr: str = "input_path", flag: str = "--in"):
    path = getattr(rc, attr)
    if not path:
        raise ConfigurationError(f"{rc.command} 需要 {flag} 输入文件")
    if not os.path.isfile(path):
        raise ConfigurationError(f"输入文件不存在: {path}")
    return path


def _exit_for(error, tolerance) -> int:
    return EXIT_BOUND_FAILURE if error is not None and error > tolerance else EXIT_SUCCESS


def run_transform(config: Any = None, **params) -> TaskResult:
    """数据集 → 分块谱"""
    logs, outputs = [], []
    try:
        rc = make_run_config("transform", config, params)
        f = parse_dataset(_require_input(rc), rc)
        logs.append(f"读取数据集: {rc.input_path}（{f.index}）")

        counter = OpCounter()
        spectrum = fft(f, counter, naive=rc.naive, cache_dir=rc.cache_dir)
        logs.append(f"FFT 完成: 谱长度 {spectrum.size}, zeta 运算 {counter.operations}")

        verify_error = None
        if rc.verify:
            back = ifft(spectrum, naive=rc.naive)
            verify_error = float(np.abs(back.values - f.values).max()) if f.index.total else 0.0
            logs.append(f"往返校验误差: {verify_error:.3e}")

        out = str(save_spectrum(_output(rc, "spectrum.json"), spectrum, binary=rc.binary))
        outputs.append(out)
        code = _exit_for(verify_error, rc.tolerance)
        report = TransformReport(status="success" if code == EXIT_SUCCESS else "failure",
                                 command="transform", n=rc.n, group=rc.group, size=spectrum.size,
                                 output=out, binary=rc.binary, operations=counter.as_dict(),
                                 verify_error=verify_error)
        return success_result(report, f"谱已写出: {out}", outputs, logs, code)
    except Exception as e:
        logger.exception("transform 失败")
        return failure_result("transform", e, logs, outputs)


def run_inverse(config: Any = None, **params) -> TaskResult:
    """分块谱 → 数据集"""
    logs, outputs = [], []
    try:
        rc = make_run_config("inverse", config, params)
        index = rc.element_index()
        irreps = subgroup_irreps(index, rc.cache_dir)
        spectrum = load_spectrum(_require_input(rc), index, irreps)
        logs.append(f"读取谱: {rc.input_path}")

        counter = OpCounter()
        f = ifft(spectrum, counter, naive=rc.naive)
        verify_error = None
        if rc.verify:
            again = fft(f, naive=rc.naive, irreps=irreps)
            verify_error = again.max_abs_diff(spectrum)
            logs.append(f"往返校验误差: {verify_error:.3e}")

        out = str(write_dataset(_output(rc, "vector.txt"), f, rc.group))
        outputs.append(out)
        code = _exit_for(verify_error, rc.tolerance)
        report = VectorReport(status="success" if code == EXIT_SUCCESS else "failure",
                              command="inverse", n=rc.n, group=rc.group,
                              nonzero=int(np.count_nonzero(np.abs(f.values) > 1e-12)),
                              output=out, operations=counter.as_dict(), verify_error=verify_error)
        return success_result(report, f"系数已写出: {out}", outputs, logs, code)
    except Exception as e:
        logger.exception("inverse 失败")
        return failure_result("inverse", e, logs, outputs)


def run_convolve(config: Any = None, **params) -> TaskResult:
    """两个数据集的卷积；--naive 时走双重求和"""
    logs, outputs = [], []
    try:
        rc = make_run_config("convolve", config, params)
        f = parse_dataset(_require_input(rc), rc)
        g = parse_dataset(_require_input(rc, "input_path2", "--in2"), rc)
        logs.append(f"读取数据集: {rc.input_path}, {rc.input_path2}")

        counter = OpCounter()
        if rc.naive:
            h = convolve_naive(f, g)
        else:
            h = convolve_spectral(f, g, counter, cache_dir=rc.cache_dir)
        verify_error = None
        if rc.verify:
            oracle = convolve_naive(f, g)
            verify_error = float(np.abs(h.values - oracle.values).max()) if f.index.total else 0.0
            logs.append(f"与朴素卷积的误差: {verify_error:.3e}")

        out = str(write_dataset(_output(rc, "convolution.txt"), h, rc.group))
        outputs.append(out)
        code = _exit_for(verify_error, rc.tolerance)
        report = VectorReport(status="success" if code == EXIT_SUCCESS else "failure",
                              command="convolve", n=rc.n, group=rc.group,
                              nonzero=int(np.count_nonzero(np.abs(h.values) > 1e-12)),
                              output=out, operations=counter.as_dict(), verify_error=verify_error)
        return success_result(report, f"卷积已写出: {out}", outputs, logs, code)
    except Exception as e:
        logger.exception("convolve 失败")
        return failure_result("convolve", e, logs, outputs)


def run_energy(config: Any = None, **params) -> TaskResult:
    """各同型分量的谱能量表（CSV）"""
    logs, outputs = [], []
    try:
        rc = make_run_config("energy", config, params)
        f = parse_dataset(_require_input(rc), rc)
        spectrum = fft(f, naive=rc.naive, cache_dir=rc.cache_dir)
        table = energy_table(spectrum)

        out = _output(rc, "energy.csv")
        os.makedirs(os.path.dirname(os.path.abspath(out)), exist_ok=True)
        table.to_csv(out, index=False, float_format="%.17g")
        outputs.append(out)
        logs.append(f"能量表已写出: {out}（{len(table)} 行）")

        rows = [EnergyRow(**np_to_py(row)) for row in table.to_dict(orient="records")]
        report = EnergyReport(command="energy", n=rc.n, group=rc.group,
                              total_energy=float(table["energy"].sum()), rows=rows, output=out)
        return success_result(report, f"能量表已写出: {out}", outputs, logs)
    except Exception as e:
        logger.exception("energy 失败")
        return failure_result("energy", e, logs, outputs)


cmd_transform = run_transform
cmd_inverse = run_inverse
cmd_convolve = run_convolve
cmd_energy = run_energy
