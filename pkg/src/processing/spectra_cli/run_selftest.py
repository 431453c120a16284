#!/usr/bin/env python3.12
# -*- coding: utf-8 -*-
"""
文件: run_selftest.py
模块: src.processing.spectra_cli.run_selftest
功能: 小规模（n ≤ 4, |G| ≤ 2）上的自检套件，全部使用固定种子
版本: v1.0.0
最近更新: 2026-10-17

说明:
    每个套件独立运行，异常记为该套件失败；任一套件失败时退出码为 2。
    fingerprint 为同一种子下随机输入的 SHA-256，用于比对两次运行是否确定。
"""

import hashlib
import logging
import math
import shutil
import tempfile
from pathlib import Path
from typing import Any, Callable, List, Optional, Tuple

import numpy as np

from src.constants import DEFAULT_SEED, EXIT_BOUND_FAILURE, EXIT_SUCCESS
from src.processing.exceptions import ConstructionError
from src.processing.group_harmonics.irrep_cache import IrrepCache, read_irrep_file
from src.processing.group_harmonics.irreps import validate_irrep_set
from src.processing.group_harmonics.symmetric import cyclic_irreps, symmetric_irreps
from src.processing.group_harmonics.wreath_irreps import wreath_irreps
from src.processing.monoid_core.counting import cardinality, cardinality_recursive
from src.processing.monoid_core.element_index import ElementIndex
from src.processing.monoid_core.group_table import GroupTable, cyclic_group
from src.processing.poset_zeta.coeff_vector import CoeffVector
from src.processing.poset_zeta.zeta_fast import mobius_transform, zeta_fast
from src.processing.poset_zeta.zeta_naive import zeta_naive
from src.processing.semigroup_fft.convolution import convolve_naive, convolve_spectral
from src.processing.semigroup_fft.direct import direct_fourier
from src.processing.semigroup_fft.fft import fft, ifft, subgroup_irreps
from src.processing.spectra_cli.common import failure_result, make_run_config, success_result
from src.processing.spectra_cli.reports import SelftestReport, SuiteResult
from src.processing.task_result import TaskResult

logger = logging.getLogger(__name__)

SELFTEST_MAX_N = 4
ROOK_CARDINALITIES = (1, 2, 7, 34, 209)


def _cases(max_rook: int = SELFTEST_MAX_N, max_wreath: int = 3) -> List[Tuple[int, Optional[GroupTable]]]:
    z2 = cyclic_group(2)
    return [(n, None) for n in range(max_rook + 1)] + [(n, z2) for n in range(max_wreath + 1)]


def _vector(n: int, group, rng) -> CoeffVector:
    return CoeffVector.random(ElementIndex(n, group), rng)


def _max_err(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.abs(a - b).max()) if a.size else 0.0


def suite_cardinality(seed: int, tolerance: float) -> Tuple[float, str]:
    for n, expected in enumerate(ROOK_CARDINALITIES):
        got = (cardinality(n), cardinality_recursive(n), ElementIndex(n).total)
        if set(got) != {expected}:
            raise AssertionError(f"|R_{n}| = {got}，期望 {expected}")
    z2 = cyclic_group(2)
    if cardinality(3, z2) != 139 or cardinality_recursive(3, z2) != 139:
        raise AssertionError(f"|Z_2≀R_3| = {cardinality(3, z2)}，期望 139")
    return 0.0, "基数与递推一致"


def suite_zeta(seed: int, tolerance: float) -> Tuple[float, str]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n, group in _cases():
        f = _vector(n, group, rng)
        fast = zeta_fast(f)
        worst = max(worst, _max_err(fast.values, zeta_naive(f).values))
        worst = max(worst, _max_err(mobius_transform(fast).values, f.values))
    return worst, "快速 zeta / Möbius 与稀疏矩阵一致"


def suite_irreps(seed: int, tolerance: float) -> Tuple[float, str]:
    worst = 0.0
    rng = np.random.default_rng(seed)
    sets = [symmetric_irreps(k) for k in range(6)]
    sets += [wreath_irreps(cyclic_irreps(2), k) for k in range(4)]
    for irreps in sets:
        report = validate_irrep_set(irreps, rng=rng)
        worst = max(worst, report["homomorphism"], report["unitarity"], report["identity"])
    return worst, f"{len(sets)} 个表示集通过同态/酉性检验"


def suite_dimension(seed: int, tolerance: float) -> Tuple[float, str]:
    for n, group in _cases():
        index = ElementIndex(n, group)
        total = sum(math.comb(n, k) ** 2 * sum(d * d for d in irreps.dims)
                    for k, irreps in enumerate(subgroup_irreps(index)))
        if total != index.total:
            raise AssertionError(f"n={n}, {group}: Σ r_k²Σd² = {total} ≠ |S| = {index.total}")
    return 0.0, "Σ_k r_k²Σd² = |S|"


def suite_round_trip(seed: int, tolerance: float) -> Tuple[float, str]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n, group in _cases():
        f = _vector(n, group, rng)
        worst = max(worst, _max_err(ifft(fft(f)).values, f.values))
    return worst, "ifft(fft(f)) = f"


def suite_convolution(seed: int, tolerance: float) -> Tuple[float, str]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n, group in _cases(max_rook=3, max_wreath=2):
        f, g = _vector(n, group, rng), _vector(n, group, rng)
        worst = max(worst, _max_err(convolve_spectral(f, g).values, convolve_naive(f, g).values))
    return worst, "谱卷积与朴素卷积一致"


def suite_direct(seed: int, tolerance: float) -> Tuple[float, str]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n, group in _cases(max_rook=3, max_wreath=2):
        f = _vector(n, group, rng)
        worst = max(worst, fft(f).max_abs_diff(direct_fourier(f)))
    return worst, "流水线与逐元素直接求和一致"


def suite_cache(seed: int, tolerance: float, cache_dir: Optional[str] = None) -> Tuple[float, str]:
    z2 = cyclic_group(2)
    scratch = Path(tempfile.mkdtemp(prefix="spectra_selftest_"))
    try:
        cache = IrrepCache(scratch)
        built = wreath_irreps(cyclic_irreps(2), 2)
        path = cache.store(built)
        loaded = cache.load(z2, 2, "wreath")
        worst = max(_max_err(np.asarray(a.table), np.asarray(b.table)) for a, b in zip(built, loaded))

        corrupted = scratch / "corrupted.irreps"
        shutil.copyfile(path, corrupted)
        raw = bytearray(corrupted.read_bytes())
        raw[len(raw) // 2] ^= 0xFF
        corrupted.write_bytes(bytes(raw))
        try:
            read_irrep_file(corrupted, z2, 2, "wreath")
        except ConstructionError:
            pass
        else:
            raise AssertionError("损坏的缓存文件未被拒绝")
    finally:
        shutil.rmtree(scratch, ignore_errors=True)

    checked = 0
    if cache_dir:
        configured = IrrepCache(cache_dir)
        for k in range(SELFTEST_MAX_N + 1):
            if configured.path_for(z2, k).exists():
                configured.load(z2, k, "wreath")
                checked += 1
    return worst, f"缓存读写一致，损坏文件被拒绝；已检查配置目录中 {checked} 个文件"


def fingerprint(seed: int) -> str:
    rng = np.random.default_rng(seed)
    digest = hashlib.sha256()
    for n, group in _cases():
        digest.update(_vector(n, group, rng).values.astype("<c16").tobytes())
    return digest.hexdigest()


def suite_determinism(seed: int, tolerance: float) -> Tuple[float, str]:
    first, second = fingerprint(seed), fingerprint(seed)
    if first != second:
        raise AssertionError("同一种子两次生成的输入不同")
    rng = np.random.default_rng(seed)
    f = _vector(3, None, rng)
    diff = fft(f).max_abs_diff(fft(f))
    if diff != 0.0:
        raise AssertionError(f"同一输入两次 FFT 结果不同: {diff:.3e}")
    return 0.0, f"fingerprint {first[:16]}…"


SUITES: List[Tuple[str, Callable[..., Tuple[float, str]]]] = [
    ("cardinality", suite_cardinality),
    ("zeta", suite_zeta),
    ("irreps", suite_irreps),
    ("dimension", suite_dimension),
    ("round_trip", suite_round_trip),
    ("convolution", suite_convolution),
    ("direct", suite_direct),
    ("cache", suite_cache),
    ("determinism", suite_determinism),
]


def run_suite(name: str, func, seed: int, tolerance: float, cache_dir: Optional[str]) -> SuiteResult:
    try:
        if name == "cache":
            max_error, message = func(seed, tolerance, cache_dir)
        else:
            max_error, message = func(seed, tolerance)
        passed = max_error <= tolerance
        if not passed:
            message = f"误差 {max_error:.3e} 超过容差 {tolerance}"
        return SuiteResult(name=name, passed=passed, max_error=max_error, message=message)
    except Exception as e:
        logger.error(f"自检套件 {name} 失败: {type(e).__name__}: {e}")
        return SuiteResult(name=name, passed=False, message=f"{type(e).__name__}: {e}")


def run(config: Any = None, **params) -> TaskResult:
    logs = []
    try:
        rc = make_run_config("selftest", config, params)
        seed = rc.seed if rc.seed is not None else DEFAULT_SEED
        results = []
        for name, func in SUITES:
            result = run_suite(name, func, seed, rc.tolerance, rc.cache_dir)
            status = "通过" if result.passed else "失败"
            logs.append(f"[{status}] {name}: {result.message}")
            results.append(result)

        failed = [r.name for r in results if not r.passed]
        code = EXIT_BOUND_FAILURE if failed else EXIT_SUCCESS
        report = SelftestReport(status="success" if not failed else "failure", command="selftest",
                                n=SELFTEST_MAX_N, group="cyclic:2", seed=seed,
                                fingerprint=fingerprint(seed), suites=results)
        message = "全部自检通过" if not failed else f"自检失败: {', '.join(failed)}"
        return success_result(report, message, [], logs, code)
    except Exception as e:
        logger.exception("selftest 失败")
        return failure_result("selftest", e, logs)


cmd_selftest = run
