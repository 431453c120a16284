# -*- coding: utf-8 -*-
# 文件路径: src/processing/semigroup_fft/fft.py
# -----------------------------------------
# 功能: R_n / G≀R_n 上的快速 Fourier 变换及其逆
# 接口:
#     subgroup_irreps(index, cache_dir=None) -> list[IrrepSet]
#     fft(f, counter=None, naive=False, cache_dir=None, method="auto") -> BlockSpectrum
#     ifft(spectrum, counter=None, naive=False, method="auto") -> CoeffVector
# 版本: 1.0.0
# 最新更改时间: 2026-10-15
# 说明:
#   正变换: zeta → 各秩 k 取 h_{b,a} → 对全部 (b, a) 批量做 G_k 上的 Fourier 变换 → 块 (b, a)
#   逆变换: 各块群逆变换 → 散回 groupoid 系数 → Möbius 反演
#   zeta 之后各 D 类互不依赖，用线程池并行；每个线程使用独立计数器，结束后汇总
# -----------------------------------------

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np

from src.constants import FFT_WORKERS
from src.processing.exceptions import DimensionError
from src.processing.group_harmonics.group_ft import inverse_blocks, transform_blocks
from src.processing.group_harmonics.irreps import IrrepSet
from src.processing.group_harmonics.provider import maximal_subgroup_irreps
from src.processing.monoid_core.element_index import ElementIndex, rank_block_shape
from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector
from src.processing.poset_zeta.op_counter import OpCounter
from src.processing.poset_zeta.zeta_fast import mobius_transform, zeta_fast
from src.processing.poset_zeta.zeta_naive import zeta_naive
from src.processing.semigroup_fft.dclass import rank_blocks
from src.processing.semigroup_fft.spectrum import BlockSpectrum

logger = logging.getLogger(__name__)


def subgroup_irreps(index: ElementIndex, cache_dir: Optional[str] = None) -> List[IrrepSet]:
    """k = 0..n 各极大子群的表示集（串行构建，之后只读共享）"""
    return [maximal_subgroup_irreps(index.group, k, cache_dir) for k in range(index.n + 1)]


def _method(irreps: IrrepSet, method: str, naive: bool) -> str:
    if naive and irreps.has_tables:
        return "direct"
    return method


def _parallel(task, ranks, counter: Optional[OpCounter]):
    """按秩并行执行 task(k, local_counter)，保持秩的顺序返回"""
    locals_ = {k: OpCounter() for k in ranks}
    with ThreadPoolExecutor(max_workers=min(FFT_WORKERS, max(len(ranks), 1))) as executor:
        futures = {k: executor.submit(task, k, locals_[k]) for k in ranks}
        results = {}
        for k, future in futures.items():
            try:
                results[k] = future.result()
            except Exception as e:
                logger.error(f"秩 {k} 的群变换失败: {str(e)}")
                raise
    if counter is not None:
        for k in ranks:
            counter.add_group(locals_[k].group_operations)
    return [results[k] for k in ranks]


def fft(f: CoeffVector, counter: Optional[OpCounter] = None, naive: bool = False,
        cache_dir: Optional[str] = None, method: str = "auto",
        irreps: Optional[List[IrrepSet]] = None) -> BlockSpectrum:
    """
    f̂ = ⊕_{k,ρ} Σ_s f(s)ρ̄(s)，按 BlockSpectrum 布局返回

    naive=True 时 zeta 阶段走稀疏矩阵参考实现、群阶段走直接求和（有全表时）
    """
    f.require(Basis.SEMIGROUP)
    index = f.index
    counter = counter if counter is not None else OpCounter()
    irreps = irreps if irreps is not None else subgroup_irreps(index, cache_dir)
    g = zeta_naive(f) if naive else zeta_fast(f, counter)

    def transform_rank(k: int, local: OpCounter):
        h = rank_blocks(g, k)                      # [a, b, s]
        blocks = transform_blocks(h, irreps[k], _method(irreps[k], method, naive), local)
        return [np.ascontiguousarray(b.transpose(1, 0, 2, 3), dtype=np.complex128) for b in blocks]

    blocks = _parallel(transform_rank, list(range(index.n + 1)), counter)
    spectrum = BlockSpectrum(index, irreps, blocks)
    logger.info(f"FFT 完成: {index}, zeta 运算 {counter.operations}, 群阶段运算 {counter.group_operations}")
    return spectrum


def ifft(spectrum: BlockSpectrum, counter: Optional[OpCounter] = None, naive: bool = False,
         method: str = "auto") -> CoeffVector:
    index = spectrum.index
    counter = counter if counter is not None else OpCounter()

    def inverse_rank(k: int, local: OpCounter):
        irreps = spectrum.irreps[k]
        moved = [b.transpose(1, 0, 2, 3) for b in spectrum.blocks[k]]   # [a, b, i, j]
        h = inverse_blocks(moved, irreps, _method(irreps, method, naive), local)
        return np.asarray(h, dtype=np.complex128).reshape(-1)

    parts = _parallel(inverse_rank, list(range(index.n + 1)), counter)
    values = np.zeros(index.total, dtype=np.complex128)
    for k, part in enumerate(parts):
        expected = int(np.prod(rank_block_shape(index.n, k, index.order)))
        if part.size != expected:
            raise DimensionError(f"秩 {k} 逆变换得到 {part.size} 个系数，期望 {expected}")
        values[index.rank_slice(k)] = part
    g = CoeffVector(index, values, Basis.GROUPOID)
    f = mobius_transform(g, counter, naive=naive)
    logger.info(f"逆 FFT 完成: {index}")
    return f
