# -*- coding: utf-8 -*-
# 文件路径: src/processing/semigroup_fft/direct.py
# -----------------------------------------
# 功能: 逐元素求和的 Fourier 变换参考实现与 groupoid 乘法
# 接口:
#     direct_fourier(f, irreps=None) -> BlockSpectrum
#     groupoid_product(s, t) -> Element | None
# 版本: 1.0.0
# 最新更改时间: 2026-10-15
# 说明:
#   s = Σ_{t≤s} ⌊t⌋，ρ̄(⌊t⌋) = E_{ran t, dom t} ⊗ ρ(perm t)，于是
#   f̂(ρ̄) 的块 (ran t, dom t) 累加 f(s)·ρ(perm t)。
#   不经过 zeta 变换，也不依赖 ElementIndex 的秩段布局，只在 n ≤ 3 一类小规模上使用。
# -----------------------------------------

import itertools
import logging
from typing import List, Optional

import numpy as np

from src.processing.group_harmonics.irreps import IrrepSet
from src.processing.monoid_core.combinatorics import colex_rank
from src.processing.monoid_core.element_index import Element
from src.processing.monoid_core.partial_perm import PartialPerm, compose
from src.processing.monoid_core.wreath import WreathElem, wreath_compose
from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector
from src.processing.semigroup_fft.fft import subgroup_irreps
from src.processing.semigroup_fft.spectrum import BlockSpectrum

logger = logging.getLogger(__name__)


def _restrictions(image, labels, domain):
    """s 在定义域各子集上的限制，即全部 t ≤ s"""
    for k in range(len(domain) + 1):
        for sub in itertools.combinations(domain, k):
            yield sub, [image[c] for c in sub], [labels[c] for c in sub]


def direct_fourier(f: CoeffVector, irreps: Optional[List[IrrepSet]] = None) -> BlockSpectrum:
    f.require(Basis.SEMIGROUP)
    index = f.index
    irreps = irreps if irreps is not None else subgroup_irreps(index)
    spectrum = BlockSpectrum.zeros(index, irreps)

    for i in np.flatnonzero(f.values):
        coeff = f.values[i]
        image = [int(x) for x in index.images[i]]
        labels = [int(x) for x in index.labels[i]]
        domain = [c for c in range(index.n) if image[c]]
        for cols, rows, labs in _restrictions(image, labels, domain):
            k = len(cols)
            ran = sorted(r - 1 for r in rows)
            a = colex_rank(cols)
            b = colex_rank(ran)
            perm = np.array([[ran.index(r - 1) for r in rows]], dtype=np.int64).reshape(1, k)
            group = irreps[k].group
            s = int(group.index_of(perm, np.array([labs], dtype=np.int64).reshape(1, k))[0])
            for rho, block in zip(irreps[k], spectrum.blocks[k]):
                block[b, a] += coeff * rho.matrix(s)
    logger.debug(f"直接求和 Fourier 变换完成: {index}")
    return spectrum


def groupoid_product(s: Element, t: Element) -> Optional[Element]:
    """⌊s⌋⌊t⌋ = ⌊st⌋ 当且仅当 s⁻¹s = tt⁻¹，否则为 0（返回 None）"""
    if s.domain != t.range:
        return None
    if isinstance(s, WreathElem):
        return wreath_compose(s, t)
    if isinstance(s, PartialPerm):
        return compose(s, t)
    raise TypeError(f"不支持的元素类型: {type(s).__name__}")
