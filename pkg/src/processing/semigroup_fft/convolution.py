# -*- coding: utf-8 -*-
# 文件路径: src/processing/semigroup_fft/convolution.py
# -----------------------------------------
# 功能: 半群代数中的卷积
# 接口:
#     convolve_naive(f, g) -> CoeffVector          (f∗g)(s) = Σ_{rt=s} f(r)g(t)
#     convolve_spectral(f, g, ...) -> CoeffVector  ifft(fft(f)·fft(g))
# 版本: 1.0.0
# 最新更改时间: 2026-10-15
# -----------------------------------------

import logging
from typing import Optional

import numpy as np

from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector
from src.processing.poset_zeta.op_counter import OpCounter
from src.processing.semigroup_fft.fft import fft, ifft, subgroup_irreps

logger = logging.getLogger(__name__)


def convolve_naive(f: CoeffVector, g: CoeffVector) -> CoeffVector:
    """O(|S|²) 双重求和；f 的零系数跳过"""
    f.require(Basis.SEMIGROUP)
    g.require(Basis.SEMIGROUP)
    f.same_space(g)
    index = f.index
    out = np.zeros(index.total, dtype=np.complex128)
    for r in np.flatnonzero(f.values):
        np.add.at(out, index.compose_indices(int(r)), f.values[r] * g.values)
    return CoeffVector(index, out, Basis.SEMIGROUP)


def convolve_spectral(f: CoeffVector, g: CoeffVector, counter: Optional[OpCounter] = None,
                      naive: bool = False, cache_dir: Optional[str] = None) -> CoeffVector:
    f.same_space(g)
    irreps = subgroup_irreps(f.index, cache_dir)
    product = fft(f, counter, naive, irreps=irreps).blockwise_product(fft(g, counter, naive, irreps=irreps))
    result = ifft(product, counter, naive)
    return CoeffVector(f.index, result.values, Basis.SEMIGROUP)
