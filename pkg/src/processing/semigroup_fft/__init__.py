# -*- coding: utf-8 -*-
"""
semigroup_fft: zeta → h_{b,a} 抽取 → 群 Fourier 变换 → 分块谱 的完整流水线及其逆、卷积与能量
"""

from src.processing.semigroup_fft.convolution import convolve_naive, convolve_spectral
from src.processing.semigroup_fft.dclass import DClassInfo, build_dclasses, extract_h, rank_blocks
from src.processing.semigroup_fft.direct import direct_fourier, groupoid_product
from src.processing.semigroup_fft.energy import energy_table, isotypic_energy
from src.processing.semigroup_fft.fft import fft, ifft, subgroup_irreps
from src.processing.semigroup_fft.spectrum import BlockSpectrum, load_spectrum, save_spectrum

__all__ = [
    "DClassInfo", "BlockSpectrum",
    "build_dclasses", "extract_h", "rank_blocks",
    "fft", "ifft", "subgroup_irreps",
    "convolve_naive", "convolve_spectral",
    "isotypic_energy", "energy_table",
    "direct_fourier", "groupoid_product",
    "save_spectrum", "load_spectrum",
]
