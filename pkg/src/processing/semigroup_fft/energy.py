# -*- coding: utf-8 -*-
# 文件路径: src/processing/semigroup_fft/energy.py
# -----------------------------------------
# 功能: 各同型分量 (k, ρ) 的谱能量 ‖f̂(ρ̄)‖²_F
# 接口:
#     isotypic_energy(spectrum) -> dict[(k, label), float]
#     energy_table(spectrum) -> pandas.DataFrame
# -----------------------------------------

from typing import Dict, Tuple

import numpy as np
import pandas as pd

from src.processing.group_harmonics.irreps import label_to_str
from src.processing.semigroup_fft.spectrum import BlockSpectrum


def isotypic_energy(spectrum: BlockSpectrum) -> Dict[Tuple[int, object], float]:
    out = {}
    for k, (irreps, blocks) in enumerate(zip(spectrum.irreps, spectrum.blocks)):
        for rho, b in zip(irreps, blocks):
            out[(k, rho.label)] = float(np.sum(np.abs(b) ** 2))
    return out


def energy_table(spectrum: BlockSpectrum) -> pd.DataFrame:
    rows = []
    for k, (irreps, blocks) in enumerate(zip(spectrum.irreps, spectrum.blocks)):
        for rho, b in zip(irreps, blocks):
            rows.append({
                "k": k,
                "irrep": label_to_str(rho.label),
                "dim": rho.dim,
                "r": b.shape[0],
                "energy": float(np.sum(np.abs(b) ** 2)),
            })
    df = pd.DataFrame(rows, columns=["k", "irrep", "dim", "r", "energy"])
    total = df["energy"].sum()
    df["share"] = df["energy"] / total if total > 0 else 0.0
    return df
