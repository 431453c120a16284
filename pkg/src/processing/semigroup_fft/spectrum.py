# -*- coding: utf-8 -*-
"""
文件: spectrum.py
模块: src.processing.semigroup_fft.spectrum
功能: 分块谱 BlockSpectrum 及其磁盘读写
版本: 1.0.0
最近更新: 2026-10-15

说明:
    blocks[k][i] 形状 (r_k, r_k, d, d)，下标 [b, a, i, j]，b/a 为行/列幂等元（定义域 colex 序）。
    组装成 r_k·d 阶方阵时块 (b, a) 位于第 b 个块行、第 a 个块列。
    展平顺序: 秩升序 → 表示（IrrepSet 顺序）→ b → a → 块内行主序。
    磁盘格式:
        JSON 清单 {n, group, layout_version, blocks: [{k, label, dim, r}], data: [[re, im], ...]}
        或 binary=True 时 data_file 指向同名 .bin（小端 complex128）
"""

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

import numpy as np

from src.constants import SPECTRUM_LAYOUT_VERSION
from src.processing.exceptions import DimensionError
from src.processing.group_harmonics.irreps import IrrepSet, label_to_str
from src.processing.monoid_core.element_index import ElementIndex
from src.utils.json_utils import complex_pairs, pairs_to_complex

logger = logging.getLogger(__name__)


def group_descriptor(index: ElementIndex) -> str:
    return "none" if index.group is None else index.group.name


@dataclass
class BlockSpectrum:
    index: ElementIndex
    irreps: List[IrrepSet]
    blocks: List[List[np.ndarray]]

    def __post_init__(self):
        n = self.index.n
        if len(self.irreps) != n + 1 or len(self.blocks) != n + 1:
            raise DimensionError(f"谱应含 {n + 1} 个秩，实际 {len(self.blocks)}")
        for k, (irreps, blocks) in enumerate(zip(self.irreps, self.blocks)):
            r = math.comb(n, k)
            if len(blocks) != len(irreps):
                raise DimensionError(f"秩 {k}: 谱块数 {len(blocks)} 与表示数 {len(irreps)} 不符")
            for rho, b in zip(irreps, blocks):
                if b.shape != (r, r, rho.dim, rho.dim):
                    raise DimensionError(
                        f"秩 {k} 表示 {rho.label}: 谱块形状应为 {(r, r, rho.dim, rho.dim)}，实际 {b.shape}")

    # ------------------------------------------------------------------
    @property
    def n(self) -> int:
        return self.index.n

    @property
    def size(self) -> int:
        """复数个数 Σ_k r_k²Σ_ρ d_ρ² = |S|"""
        return sum(b.size for blocks in self.blocks for b in blocks)

    def layout(self) -> List[dict]:
        return [{"k": k, "label": label_to_str(rho.label), "dim": rho.dim, "r": b.shape[0]}
                for k, (irreps, blocks) in enumerate(zip(self.irreps, self.blocks))
                for rho, b in zip(irreps, blocks)]

    def assembled(self, k: int, i: int) -> np.ndarray:
        b = self.blocks[k][i]
        r, _, d, _ = b.shape
        return b.transpose(0, 2, 1, 3).reshape(r * d, r * d)

    def flatten(self) -> np.ndarray:
        parts = [b.reshape(-1) for blocks in self.blocks for b in blocks]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.complex128)

    @classmethod
    def from_flat(cls, index: ElementIndex, irreps: List[IrrepSet], flat: np.ndarray) -> "BlockSpectrum":
        flat = np.asarray(flat, dtype=np.complex128).reshape(-1)
        if flat.size != index.total:
            raise DimensionError(f"展平谱长度 {flat.size} 与 |S| = {index.total} 不符")
        return cls._fill(index, irreps, lambda shape, offset: flat[offset:offset + int(np.prod(shape))].reshape(shape))

    @classmethod
    def zeros(cls, index: ElementIndex, irreps: List[IrrepSet]) -> "BlockSpectrum":
        return cls._fill(index, irreps, lambda shape, offset: np.zeros(shape, dtype=np.complex128))

    @classmethod
    def random(cls, index: ElementIndex, irreps: List[IrrepSet],
               rng: Optional[np.random.Generator] = None) -> "BlockSpectrum":
        rng = rng if rng is not None else np.random.default_rng()
        return cls._fill(index, irreps, lambda shape, offset: rng.standard_normal(shape)
                         + 1j * rng.standard_normal(shape))

    @classmethod
    def _fill(cls, index: ElementIndex, irreps: List[IrrepSet], make) -> "BlockSpectrum":
        blocks = []
        offset = 0
        for k, group_irreps in enumerate(irreps):
            r = math.comb(index.n, k)
            row = []
            for rho in group_irreps:
                shape = (r, r, rho.dim, rho.dim)
                row.append(np.array(make(shape, offset), dtype=np.complex128))
                offset += r * r * rho.dim * rho.dim
            blocks.append(row)
        return cls(index, irreps, blocks)

    # ------------------------------------------------------------------
    def same_layout(self, other: "BlockSpectrum"):
        if self.layout() != other.layout():
            raise DimensionError("两个谱的分块布局不一致")

    def blockwise_product(self, other: "BlockSpectrum") -> "BlockSpectrum":
        """组装矩阵逐块相乘: (XY)[b, a] = Σ_c X[b, c]·Y[c, a]"""
        self.same_layout(other)
        blocks = [[np.einsum("bcij,cajk->baik", x, y) for x, y in zip(xs, ys)]
                  for xs, ys in zip(self.blocks, other.blocks)]
        return BlockSpectrum(self.index, self.irreps, blocks)

    def scaled(self, c: complex) -> "BlockSpectrum":
        return BlockSpectrum(self.index, self.irreps, [[c * b for b in bs] for bs in self.blocks])

    def max_abs_diff(self, other: "BlockSpectrum") -> float:
        self.same_layout(other)
        diff = self.flatten() - other.flatten()
        return float(np.abs(diff).max()) if diff.size else 0.0


def save_spectrum(path, spectrum: BlockSpectrum, binary: bool = False) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    flat = spectrum.flatten()
    manifest = {
        "n": spectrum.n,
        "group": group_descriptor(spectrum.index),
        "layout_version": SPECTRUM_LAYOUT_VERSION,
        "size": int(flat.size),
        "blocks": spectrum.layout(),
    }
    if binary:
        blob = path.with_suffix(".bin")
        blob.write_bytes(flat.astype("<c16").tobytes())
        manifest["data_file"] = blob.name
    else:
        manifest["data"] = complex_pairs(flat)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(manifest, f, sort_keys=True)
    logger.info(f"谱已保存: {path}（{flat.size} 个复数, binary={binary}）")
    return path


def load_spectrum(path, index: ElementIndex, irreps: List[IrrepSet]) -> BlockSpectrum:
    """按给定的半群与表示集读取谱；清单中的 n、群与分块布局须一致"""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        manifest = json.load(f)
    if manifest.get("layout_version") != SPECTRUM_LAYOUT_VERSION:
        raise DimensionError(f"谱文件布局版本 {manifest.get('layout_version')} 不受支持")
    if manifest.get("n") != index.n or manifest.get("group") != group_descriptor(index):
        raise DimensionError(f"谱文件属于 n={manifest.get('n')}, group={manifest.get('group')}，"
                             f"与当前 n={index.n}, group={group_descriptor(index)} 不符")
    if "data_file" in manifest:
        raw = (path.parent / manifest["data_file"]).read_bytes()
        flat = np.frombuffer(raw, dtype="<c16").astype(np.complex128)
    else:
        flat = pairs_to_complex(manifest.get("data", []))
    spectrum = BlockSpectrum.from_flat(index, irreps, flat)
    if spectrum.layout() != manifest.get("blocks"):
        raise DimensionError("谱文件的分块布局与当前表示集不一致")
    return spectrum
