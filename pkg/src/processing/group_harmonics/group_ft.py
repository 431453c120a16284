# -*- coding: utf-8 -*-
"""
文件: group_ft.py
模块: src.processing.group_harmonics.group_ft
功能: 极大子群 G_k 上的 Fourier 变换、逆变换与朴素卷积
版本: 1.1.0
最近更新: 2026-10-19

说明:
    f̂(ρ) = Σ_s f(s)ρ(s)
    f(s) = (1/|G|) Σ_ρ d_ρ · tr(ρ(s)* F(ρ))
    transform_blocks / inverse_blocks 接受带前置批维的输入，供半群 FFT 一次处理一个 D 类的全部 (b, a)。
    method:
        "direct"   按全表直接求和
        "chain"    S_k 子群链递推（仅对称群）
        "factored" G≀S_k 按 ρ(p, r) = B_r·A_p 两步缩并，f̂ = Σ_r B_r (Σ_p f[p, r] A_p)
        "auto"     有全表时 direct，有分解因子时 factored，否则 chain
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from src.processing.exceptions import ConfigurationError, DimensionError
from src.processing.group_harmonics.chain import chain_ft, chain_ift
from src.processing.group_harmonics.irreps import IrrepSet
from src.processing.poset_zeta.op_counter import OpCounter

logger = logging.getLogger(__name__)

METHODS = ("auto", "direct", "chain", "factored")


@dataclass
class GroupSpectrum:
    """每个不可约表示一个 d_ρ×d_ρ 复矩阵，顺序与 IrrepSet 一致"""
    irreps: IrrepSet
    blocks: List[np.ndarray]

    def __post_init__(self):
        if len(self.blocks) != len(self.irreps):
            raise DimensionError(f"谱块数 {len(self.blocks)} 与表示数 {len(self.irreps)} 不符")
        for rho, block in zip(self.irreps, self.blocks):
            if block.shape != (rho.dim, rho.dim):
                raise DimensionError(f"表示 {rho.label} 的谱块形状应为 {(rho.dim, rho.dim)}，实际 {block.shape}")

    def __getitem__(self, i: int) -> np.ndarray:
        return self.blocks[i]

    def __len__(self) -> int:
        return len(self.blocks)

    def multiply(self, other: "GroupSpectrum") -> "GroupSpectrum":
        return GroupSpectrum(self.irreps, [a @ b for a, b in zip(self.blocks, other.blocks)])


def _resolve(method: str, irreps: IrrepSet) -> str:
    if method not in METHODS:
        raise ConfigurationError(f"未知的群变换方法: {method}，可选 {METHODS}")
    if method == "auto":
        if irreps.has_tables:
            return "direct"
        return "factored" if irreps.is_factored else "chain"
    if method == "chain" and not irreps.group.is_symmetric:
        raise ConfigurationError(f"chain 递推仅支持对称群，当前为 {irreps.group.descriptor}")
    if method == "direct" and not irreps.has_tables:
        raise ConfigurationError(f"{irreps.group.descriptor} 未预计算全表，无法直接求和")
    if method == "factored" and not irreps.is_factored:
        raise ConfigurationError(f"{irreps.group.descriptor} 没有分解因子")
    return method


def _factored_ft(f: np.ndarray, irreps: IrrepSet, counter: Optional[OpCounter]) -> List[np.ndarray]:
    # 先消去较长的一维，中间量为 (..., min(k!, |G|^k), d, d)，不展开全表
    lead = f.shape[:-1]
    out = []
    for rho in irreps:
        perm_part, label_part = rho.factors
        grid = f.reshape(lead + (len(perm_part), len(label_part)))
        if len(perm_part) <= len(label_part):
            inner = np.einsum("...pr,rij->...pij", grid, label_part)
            out.append(np.einsum("...pij,pjk->...ik", inner, perm_part))
        else:
            inner = np.einsum("...pr,pjk->...rjk", grid, perm_part)
            out.append(np.einsum("rij,...rjk->...ik", label_part, inner))
        if counter is not None:
            counter.add_group(int(np.prod(lead)) * irreps.order * rho.dim ** 2)
    return out


def _factored_ift(blocks: Sequence[np.ndarray], irreps: IrrepSet,
                  counter: Optional[OpCounter]) -> np.ndarray:
    # tr((B_r A_p)* F) = Σ conj(B_r)_ij conj(A_p)_jk F_ik
    lead = blocks[0].shape[:-2]
    f = np.zeros(lead + (irreps.order,), dtype=np.complex128)
    for rho, b in zip(irreps, blocks):
        perm_part, label_part = np.conj(rho.factors[0]), np.conj(rho.factors[1])
        if len(perm_part) <= len(label_part):
            inner = np.einsum("pjk,...ik->...pij", perm_part, b)
            grid = np.einsum("rij,...pij->...pr", label_part, inner)
        else:
            inner = np.einsum("rij,...ik->...rjk", label_part, b)
            grid = np.einsum("pjk,...rjk->...pr", perm_part, inner)
        f += rho.dim * grid.reshape(lead + (irreps.order,))
        if counter is not None:
            counter.add_group(int(np.prod(lead)) * irreps.order * rho.dim ** 2)
    return f / irreps.order


def transform_blocks(f: np.ndarray, irreps: IrrepSet, method: str = "auto",
                     counter: Optional[OpCounter] = None) -> List[np.ndarray]:
    """f 形状 (..., |G|)，返回每个表示一块 (..., d, d)"""
    f = np.asarray(f)
    if f.shape[-1] != irreps.order:
        raise DimensionError(f"{irreps.group.descriptor} 上的向量长度应为 {irreps.order}，实际 {f.shape[-1]}")
    method = _resolve(method, irreps)
    if method == "chain":
        return chain_ft(f, irreps.group.k, counter)
    if method == "factored":
        return _factored_ft(f, irreps, counter)
    batch = int(np.prod(f.shape[:-1]))
    out = []
    for rho in irreps:
        out.append(np.einsum("...s,sij->...ij", f, rho.table))
        if counter is not None:
            counter.add_group(batch * irreps.order * rho.dim ** 2)
    return out


def inverse_blocks(blocks: Sequence[np.ndarray], irreps: IrrepSet, method: str = "auto",
                   counter: Optional[OpCounter] = None) -> np.ndarray:
    if len(blocks) != len(irreps):
        raise DimensionError(f"谱块数 {len(blocks)} 与表示数 {len(irreps)} 不符")
    blocks = [np.asarray(b) for b in blocks]
    for rho, b in zip(irreps, blocks):
        if b.shape[-2:] != (rho.dim, rho.dim):
            raise DimensionError(f"表示 {rho.label} 的谱块形状应为 {(rho.dim, rho.dim)}，实际 {b.shape[-2:]}")
    method = _resolve(method, irreps)
    if method == "chain":
        return chain_ift(blocks, irreps.group.k, counter)
    if method == "factored":
        return _factored_ift(blocks, irreps, counter)
    lead = blocks[0].shape[:-2]
    batch = int(np.prod(lead))
    f = np.zeros(lead + (irreps.order,), dtype=np.complex128)
    for rho, b in zip(irreps, blocks):
        f += rho.dim * np.einsum("sij,...ij->...s", np.conj(rho.table), b)
        if counter is not None:
            counter.add_group(batch * irreps.order * rho.dim ** 2)
    return f / irreps.order


def group_ft(f: np.ndarray, irreps: IrrepSet, method: str = "auto",
             counter: Optional[OpCounter] = None) -> GroupSpectrum:
    f = np.asarray(f)
    if f.ndim != 1:
        raise DimensionError(f"group_ft 需要一维向量，实际形状 {f.shape}")
    blocks = transform_blocks(f.astype(np.complex128), irreps, method, counter)
    return GroupSpectrum(irreps, [np.asarray(b, dtype=np.complex128) for b in blocks])


def group_ift(spectrum: GroupSpectrum, irreps: Optional[IrrepSet] = None, method: str = "auto",
              counter: Optional[OpCounter] = None) -> np.ndarray:
    irreps = irreps if irreps is not None else spectrum.irreps
    return np.asarray(inverse_blocks(spectrum.blocks, irreps, method, counter), dtype=np.complex128)


def group_convolve(f: np.ndarray, g: np.ndarray, irreps: IrrepSet) -> np.ndarray:
    """(f∗g)(s) = Σ_{ab=s} f(a)g(b)，O(|G|²) 朴素求和"""
    group = irreps.group
    n = group.order
    f = np.asarray(f, dtype=np.complex128)
    g = np.asarray(g, dtype=np.complex128)
    if f.shape != (n,) or g.shape != (n,):
        raise DimensionError(f"{group.descriptor} 上的向量长度应为 {n}")
    a, b = np.divmod(np.arange(n * n, dtype=np.int64), n)
    out = np.zeros(n, dtype=np.complex128)
    np.add.at(out, group.compose(a, b), f[a] * g[b])
    return out
