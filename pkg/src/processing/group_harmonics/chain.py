# -*- coding: utf-8 -*-
# 文件路径: src/processing/group_harmonics/chain.py
# -----------------------------------------
# 功能: S_k 上沿子群链 S_k > S_{k−1} > … 的递推 Fourier 变换及其逆
# 接口:
#     chain_ft(f, k, counter=None) -> list[np.ndarray]     f 形状 (..., k!)，每个分拆一块 (..., d, d)
#     chain_ift(blocks, k, counter=None) -> np.ndarray
#     coset_matrices(shape) -> np.ndarray                  ρ_λ(c_i)，形状 (k, d, d)
# 版本: 1.0.0
# 最新更改时间: 2026-10-14
# 说明:
#   陪集代表 c_i = s_i s_{i+1} … s_{k−2}（把 k−1 送到 i），S_k = ⊔_i c_i·S_{k−1}。
#   末字母序下 ρ_λ|S_{k−1} = ⊕_{μ∈λ⁻} ρ_μ（角自上而下），于是
#       f̂(λ) = Σ_i ρ_λ(c_i) · ⊕_μ f̂_i(μ)，f_i(π) = f(c_i∘π)；
#   逆变换: f̂_i(μ) = 1/(k·d_μ) Σ_{λ∋μ} d_λ [ρ_λ(c_i)ᵀ F(λ)]_{μμ}。
#   一次"运算"计一次乘加；按稠密矩阵乘计数。
# -----------------------------------------

import logging
import math
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.processing.exceptions import DimensionError
from src.processing.group_harmonics.young import (
    hook_length_dim, partitions, remove_corner, removable_corners, young_generators,
)
from src.processing.monoid_core.combinatorics import lehmer_rank_batch, permutations_lex
from src.processing.poset_zeta.op_counter import OpCounter

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _gather(k: int) -> np.ndarray:
    """idx[i, π] = c_i∘π 在 S_k 中的 Lehmer 秩，π 取遍 S_{k−1}（扩张为固定 k−1）"""
    sub = permutations_lex(k - 1)
    ext = np.concatenate([sub, np.full((len(sub), 1), k - 1, dtype=np.int64)], axis=1)
    idx = np.empty((k, len(sub)), dtype=np.int64)
    for i in range(k):
        c = np.concatenate([np.arange(i), np.arange(i + 1, k), [i]]).astype(np.int64)
        idx[i] = lehmer_rank_batch(c[ext])
    idx.setflags(write=False)
    return idx


@lru_cache(maxsize=None)
def coset_matrices(shape: Tuple[int, ...]) -> np.ndarray:
    k = sum(shape)
    gens = young_generators(shape)
    d = hook_length_dim(shape)
    out = np.empty((k, d, d))
    acc = np.eye(d)
    out[k - 1] = acc
    for i in range(k - 2, -1, -1):
        acc = gens[i] @ acc
        out[i] = acc
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _branching(shape: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], int, int], ...]:
    """(μ, 块起点, d_μ)，按可移角自上而下"""
    out = []
    offset = 0
    for row in removable_corners(shape):
        mu = remove_corner(shape, row)
        d = hook_length_dim(mu)
        out.append((mu, offset, d))
        offset += d
    return tuple(out)


def _forward(f: np.ndarray, k: int, counter: Optional[OpCounter]) -> List[np.ndarray]:
    batch = f.shape[0]
    if k <= 1:
        return [f.reshape(batch, 1, 1)]
    idx = _gather(k)
    sub = f[:, idx].reshape(batch * k, -1)
    sub_hat = _forward(sub, k - 1, counter)
    where = {mu: i for i, mu in enumerate(partitions(k - 1))}

    out = []
    for shape in partitions(k):
        d = hook_length_dim(shape)
        blocks = np.zeros((batch * k, d, d), dtype=f.dtype)
        for mu, o, dm in _branching(shape):
            blocks[:, o:o + dm, o:o + dm] = sub_hat[where[mu]]
        blocks = blocks.reshape(batch, k, d, d)
        out.append(np.einsum("iab,pibc->pac", coset_matrices(shape), blocks))
        if counter is not None:
            counter.add_group(batch * k * d ** 3)
    return out


def _inverse(blocks: Sequence[np.ndarray], k: int, counter: Optional[OpCounter]) -> np.ndarray:
    batch = blocks[0].shape[0]
    if k <= 1:
        return blocks[0].reshape(batch, 1)
    dtype = np.result_type(*blocks)
    subs = [np.zeros((batch, k, hook_length_dim(mu), hook_length_dim(mu)), dtype=dtype)
            for mu in partitions(k - 1)]
    where = {mu: i for i, mu in enumerate(partitions(k - 1))}

    for shape, F in zip(partitions(k), blocks):
        d = F.shape[-1]
        moved = np.einsum("iba,pbc->piac", coset_matrices(shape), F)
        if counter is not None:
            counter.add_group(batch * k * d ** 3)
        for mu, o, dm in _branching(shape):
            subs[where[mu]] += (d / (k * dm)) * moved[:, :, o:o + dm, o:o + dm]

    flat = [s.reshape(batch * k, s.shape[-2], s.shape[-1]) for s in subs]
    values = _inverse(flat, k - 1, counter).reshape(batch, k, -1)
    f = np.empty((batch, math.factorial(k)), dtype=values.dtype)
    f[:, _gather(k)] = values
    return f


def chain_ft(f: np.ndarray, k: int, counter: Optional[OpCounter] = None) -> List[np.ndarray]:
    """f̂(λ) = Σ_σ f(σ)ρ_λ(σ)，按 partitions(k) 顺序返回；支持前置批维"""
    f = np.asarray(f)
    order = math.factorial(k)
    if f.shape[-1] != order:
        raise DimensionError(f"S_{k} 上的向量长度应为 {order}，实际 {f.shape[-1]}")
    lead = f.shape[:-1]
    out = _forward(f.reshape(-1, order), k, counter)
    return [b.reshape(lead + b.shape[1:]) for b in out]


def chain_ift(blocks: Sequence[np.ndarray], k: int, counter: Optional[OpCounter] = None) -> np.ndarray:
    """chain_ft 的逆: f(σ) = (1/k!) Σ_λ d_λ tr(ρ_λ(σ)ᵀ F(λ))"""
    shapes = partitions(k)
    if len(blocks) != len(shapes):
        raise DimensionError(f"S_{k} 需要 {len(shapes)} 个谱块，实际 {len(blocks)}")
    blocks = [np.asarray(b) for b in blocks]
    lead = blocks[0].shape[:-2]
    flat = []
    for shape, b in zip(shapes, blocks):
        d = hook_length_dim(shape)
        if b.shape[-2:] != (d, d) or b.shape[:-2] != lead:
            raise DimensionError(f"分拆 {shape} 的谱块形状应为 {lead + (d, d)}，实际 {b.shape}")
        flat.append(b.reshape(-1, d, d))
    return _inverse(flat, k, counter).reshape(lead + (math.factorial(k),))
