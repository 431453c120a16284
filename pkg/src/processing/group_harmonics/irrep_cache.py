# -*- coding: utf-8 -*-
# 文件路径: src/processing/group_harmonics/irrep_cache.py
# -----------------------------------------
# 功能: 不可约表示全表的磁盘缓存
# 接口:
#     IrrepCache(cache_dir)
#         .path_for(group, k) -> Path
#         .store(irreps) -> Path
#         .load(group, k, kind) -> IrrepSet | None
#         .verify(group, k) -> bool
#     write_irrep_file(path, irreps) / read_irrep_file(path, group, k, kind) -> IrrepSet
# 版本: 1.0.0
# 最新更改时间: 2026-10-14
# 说明:
#   文件布局（小端）:
#     头部 '<4sH32sHIB': magic b"SPIR", 版本, 群描述 SHA-256 (32 字节), k, 表示个数, 是否复数
#     每个表示: 标签 JSON 长度 (uint32) + UTF-8 字节, dim (uint32), |G_k|·dim² 个 f8 / c16（行主序）
#     末尾 32 字节为此前全部内容的 SHA-256
#   任何不一致一律抛出 ConstructionError
# -----------------------------------------

import hashlib
import logging
import struct
from pathlib import Path
from typing import Optional

import numpy as np

from src.processing.exceptions import ConstructionError
from src.processing.group_harmonics.finite_groups import MaximalSubgroup
from src.processing.group_harmonics.irreps import (
    Irrep, IrrepSet, label_from_str, label_to_str, validate_irrep_set,
)
from src.processing.monoid_core.group_table import GroupTable, trivial_group

logger = logging.getLogger(__name__)

MAGIC = b"SPIR"
CACHE_VERSION = 1
HEADER = struct.Struct("<4sH32sHIB")
U32 = struct.Struct("<I")


def _digest(group: Optional[GroupTable]) -> bytes:
    return bytes.fromhex((group if group is not None else trivial_group()).digest)


def write_irrep_file(path, irreps: IrrepSet) -> Path:
    if not irreps.has_tables:
        raise ConstructionError(f"{irreps.group.descriptor} 无全表，不能写入缓存")
    is_complex = not irreps.is_real
    dtype = "<c16" if is_complex else "<f8"
    parts = [HEADER.pack(MAGIC, CACHE_VERSION, _digest(irreps.group.group), irreps.group.k,
                         len(irreps), int(is_complex))]
    for rho in irreps:
        label = label_to_str(rho.label).encode("utf-8")
        parts += [U32.pack(len(label)), label, U32.pack(rho.dim),
                  np.ascontiguousarray(rho.table, dtype=dtype).tobytes()]
    body = b"".join(parts)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(body + hashlib.sha256(body).digest())
    tmp.replace(path)
    logger.info(f"表示缓存已写入: {path}")
    return path


def read_irrep_file(path, group: Optional[GroupTable], k: int, kind: str) -> IrrepSet:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise ConstructionError(f"无法读取表示缓存 {path}: {e}") from e
    if len(raw) < HEADER.size + 32:
        raise ConstructionError(f"表示缓存 {path} 长度不足")
    body, checksum = raw[:-32], raw[-32:]
    if hashlib.sha256(body).digest() != checksum:
        raise ConstructionError(f"表示缓存 {path} 校验和不符，文件已损坏")

    magic, version, digest, file_k, count, is_complex = HEADER.unpack_from(body, 0)
    if magic != MAGIC or version != CACHE_VERSION:
        raise ConstructionError(f"表示缓存 {path} 的文件头无法识别")
    if digest != _digest(group) or file_k != k:
        raise ConstructionError(f"表示缓存 {path} 与请求的群或 k 不匹配")

    target = MaximalSubgroup(None if group is None or group.order == 1 else group, k)
    dtype = np.dtype("<c16" if is_complex else "<f8")
    offset = HEADER.size
    irreps = []
    try:
        for _ in range(count):
            (length,) = U32.unpack_from(body, offset)
            offset += U32.size
            label = label_from_str(body[offset:offset + length].decode("utf-8"))
            offset += length
            (dim,) = U32.unpack_from(body, offset)
            offset += U32.size
            size = target.order * dim * dim
            table = np.frombuffer(body, dtype=dtype, count=size, offset=offset)
            offset += size * dtype.itemsize
            table = table.reshape(target.order, dim, dim).astype(np.complex128 if is_complex else np.float64)
            table.setflags(write=False)
            irreps.append(Irrep(label, int(dim), table=table))
    except (struct.error, ValueError, UnicodeDecodeError) as e:
        raise ConstructionError(f"表示缓存 {path} 内容截断或格式错误: {e}") from e
    if offset != len(body):
        raise ConstructionError(f"表示缓存 {path} 含多余数据")

    result = IrrepSet(target, irreps, kind=kind)
    validate_irrep_set(result)
    return result


class IrrepCache:
    """按 (群摘要, k) 存放全表，目录不存在时自动创建"""

    def __init__(self, cache_dir):
        self.cache_dir = Path(cache_dir)
        self.logger = logging.getLogger(self.__class__.__name__)

    def path_for(self, group: Optional[GroupTable], k: int) -> Path:
        return self.cache_dir / f"{_digest(group).hex()[:16]}_k{k}.irreps"

    def store(self, irreps: IrrepSet) -> Path:
        return write_irrep_file(self.path_for(irreps.group.group, irreps.group.k), irreps)

    def load(self, group: Optional[GroupTable], k: int, kind: str) -> Optional[IrrepSet]:
        """命中时返回表示集；文件不存在返回 None；文件损坏抛出 ConstructionError"""
        path = self.path_for(group, k)
        if not path.exists():
            return None
        self.logger.debug(f"读取表示缓存: {path}")
        return read_irrep_file(path, group, k, kind)

    def verify(self, group: Optional[GroupTable], k: int, kind: str = "wreath") -> bool:
        return self.load(group, k, kind) is not None
