# -*- coding: utf-8 -*-
# 文件路径: src/processing/spectra_cli/dataset.py
# -----------------------------------------
# 功能: 系数数据集文本格式的读写
# 接口:
#     parse_value(text) -> complex
#     parse_dataset(path, run_config) -> CoeffVector[semigroup]
#     write_dataset(path, vector) -> Path
# 版本: 1.0.1
# 最新更改时间: 2026-10-19
# 说明:
#   n=<int>
#   group=<descriptor>
#   <element> , <re>[+<im>i]
#   元素为 "2,-,5,-,-,-,3"（R_n）或 "row,col:g;…"（G≀R_n，"-" 为零矩阵）；
#   以最后一个逗号分隔元素与数值；空行与 # 开头的行忽略；重复元素的数值相加。
#   空文件（连文件头也没有）视为零向量。
# -----------------------------------------

import logging
from pathlib import Path

import numpy as np

from src.constants import ZERO_THRESHOLD
from src.processing.exceptions import DatasetFormatError, DimensionError, SpectraError
from src.processing.monoid_core.partial_perm import format_partial_perm, parse_partial_perm
from src.processing.monoid_core.wreath import format_wreath, parse_wreath
from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector
from src.processing.semigroup_fft.spectrum import group_descriptor
from src.processing.spectra_cli.run_config import RunConfig

logger = logging.getLogger(__name__)


def parse_value(text: str) -> complex:
    """"1.5"、"-2"、"1+2i"、"0.5-3i" 等；与系统区域设置无关，只接受有限值"""
    cleaned = text.strip().replace(" ", "").replace("I", "i")
    if not cleaned:
        raise ValueError("缺少数值")
    if "j" in cleaned.lower():
        raise ValueError("虚数单位须写作 i")
    if cleaned.endswith("i"):
        cleaned = cleaned[:-1] + "j"
    value = complex(cleaned)
    if not np.isfinite(value):
        raise ValueError("系数须为有限值")
    return value


def format_value(value: complex) -> str:
    if value.imag == 0:
        return f"{value.real:.17g}"
    return f"{value.real:.17g}{value.imag:+.17g}i"


def parse_dataset(path, config: RunConfig) -> CoeffVector:
    index = config.element_index()
    group = index.group
    values = np.zeros(index.total, dtype=np.complex128)
    header = {}
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        lines = f.readlines()

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition("=")
        if sep and key.strip() in ("n", "group"):
            header[key.strip()] = rest.strip()
            continue
        elem_text, sep, value_text = line.rpartition(",")
        if not sep:
            raise DatasetFormatError(f"缺少 ',' 分隔的数值: {line!r}", line_no)
        try:
            value = parse_value(value_text)
        except ValueError as e:
            raise DatasetFormatError(f"无法解析数值 {value_text.strip()!r}: {e}", line_no) from e
        try:
            if group is None:
                elem = parse_partial_perm(elem_text, index.n)
            else:
                elem = parse_wreath(elem_text, index.n, group)
            values[index.index_of(elem)] += value
        except SpectraError as e:
            raise DatasetFormatError(f"无法解析元素 {elem_text.strip()!r}: {e}", line_no) from e

    if "n" in header and header["n"] != str(index.n):
        raise DimensionError(f"数据集声明 n={header['n']}，与配置 n={index.n} 不符")
    if "group" in header:
        declared = header["group"]
        if declared != config.group and declared != group_descriptor(index):
            raise DimensionError(f"数据集声明 group={declared}，与配置 group={config.group} 不符")
    logger.info(f"数据集读取完成: {path}, 非零系数 {int(np.count_nonzero(values))} 个")
    return CoeffVector(index, values, Basis.SEMIGROUP)


def write_dataset(path, vector: CoeffVector, group_text: str = None) -> Path:
    """parse_dataset 的逆；只写 |值| > ZERO_THRESHOLD 的项"""
    vector.require(Basis.SEMIGROUP)
    index = vector.index
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"n={index.n}", f"group={group_text or group_descriptor(index)}"]
    for i in np.flatnonzero(np.abs(vector.values) > ZERO_THRESHOLD):
        elem = index.element_at(int(i))
        text = format_partial_perm(elem) if index.group is None else format_wreath(elem)
        lines.append(f"{text} , {format_value(complex(vector.values[i]))}")
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
    logger.info(f"数据集已写出: {path}（{len(lines) - 2} 项）")
    return path
