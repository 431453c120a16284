# -*- coding: utf-8 -*-
# 文件路径: src/utils/json_utils.py
# -----------------------------------------
# 功能: numpy / 复数 → JSON 原生类型
# 接口:
#     np_to_py(val)
#     complex_pairs(values) -> list[[re, im]]
#     pairs_to_complex(pairs) -> np.ndarray
# -----------------------------------------

import numpy as np


def np_to_py(val):
    """递归把所有 numpy 类型转为原生 python 类型，包括字典的key和value；复数写成 [re, im]"""
    if isinstance(val, dict):
        # key强转为str，防止 int64 / tuple 问题
        return {str(np_to_py(k)): np_to_py(v) for k, v in val.items()}
    if isinstance(val, (list, tuple)):
        return [np_to_py(x) for x in val]
    if isinstance(val, np.ndarray):
        if np.iscomplexobj(val):
            return complex_pairs(val)
        return val.tolist()
    if isinstance(val, (complex, np.complexfloating)):
        return [float(val.real), float(val.imag)]
    if isinstance(val, np.integer):
        return int(val)
    if isinstance(val, np.floating):
        return float(val)
    if isinstance(val, np.bool_):
        return bool(val)
    return val


def complex_pairs(values) -> list:
    arr = np.asarray(values, dtype=np.complex128)
    return np.stack([arr.real, arr.imag], axis=-1).tolist()


def pairs_to_complex(pairs) -> np.ndarray:
    arr = np.asarray(pairs, dtype=np.float64)
    if arr.size == 0:
        return np.zeros(0, dtype=np.complex128)
    if arr.shape[-1] != 2:
        raise ValueError(f"复数须写成 [re, im] 对，实际形状 {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]
