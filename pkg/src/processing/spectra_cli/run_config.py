# -*- coding: utf-8 -*-
# 文件路径: src/processing/spectra_cli/run_config.py
# -----------------------------------------
# 功能: 命令行运行配置 RunConfig（pydantic 校验）与群描述符解析
# 接口:
#     RunConfig(...)
#     RunConfig.group_table() -> GroupTable | None
#     RunConfig.element_index() -> ElementIndex
#     parse_group(descriptor) -> GroupTable | None
# 版本: 1.0.0
# 最新更改时间: 2026-10-16
# 说明: 群描述符为 none | cyclic:<m> | table:<path.json>
# -----------------------------------------

import logging
import os
from functools import lru_cache
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.constants import (
    CACHE_ENV_VAR, DEFAULT_N_CAP, DEFAULT_SEED, MAX_GROUP_ORDER, PIPELINE_TOLERANCE,
)
from src.processing.exceptions import ConfigurationError
from src.processing.monoid_core.element_index import ElementIndex
from src.processing.monoid_core.group_table import GroupTable, cyclic_group

logger = logging.getLogger(__name__)

Command = Literal["transform", "inverse", "convolve", "energy", "bench", "selftest"]


@lru_cache(maxsize=16)
def parse_group(descriptor: str) -> Optional[GroupTable]:
    text = (descriptor or "none").strip()
    if text.lower() == "none":
        return None
    kind, _, arg = text.partition(":")
    if kind == "cyclic":
        try:
            m = int(arg)
        except ValueError as e:
            raise ConfigurationError(f"循环群描述符须为 cyclic:<m>，实际 {descriptor!r}") from e
        if not 1 <= m <= MAX_GROUP_ORDER:
            raise ConfigurationError(f"循环群的阶须在 1..{MAX_GROUP_ORDER}，实际 {m}")
        return cyclic_group(m)
    if kind == "table" and arg:
        return GroupTable.from_json(arg)
    raise ConfigurationError(f"未知的群描述符: {descriptor!r}（可选 none | cyclic:m | table:path.json）")


class RunConfig(BaseModel):
    """一次命令运行的全部参数；命令行标志覆盖配置文件中的同名项"""
    model_config = ConfigDict(extra="forbid")

    command: Command
    n: int = Field(3, ge=0)
    group: str = "none"
    input_path: Optional[str] = None
    input_path2: Optional[str] = None
    output_path: Optional[str] = None
    cache_dir: Optional[str] = None
    tolerance: float = Field(PIPELINE_TOLERANCE, gt=0)
    seed: int = DEFAULT_SEED
    verify: bool = False
    naive: bool = False
    unsafe_n: bool = False
    binary: bool = False
    n_cap: int = Field(DEFAULT_N_CAP, ge=0)

    @field_validator("group")
    @classmethod
    def _group_syntax(cls, value: str) -> str:
        text = value.strip()
        if text.lower() == "none" or text.startswith("cyclic:") or text.startswith("table:"):
            return text
        raise ValueError(f"未知的群描述符: {value!r}")

    @model_validator(mode="after")
    def _caps(self) -> "RunConfig":
        if self.n > self.n_cap and not self.unsafe_n:
            raise ValueError(f"n={self.n} 超过上限 {self.n_cap}（如确需请使用 --unsafe-n）")
        if self.cache_dir is None:
            self.cache_dir = os.environ.get(CACHE_ENV_VAR) or None
        return self

    def group_table(self) -> Optional[GroupTable]:
        return parse_group(self.group)

    def element_index(self) -> ElementIndex:
        return _index(self.n, self.group, self.n_cap, self.unsafe_n)


@lru_cache(maxsize=8)
def _index(n: int, group: str, n_cap: int, unsafe: bool) -> ElementIndex:
    return ElementIndex(n, parse_group(group), max_n=n_cap, allow_unsafe=unsafe)
