# -*- coding: utf-8 -*-
# 文件路径: src/processing/spectra_cli/reports.py
# -----------------------------------------
# 功能: 各命令写到 stdout 的 JSON 报告模型（pydantic），兼作输出 schema
# 接口:
#     TransformReport / VectorReport / EnergyReport / BenchReport / SelftestReport / ErrorReport
#     report_schemas() -> dict[str, dict]
# 版本: 1.0.0
# 最新更改时间: 2026-10-16
# -----------------------------------------

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict


class _Report(BaseModel):
    model_config = ConfigDict(extra="forbid")

    status: Literal["success", "failure"] = "success"
    command: str
    n: int
    group: str

    def to_payload(self) -> dict:
        return self.model_dump(mode="json")


class TransformReport(_Report):
    size: int
    output: Optional[str] = None
    binary: bool = False
    operations: Dict[str, Any]
    verify_error: Optional[float] = None


class VectorReport(_Report):
    nonzero: int
    output: Optional[str] = None
    operations: Dict[str, Any] = {}
    verify_error: Optional[float] = None


class EnergyRow(BaseModel):
    k: int
    irrep: str
    dim: int
    r: int
    energy: float
    share: float


class EnergyReport(_Report):
    total_energy: float
    rows: List[EnergyRow]
    output: Optional[str] = None


class BenchStep(BaseModel):
    k: int
    measured: int
    bound: int
    within_bound: bool


class BenchReport(_Report):
    cardinality: int
    steps: List[BenchStep]
    total_operations: int
    total_bound: float
    naive_cost: int
    naive_rook_bound: Optional[int] = None
    peak_stored: int
    storage_bound: int
    trivial_storage_bound: int
    storage_ratio: Optional[float] = None
    storage_lower_ratio: Optional[float] = None
    group_stage_naive_ops: int
    group_stage_measured_ops: int
    pipeline_bound: Optional[float] = None
    violations: List[str] = []
    output: Optional[str] = None


class SuiteResult(BaseModel):
    name: str
    passed: bool
    max_error: Optional[float] = None
    message: str = ""


class SelftestReport(_Report):
    seed: int
    fingerprint: str
    suites: List[SuiteResult]


class ErrorReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    status: Literal["failure"] = "failure"
    error: str
    message: str
    command: Optional[str] = None

    def to_payload(self) -> dict:
        return self.model_dump(mode="json", exclude_none=True)


REPORTS = {
    "transform": TransformReport,
    "inverse": VectorReport,
    "convolve": VectorReport,
    "energy": EnergyReport,
    "bench": BenchReport,
    "selftest": SelftestReport,
    "error": ErrorReport,
}


def report_schemas() -> Dict[str, dict]:
    return {name: model.model_json_schema() for name, model in REPORTS.items()}
