# -*- coding: utf-8 -*-
# 文件路径: src/processing/spectra_cli/common.py
# -----------------------------------------
# 功能: run_* 任务共用的配置构造与 TaskResult 封装
# -----------------------------------------

import logging
from typing import Any, List, Optional

from src.constants import EXIT_BOUND_FAILURE, EXIT_SUCCESS, EXIT_VALIDATION_ERROR
from src.processing.exceptions import BoundViolation
from src.processing.spectra_cli.reports import ErrorReport
from src.processing.spectra_cli.run_config import RunConfig
from src.processing.task_result import TaskResult

logger = logging.getLogger(__name__)


def make_run_config(command: str, config: Any, params: dict) -> RunConfig:
    """命令参数 + 配置对象上的全局项（n_cap / cache_dir / tolerance）"""
    merged = {}
    for key in ("n_cap", "cache_dir", "tolerance"):
        value = getattr(config, key, None) if config is not None else None
        if value is not None:
            merged[key] = value
    merged.update({k: v for k, v in params.items() if v is not None})
    return RunConfig(command=command, **merged)


def exit_code_for(exc: BaseException) -> int:
    return EXIT_BOUND_FAILURE if isinstance(exc, BoundViolation) else EXIT_VALIDATION_ERROR


def failure_result(command: str, exc: BaseException, logs: List[str],
                   outputs: Optional[List[str]] = None) -> TaskResult:
    msg = f"[{command}] {type(exc).__name__}: {exc}"
    logger.error(msg)
    report = ErrorReport(error=type(exc).__name__, message=str(exc), command=command)
    return TaskResult(status="failure", message=str(exc), outputs=outputs or [], logs=logs + [msg],
                      payload=report.to_payload(), exit_code=exit_code_for(exc))


def success_result(report, message: str, outputs: List[str], logs: List[str],
                   exit_code: int = EXIT_SUCCESS) -> TaskResult:
    status = "success" if exit_code == EXIT_SUCCESS else "failure"
    return TaskResult(status=status, message=message, outputs=outputs, logs=logs,
                      payload=report.to_payload(), exit_code=exit_code)
