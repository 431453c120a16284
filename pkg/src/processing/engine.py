#!/usr/bin/env python3.12
# -*- coding: utf-8 -*-
"""
文件: engine.py
模块: src.processing.engine
功能: 提供统一的任务调度接口（run_task）及命令行入口（run），支持 YAML 或 Python 配置
版本: v2.0.0
最近更新: 2026-10-17

较上一版改进:
  1. 任务注册表改为 transform / inverse / convolve / energy / bench / selftest；
  2. 命令行改为 <command> + 标志，标志覆盖配置文件中的 <command>_params；
  3. stdout 只输出一份 JSON 报告，日志写 stderr，进程以任务的 exit_code 退出
"""

import importlib.util
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from src.constants import EXIT_SUCCESS, EXIT_VALIDATION_ERROR, SUPPORTED_TASKS
from src.processing.spectra_cli.common import failure_result
from src.processing.spectra_cli.reports import report_schemas
from src.processing.spectra_cli.run_bench import run as run_bench
from src.processing.spectra_cli.run_selftest import run as run_selftest
from src.processing.spectra_cli.run_spectra import run_convolve, run_energy, run_inverse, run_transform
from src.processing.task_result import TaskResult


class SpectraEngine:
    """
    处理引擎核心，支持单任务调度（run_task）和按配置顺序执行（run）。
    """

    def __init__(self, config: Any):
        self.config = config
        self.logger = logging.getLogger(self.__class__.__name__)
        self.task_registry: Dict[str, Callable[..., TaskResult]] = {
            "transform": run_transform,
            "inverse":   run_inverse,
            "convolve":  run_convolve,
            "energy":    run_energy,
            "bench":     run_bench,
            "selftest":  run_selftest,
        }

    def params_for(self, task_name: str) -> Dict[str, Any]:
        return dict(getattr(self.config, f"{task_name}_params", None) or {})

    def run_task(self, task_name: str, **kwargs) -> TaskResult:
        """
        运行指定任务。

        参数:
            task_name: 注册任务名
            kwargs:    任务参数（覆盖配置中的 <task>_params）
        返回:
            TaskResult
        """
        if task_name not in self.task_registry:
            msg = f"未知任务: {task_name}"
            self.logger.error(msg)
            return failure_result(task_name, ValueError(msg), [])

        params = self.params_for(task_name)
        params.update({k: v for k, v in kwargs.items() if v is not None})
        self.logger.info(f"开始执行任务 [{task_name}]，参数: {params}")
        try:
            result = self.task_registry[task_name](config=self.config, **params)
        except Exception as e:
            self.logger.exception(f"任务 [{task_name}] 执行失败: {e}")
            return failure_result(task_name, e, [])
        if result.ok:
            self.logger.info(f"任务 [{task_name}] 执行成功")
        else:
            self.logger.warning(f"任务 [{task_name}] 失败（退出码 {result.exit_code}）: {result.message}")
        return result

    def run(self, sequence: Optional[List[str]] = None) -> Dict[str, TaskResult]:
        """
        依次执行配置中给出了 <task>_params 的任务；遇到失败即停止。
        """
        if sequence is None:
            sequence = [t for t in SUPPORTED_TASKS if getattr(self.config, f"{t}_params", None)]
        results: Dict[str, TaskResult] = {}
        for task in sequence:
            res = self.run_task(task)
            results[task] = res
            if not res.ok:
                self.logger.warning(f"执行中断于 [{task}]，状态: {res.status}")
                break
        return results


def _load_py_config(file_path: str) -> Any:
    """从给定 Python 文件加载配置对象。"""
    path = Path(file_path).resolve()

    module_name = "config"
    if path.name == "config.py" and path.parent.name == "src":
        module_name = "src.config"

    # 保证项目根目录（包含 src 的目录）在 sys.path 中
    project_root = path.parent.parent if path.parent.name == "src" else path.parent
    inserted = False
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))
        inserted = True

    try:
        spec = importlib.util.spec_from_file_location(module_name, str(path))
        cfg_mod = importlib.util.module_from_spec(spec)
        sys.modules[module_name] = cfg_mod
        spec.loader.exec_module(cfg_mod)
        return getattr(cfg_mod, "config", cfg_mod)
    finally:
        if inserted:
            try:
                sys.path.remove(str(project_root))
            except ValueError:
                pass


def load_config(path: str | None = None) -> Any:
    """加载配置文件。支持 YAML 或 Python 格式；未指定时使用 src/config.py。"""
    if path:
        ext = os.path.splitext(path)[1].lower()
        if ext in (".yaml", ".yml"):
            import yaml
            from src.config import EngineConfig
            with open(path, "r", encoding="utf-8") as f:
                cfg_dict = yaml.safe_load(f) or {}
            if not isinstance(cfg_dict, dict):
                raise ValueError(f"YAML 配置顶层必须是映射: {path}")
            return EngineConfig(**cfg_dict)
        elif ext == ".py":
            return _load_py_config(path)
        else:
            raise ValueError(f"不支持的配置文件格式: {ext}")
    here = Path(__file__).resolve()
    search_dirs = [here.parents[1], here.parents[2]]  # src/, project root
    for d in search_dirs:
        candidate = d / "config.py"
        if candidate.is_file():
            return _load_py_config(str(candidate))

    raise FileNotFoundError("未指定配置文件，且未找到默认 config.py")


def build_parser():
    import argparse

    parser = argparse.ArgumentParser(
        prog="spectra",
        description="车 monoid R_n 及 G≀R_n 上的快速 Fourier 变换引擎 CLI",
    )
    parser.add_argument("command", nargs="?", choices=SUPPORTED_TASKS,
                        help="要执行的命令；不指定则按配置依次执行")
    parser.add_argument("--config", "-c", help="配置文件路径，YAML 或 Python 脚本")
    parser.add_argument("--n", type=int, help="基集大小 n")
    parser.add_argument("--group", help="标签群: none | cyclic:<m> | table:<path.json>")
    parser.add_argument("--in", dest="input_path", help="输入数据集或谱文件")
    parser.add_argument("--in2", dest="input_path2", help="convolve 的第二个数据集")
    parser.add_argument("--out", dest="output_path", help="输出文件路径")
    parser.add_argument("--cache-dir", dest="cache_dir", help="不可约表示缓存目录")
    parser.add_argument("--tolerance", type=float, help="--verify 与自检使用的容差")
    parser.add_argument("--seed", type=int, help="随机种子（bench / selftest）")
    parser.add_argument("--verify", action="store_true", default=None, help="输出前做往返或朴素校验")
    parser.add_argument("--naive", action="store_true", default=None, help="使用参考实现（稀疏 zeta + 直接群求和）")
    parser.add_argument("--unsafe-n", dest="unsafe_n", action="store_true", default=None,
                        help="允许超过 n 上限")
    parser.add_argument("--binary", action="store_true", default=None, help="谱数据写为二进制 .bin")
    parser.add_argument("--verbose", "-v", action="store_true", help="输出 DEBUG 级日志")
    parser.add_argument("--schema", action="store_true", help="打印各命令 JSON 报告的 schema 后退出")
    return parser


def _emit(payload: Dict[str, Any]):
    print(json.dumps(payload, sort_keys=True, ensure_ascii=False))


def run(argv: Optional[List[str]] = None):
    """
    CLI 入口：stdout 只写 JSON 报告，日志写到 stderr。
    如果未指定 --config，将尝试导入 src/config.py。
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )

    if args.schema:
        _emit(report_schemas())
        sys.exit(EXIT_SUCCESS)

    try:
        config = load_config(args.config)
    except Exception as e:
        logging.getLogger(__name__).error(f"加载配置失败: {e}")
        _emit(failure_result(args.command or "config", e, []).payload)
        sys.exit(EXIT_VALIDATION_ERROR)

    engine = SpectraEngine(config)
    flags = {
        "n": args.n, "group": args.group,
        "input_path": args.input_path, "input_path2": args.input_path2, "output_path": args.output_path,
        "cache_dir": args.cache_dir, "tolerance": args.tolerance, "seed": args.seed,
        "verify": args.verify, "naive": args.naive, "unsafe_n": args.unsafe_n, "binary": args.binary,
    }

    if args.command:
        result = engine.run_task(args.command, **flags)
        _emit(result.payload)
        sys.exit(result.exit_code)

    summary = engine.run()
    _emit({name: res.payload for name, res in summary.items()})
    sys.exit(max((res.exit_code for res in summary.values()), default=EXIT_SUCCESS))


if __name__ == "__main__":
    run()
