# -*- coding: utf-8 -*-
import json

import numpy as np
import pandas as pd
import pytest
from pydantic import ValidationError

from src.constants import EXIT_BOUND_FAILURE, EXIT_SUCCESS, EXIT_VALIDATION_ERROR
from src.processing.engine import SpectraEngine, build_parser, run
from src.processing.exceptions import ConfigurationError, DatasetFormatError, DimensionError
from src.processing.monoid_core.partial_perm import PartialPerm, compose, parse_partial_perm
from src.processing.poset_zeta.coeff_vector import CoeffVector
from src.processing.spectra_cli import (
    RunConfig, parse_dataset, parse_group, parse_value, run_bench, run_convolve, run_energy,
    run_inverse, run_selftest, run_transform, write_dataset,
)
from src.processing.spectra_cli.run_selftest import fingerprint


def _write(path, *lines):
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------- 数据集
def test_parse_dataset_line(tmp_path):
    rc = RunConfig(command="transform", n=7)
    f = parse_dataset(_write(tmp_path / "a.txt", "n=7", "group=none", "2,-,5,-,-,-,3 , 1.0"), rc)
    i = f.index.index_of(PartialPerm(7, (2, 0, 5, 0, 0, 0, 3)))
    assert f.values[i] == 1.0
    assert np.count_nonzero(f.values) == 1


def test_empty_file_is_zero_vector(tmp_path):
    rc = RunConfig(command="transform", n=3)
    f = parse_dataset(_write(tmp_path / "empty.txt", ""), rc)
    assert not np.any(f.values)


def test_duplicate_entries_add_up(tmp_path):
    rc = RunConfig(command="transform", n=3)
    f = parse_dataset(_write(tmp_path / "dup.txt", "# 重复", "1,-,3 , 1", "", "1,-,3 , 2"), rc)
    assert f.values[f.index.index_of(parse_partial_perm("1,-,3", 3))] == 3


def test_malformed_line_reports_line_number(tmp_path):
    rc = RunConfig(command="transform", n=3)
    with pytest.raises(DatasetFormatError) as info:
        parse_dataset(_write(tmp_path / "bad.txt", "n=3", "1,2,3 , 1", "1,2,3 , abc"), rc)
    assert info.value.line_no == 3
    with pytest.raises(DatasetFormatError) as info:
        parse_dataset(_write(tmp_path / "bad2.txt", "1,1,3 , 1"), rc)
    assert info.value.line_no == 1


@pytest.mark.parametrize("text", ["nan", "inf", "-inf", "1+nani", "infi", "1+2j"])
def test_non_finite_or_foreign_values_are_rejected(text, tmp_path):
    rc = RunConfig(command="transform", n=3)
    with pytest.raises(ValueError):
        parse_value(text)
    with pytest.raises(DatasetFormatError) as info:
        parse_dataset(_write(tmp_path / "nf.txt", "n=3", "# 注释", f"1,2,3 , {text}"), rc)
    assert info.value.line_no == 3


def test_header_must_match(tmp_path):
    rc = RunConfig(command="transform", n=3)
    with pytest.raises(DimensionError):
        parse_dataset(_write(tmp_path / "h.txt", "n=4"), rc)
    with pytest.raises(DimensionError):
        parse_dataset(_write(tmp_path / "g.txt", "group=cyclic:2"), rc)


@pytest.mark.parametrize("text, value", [("1+2i", 1 + 2j), ("0.5-3i", 0.5 - 3j), ("-2", -2), (" 1.5 ", 1.5)])
def test_parse_value(text, value):
    assert parse_value(text) == value


def test_write_dataset_round_trip(tmp_path, rng, z2):
    rc = RunConfig(command="inverse", n=2, group="cyclic:2")
    f = CoeffVector.random(rc.element_index(), rng)
    path = write_dataset(tmp_path / "v.txt", f, rc.group)
    assert np.array_equal(parse_dataset(path, rc).values, f.values)


# ---------------------------------------------------------------- 运行配置
def test_run_config_enforces_n_cap():
    with pytest.raises(ValidationError):
        RunConfig(command="transform", n=9)
    assert RunConfig(command="transform", n=9, unsafe_n=True).n == 9
    with pytest.raises(ValidationError):
        RunConfig(command="transform", group="dihedral:4")
    with pytest.raises(ValidationError):
        RunConfig(command="transform", bogus=1)


def test_parse_group():
    assert parse_group("none") is None
    assert parse_group("cyclic:3").order == 3
    with pytest.raises(ConfigurationError):
        parse_group("cyclic:0")
    with pytest.raises(ConfigurationError):
        parse_group("cyclic:x")


def test_cache_dir_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("SPECTRA_CACHE_DIR", str(tmp_path))
    assert RunConfig(command="transform").cache_dir == str(tmp_path)


# ---------------------------------------------------------------- 命令
def test_transform_then_inverse(tmp_path):
    data = _write(tmp_path / "f.txt", "n=3", "group=none", "1,2,3 , 2", "2,-,1 , 0.5-1i", "-,-,- , 3")
    spec = str(tmp_path / "spec.json")
    result = run_transform(n=3, input_path=data, output_path=spec, verify=True)
    assert result.exit_code == EXIT_SUCCESS, result.message
    assert result.payload["size"] == 34
    assert result.payload["verify_error"] <= 1e-9

    back = str(tmp_path / "back.txt")
    result = run_inverse(n=3, input_path=spec, output_path=back, verify=True)
    assert result.exit_code == EXIT_SUCCESS, result.message
    rc = RunConfig(command="inverse", n=3)
    original = parse_dataset(data, rc)
    restored = parse_dataset(back, rc)
    assert np.abs(restored.values - original.values).max() <= 1e-9


def test_transform_binary_output(tmp_path):
    data = _write(tmp_path / "f.txt", "1,2 , 1")
    result = run_transform(n=2, input_path=data, output_path=str(tmp_path / "s.json"), binary=True)
    assert result.ok
    assert (tmp_path / "s.bin").exists()


def test_transform_missing_input(tmp_path):
    result = run_transform(n=2, input_path=str(tmp_path / "nope.txt"))
    assert result.exit_code == EXIT_VALIDATION_ERROR
    assert result.payload["error"] == "ConfigurationError"


def test_convolve_singletons(tmp_path):
    x = parse_partial_perm("2,-,1", 3)
    y = parse_partial_perm("-,3,1", 3)
    a = _write(tmp_path / "a.txt", "2,-,1 , 1")
    b = _write(tmp_path / "b.txt", "-,3,1 , 1")
    out = str(tmp_path / "c.txt")
    result = run_convolve(n=3, input_path=a, input_path2=b, output_path=out, verify=True)
    assert result.exit_code == EXIT_SUCCESS, result.message
    h = parse_dataset(out, RunConfig(command="convolve", n=3))
    expected = np.zeros(h.index.total)
    expected[h.index.index_of(compose(x, y))] = 1
    assert np.abs(h.values - expected).max() <= 1e-9


def test_energy_is_deterministic(tmp_path):
    data = _write(tmp_path / "f.txt", "group=cyclic:2", "1,1:1;2,2:0 , 1", "2,1:0 , -2+1i")
    first = run_energy(n=2, group="cyclic:2", input_path=data, output_path=str(tmp_path / "e1.csv"))
    second = run_energy(n=2, group="cyclic:2", input_path=data, output_path=str(tmp_path / "e2.csv"))
    assert first.ok and second.ok
    assert first.payload["rows"] == second.payload["rows"]
    table = pd.read_csv(tmp_path / "e1.csv")
    assert table["energy"].sum() == pytest.approx(first.payload["total_energy"])


def test_bench_rejects_small_n():
    result = run_bench(n=2)
    assert result.exit_code == EXIT_VALIDATION_ERROR
    assert result.payload["error"] == "DomainError"


@pytest.mark.parametrize("n, group", [(5, "none"), (3, "cyclic:2"), (5, "cyclic:2")])
def test_bench_within_bounds(n, group, tmp_path):
    out = tmp_path / "steps.csv"
    result = run_bench(n=n, group=group, output_path=str(out))
    assert result.exit_code == EXIT_SUCCESS, result.message
    assert result.payload["violations"] == []
    assert all(step["within_bound"] for step in result.payload["steps"])
    assert len(pd.read_csv(out)) == n


def test_bench_square_n_reports_storage_ratio():
    result = run_bench(n=4)
    assert result.ok
    assert result.payload["storage_ratio"] is not None
    assert result.payload["pipeline_bound"] > result.payload["total_bound"]


def test_selftest_passes(tmp_path):
    result = run_selftest(cache_dir=str(tmp_path))
    assert result.exit_code == EXIT_SUCCESS, result.message
    assert all(suite["passed"] for suite in result.payload["suites"])
    assert result.payload["fingerprint"] == fingerprint(result.payload["seed"])


# ---------------------------------------------------------------- 引擎与命令行
def test_engine_unknown_task():
    result = SpectraEngine(config=None).run_task("compress")
    assert not result.ok
    assert result.exit_code == EXIT_VALIDATION_ERROR


def test_engine_params_are_overridden(tmp_path):
    class Cfg:
        bench_params = {"n": 2}

    result = SpectraEngine(Cfg()).run_task("bench", n=3, output_path=str(tmp_path / "s.csv"))
    assert result.ok
    assert result.payload["n"] == 3


def test_cli_exit_code_and_json(capsys):
    with pytest.raises(SystemExit) as info:
        run(["bench", "--n", "2"])
    assert info.value.code == EXIT_VALIDATION_ERROR
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "failure"
    assert payload["error"] == "DomainError"


def test_cli_schema(capsys):
    with pytest.raises(SystemExit) as info:
        run(["--schema"])
    assert info.value.code == EXIT_SUCCESS
    schemas = json.loads(capsys.readouterr().out)
    assert {"transform", "bench", "selftest", "error"} <= set(schemas)


def test_cli_yaml_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("n_cap: 4\n", encoding="utf-8")
    with pytest.raises(SystemExit) as info:
        run(["bench", "--config", str(cfg), "--n", "5"])
    assert info.value.code == EXIT_VALIDATION_ERROR
    assert json.loads(capsys.readouterr().out)["error"] == "ValidationError"


def test_parser_flags():
    args = build_parser().parse_args(["convolve", "--in", "a", "--in2", "b", "--naive"])
    assert (args.input_path, args.input_path2, args.naive, args.verify) == ("a", "b", True, None)


def test_bound_failure_code_is_distinct():
    assert EXIT_BOUND_FAILURE not in (EXIT_SUCCESS, EXIT_VALIDATION_ERROR)
