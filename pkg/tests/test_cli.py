#                     __ _
#   ___  ___ ____ ___/ /(_)__ __
#  / _ \/ _ `/ _ `/ _  // /\ \ /
# / .__/\_,_/\_,_/\_,_//_//_\_\
#/_/
#
# Copyright (C) 2024, 2025 padix developers
#
# This file is part of padix
#
# padix is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# padix is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with padix.  If not, see <https://www.gnu.org/licenses/>.
"""Tests for the padix command line."""
from __future__ import annotations

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

import padix.padix as commands
from padix import __version__
from padix.options import padix
from padix.report import build_report


def test_version(runner: CliRunner) -> None:
	result = runner.invoke(padix, ["--version"])
	assert result.exit_code == 0
	assert __version__ in result.stdout


def test_solve_json(runner: CliRunner) -> None:
	result = runner.invoke(padix, ["solve", "--prime", "3", "--exp", "3", "--value", "8", "--json"])
	assert result.exit_code == 0
	record = json.loads(result.stdout)
	assert record["solvable"]
	assert record["root"].startswith("0|2")


def test_solve_negative(runner: CliRunner) -> None:
	result = runner.invoke(padix, ["solve", "--prime", "5", "--exp", "2", "--value", "2"])
	assert result.exit_code == 1
	assert "not solvable" in result.stdout


@pytest.mark.parametrize(
	"argv",
	[
		["solve", "--prime", "4", "--exp", "2", "--value", "2"],
		["solve", "--prime", "5", "--exp", "2", "--value", "two"],
		["algebra-check", "--prime", "5", "--class", "I", "--params", "0,0,0"],
	],
)
def test_usage_errors(runner: CliRunner, argv: list[str]) -> None:
	assert runner.invoke(padix, argv).exit_code == 2


def test_criterion_symbolic(runner: CliRunner) -> None:
	result = runner.invoke(padix, ["criterion", "--prime", "p", "--m", "4", "--json"])
	assert result.exit_code == 0
	record = json.loads(result.stdout)
	assert record["prime"] == "p"
	assert len(record["congruences"]) == 4


def test_epsilon_validates(runner: CliRunner) -> None:
	result = runner.invoke(
		padix, ["epsilon", "--prime", "5", "--exp", "5", "--validate", "4", "--json"]
	)
	assert result.exit_code == 0
	record = json.loads(result.stdout)
	assert not record["claimed"]["validation"]["complete"]
	assert record["constructed"]["validation"]["complete"]


def test_decompose_claimed(runner: CliRunner) -> None:
	argv = ["decompose", "--prime", "5", "--exp", "5", "--value", "12", "--set", "claimed"]
	result = runner.invoke(padix, [*argv, "--json"])
	assert result.exit_code == 0
	assert json.loads(result.stdout)["epsilon"] == "12"


def test_decompose_incomplete_set(runner: CliRunner) -> None:
	argv = ["decompose", "--prime", "3", "--exp", "3", "--value", "2", "--set", "claimed"]
	assert runner.invoke(padix, argv).exit_code == 1


def test_algebra_check(runner: CliRunner) -> None:
	argv = ["algebra-check", "--prime", "5", "--class", "I", "--params", "0,0,0,0", "--json"]
	result = runner.invoke(padix, argv)
	assert result.exit_code == 0
	record = json.loads(result.stdout)
	assert record["leibniz_defect"] == "0"
	assert record["filiform"]


def test_algebra_normalize(runner: CliRunner) -> None:
	argv = ["algebra-normalize", "--prime", "5", "--params", "0,8,0,0,0,0", "--json"]
	result = runner.invoke(padix, argv)
	assert result.exit_code == 0
	record = json.loads(result.stdout)
	assert record["case"] == 1
	assert record["params"] == ["0", "1", "0", "0", "0", "0"]


def test_algebra_normalize_uncovered(runner: CliRunner) -> None:
	argv = ["algebra-normalize", "--prime", "5", "--params", "0,0,0,0,0,0"]
	result = runner.invoke(padix, argv)
	assert result.exit_code == 1
	assert "not covered" in result.stdout


def test_report_file(
	runner: CliRunner, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
	monkeypatch.setattr(
		commands,
		"build_report",
		lambda scale, on_step=None: build_report(scale, ("carry", "witnesses"), on_step),
	)
	output = tmp_path / "report.json"
	result = runner.invoke(padix, ["report", "--quick", "--output", str(output)])
	assert result.exit_code == 0
	document = json.loads(output.read_text(encoding="utf-8"))
	assert document["summary"] == {"pass": 1, "finding": 1, "fail": 0}
