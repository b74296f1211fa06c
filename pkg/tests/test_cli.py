from __future__ import annotations

import json

import pytest

from nodekayles import atm
from nodekayles.cli import main
from nodekayles.graph import dump_graph_json

from conftest import path_graph


@pytest.fixture
def path3_file(tmp_path):
    target = tmp_path / "path3.json"
    target.write_text(dump_graph_json(path_graph(3)))
    return str(target)


@pytest.fixture
def machine_file(tmp_path):
    target = tmp_path / "m_yes.json"
    target.write_text(json.dumps(atm.machine_to_dict(atm.load_fixture("m_yes"))))
    return str(target)


def test_sg_prints_value(path3_file, capsys):
    assert main(["sg", "-g", path3_file]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_sg_json_mode(path3_file, capsys):
    assert main(["sg", "-g", path3_file, "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"sg": 2}


def test_win_subcommand(path3_file, capsys):
    assert main(["win", "-g", path3_file]) == 0
    assert capsys.readouterr().out.strip() == "win"


def test_tau_subcommand(path3_file, capsys):
    assert main(["tau", "-g", path3_file]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_reduce_then_win_only(machine_file, tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["reduce", "-m", machine_file, "-x", "1", "--variant", "A", "-o", str(out)]) == 0
    sidecar = tmp_path / "g.json.sidecar.json"
    assert sidecar.exists()
    meta = json.loads(sidecar.read_text())
    assert meta["layout"]["T"] == 25
    capsys.readouterr()
    assert main(["sg", "-g", str(out), "--win-only"]) == 0
    assert capsys.readouterr().out.strip() == "win"


def test_reduce_dot_export(machine_file, tmp_path):
    out = tmp_path / "g.json"
    dot = tmp_path / "g.dot"
    assert main(["reduce", "-m", machine_file, "-x", "1", "-o", str(out), "--dot", str(dot)]) == 0
    text = dot.read_text()
    assert text.startswith("graph")
    assert "fillcolor" in text


def test_verify_complement_single_machine(machine_file, capsys):
    code = main(["verify", "--suite", "complement", "-m", machine_file, "-x", "1", "--json"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] and report["cases"] == 4


def test_budget_error_exit_code(path3_file, tmp_path, capsys, machine_file):
    out = tmp_path / "big.json"
    main(["reduce", "-m", machine_file, "-x", "1", "-o", str(out)])
    capsys.readouterr()
    assert main(["sg", "-g", str(out)]) == 1  # 567 nodes over the value budget
    assert "budget" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["sg"])  # missing -g
    assert exc.value.code == 2


def test_missing_file_is_reported(capsys):
    assert main(["sg", "-g", "/nonexistent/g.json"]) == 1
    assert "error" in capsys.readouterr().err


def test_play_session_scripted(path3_file, capsys, monkeypatch):
    lines = iter(["banana", "7", "0", "2"])
    monkeypatch.setattr("builtins.input", lambda prompt="": next(lines))
    assert main(["play", "-g", path3_file, "--role", "alice"]) == 0
    out = capsys.readouterr().out
    assert "not available" in out  # the dead/off-board move was re-prompted
    assert "Game over" in out
    assert "Bob wins" in out or "Alice wins" in out


def test_play_quit(path3_file, capsys, monkeypatch):
    monkeypatch.setattr("builtins.input", lambda prompt="": "q")
    assert main(["play", "-g", path3_file, "--role", "alice"]) == 0
    assert "Resigned" in capsys.readouterr().out


def test_verify_small_graphs_suite_passes(capsys):
    assert main(["verify", "--suite", "small-graphs"]) == 0
    assert "pass" in capsys.readouterr().out


def test_env_budget_override(path3_file, monkeypatch, capsys):
    monkeypatch.setenv("NK_BUDGET_NODES", "2")
    assert main(["sg", "-g", path3_file]) == 1
    assert "budget" in capsys.readouterr().err
    monkeypatch.setenv("NK_BUDGET_NODES", "3")
    assert main(["sg", "-g", path3_file]) == 0
