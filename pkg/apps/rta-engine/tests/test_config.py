"""Tests for configuration loading"""

import json

from lib.config import CONFIG_NAME, DEFAULT_CONFIG, load_config, save_config


def test_defaults_when_nothing_is_found(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    script_dir = tmp_path / "app"
    script_dir.mkdir()
    assert load_config(script_dir=str(script_dir)) == DEFAULT_CONFIG


def test_file_values_override_defaults(tmp_path):
    path = tmp_path / CONFIG_NAME
    path.write_text(json.dumps({"depth": 9, "log_level": "DEBUG"}))
    config = load_config(str(path))
    assert config["depth"] == 9
    assert config["log_level"] == "DEBUG"
    assert config["rounds"] == DEFAULT_CONFIG["rounds"]


def test_search_order_prefers_the_script_directory(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    script_dir = tmp_path / "app"
    script_dir.mkdir()
    save_config({"depth": 3}, str(script_dir / CONFIG_NAME))
    save_config({"depth": 5}, str(tmp_path / CONFIG_NAME))
    assert load_config(script_dir=str(script_dir))["depth"] == 3


def test_broken_or_missing_files_fall_back(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{depth: ")
    assert load_config(str(broken)) == DEFAULT_CONFIG
    assert load_config(str(tmp_path / "absent.json")) == DEFAULT_CONFIG


def test_save_round_trip(tmp_path):
    path = str(tmp_path / CONFIG_NAME)
    save_config(DEFAULT_CONFIG, path)
    assert load_config(path) == DEFAULT_CONFIG
