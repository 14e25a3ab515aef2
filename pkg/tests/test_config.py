"""
Tests for settings resolution and small parsing helpers.
"""

import pytest
from pydantic import ValidationError

from app.config import AC_FIXTURE_PATH, Settings, load_run_file, resolve_settings
from app.errors import ConfigError
from app.utils import parse_int_grid, parse_name_list, sidecar_path


def test_run_file_tables_are_flattened(tmp_path):
    run_file = tmp_path / "run.toml"
    run_file.write_text('[source]\nseed = 7\n\n[coder]\nmax_hl = 4\n\nout_dir = "elsewhere"\n')
    assert load_run_file(run_file) == {"seed": 7, "max_hl": 4, "out_dir": "elsewhere"}


def test_flags_override_run_file(tmp_path):
    run_file = tmp_path / "run.toml"
    run_file.write_text("[source]\nseed = 7\nsamples = 500\n")
    cfg = resolve_settings(run_file, seed=9, samples=None)
    assert cfg.seed == 9
    assert cfg.samples == 500
    assert cfg.max_hl == 3


def test_environment_is_read(monkeypatch):
    monkeypatch.setenv("MAX_HL", "5")
    assert Settings().max_hl == 5


def test_settings_validation():
    with pytest.raises(ValidationError):
        resolve_settings(max_hl=1)
    with pytest.raises(ValidationError):
        resolve_settings(quality=0)


def test_fixture_is_shipped():
    assert AC_FIXTURE_PATH.is_file()


def test_parse_int_grid():
    assert parse_int_grid("20, 40,60") == [20, 40, 60]
    assert parse_int_grid("10:90:20") == [10, 30, 50, 70, 90]
    with pytest.raises(ConfigError):
        parse_int_grid("10:90:0")
    with pytest.raises(ConfigError):
        parse_int_grid("ten")


def test_parse_name_list():
    assert parse_name_list(None) is None
    assert parse_name_list("sfc,goldman") == ("sfc", "goldman")
    with pytest.raises(ConfigError):
        parse_name_list(" , ")


def test_sidecar_path(tmp_path):
    assert sidecar_path(tmp_path / "img.fa").name == "img.fa.json"


if __name__ == "__main__":
    pytest.main([__file__])
