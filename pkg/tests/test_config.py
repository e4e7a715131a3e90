import json

from exactmix.config import DEFAULT_CONFIG, ConfigLoader


def test_defaults_without_file(tmp_path):
    config = ConfigLoader(str(tmp_path / "missing.json")).load_config()
    assert config == DEFAULT_CONFIG


def test_merges_user_values(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"mask_cap": 12, "seed": 7}), encoding="utf-8")
    config = ConfigLoader(str(path)).load_config()
    assert config["mask_cap"] == 12
    assert config["seed"] == 7
    assert config["tol"] == DEFAULT_CONFIG["tol"]


def test_invalid_json_falls_back(tmp_path, capsys):
    path = tmp_path / "config.json"
    path.write_text("{oops", encoding="utf-8")
    assert ConfigLoader(str(path)).load_config() == DEFAULT_CONFIG
    assert "Invalid JSON" in capsys.readouterr().err


def test_invalid_values_fall_back(tmp_path, capsys):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"mask_cap": 40}), encoding="utf-8")
    assert ConfigLoader(str(path)).load_config()["mask_cap"] == DEFAULT_CONFIG["mask_cap"]
    assert "mask_cap" in capsys.readouterr().err


def test_validate_config():
    loader = ConfigLoader()
    assert loader.validate_config({"eps": 0.5, "output_format": "tsv"})
    assert not loader.validate_config({"eps": -1})
    assert not loader.validate_config({"burn_in_fraction": 1.0})
    assert not loader.validate_config({"max_iters": 0})
    assert not loader.validate_config({"seed": -3})
    assert not loader.validate_config({"show_progress_animation": "yes"})
    assert not loader.validate_config({"output_format": "xml"})
    assert not loader.validate_config({"log_level": "LOUD"})


def test_environment_overrides(tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"seed": 1}), encoding="utf-8")
    monkeypatch.setenv("EXACTMIX_CONFIG", str(path))
    monkeypatch.setenv("EXACTMIX_LOG_LEVEL", "debug")
    config = ConfigLoader().load_config()
    assert config["seed"] == 1
    assert config["log_level"] == "DEBUG"


def test_logger_survives_unwritable_directory(tmp_path, monkeypatch):
    from exactmix.utils.logger import setup_logger

    blocker = tmp_path / "file"
    blocker.write_text("", encoding="utf-8")
    monkeypatch.setenv("EXACTMIX_LOG_DIR", str(blocker))
    log = setup_logger("exactmix.test-unwritable")
    log.info("still fine")
    assert log.handlers
