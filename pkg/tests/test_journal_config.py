"""
Tests de la configuration (environnement) et du journal structuré.
"""
import io
import json
import os
from pathlib import Path

import pytest

from config import Config, get_config, reset_config, set_config, split_search_path
from logging_system.journal import Journal


class TestConfig:
    def test_defaults(self):
        config = Config()
        assert config.checker.trust == 0
        assert config.checker.step_budget == 100000
        assert config.paths.search_path == []
        assert config.logging.level == "WARNING"
        assert config.logging.json_path is None
        assert config.theories_path.name == "theories"

    def test_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("HOLCHECK_TRUST", "2")
        monkeypatch.setenv("HOLCHECK_BUDGET", "50")
        monkeypatch.setenv("HOLCHECK_PATH", os.pathsep.join([str(tmp_path), "theories"]))
        monkeypatch.setenv("HOLCHECK_LOG_JSON", str(tmp_path / "log.jsonl"))
        config = Config()
        assert config.checker.trust == 2
        assert config.checker.step_budget == 50
        assert config.paths.search_path == [tmp_path, Path("theories")]
        assert config.logging.json_path == tmp_path / "log.jsonl"

    def test_invalid_integer(self, monkeypatch):
        monkeypatch.setenv("HOLCHECK_TRUST", "beaucoup")
        with pytest.raises(ValueError, match="HOLCHECK_TRUST"):
            Config()

    def test_split_ignores_empty(self):
        assert split_search_path(os.pathsep + "a" + os.pathsep) == [Path("a")]

    def test_global_instance(self):
        config = Config()
        config.checker.step_budget = 7
        set_config(config)
        assert get_config() is config
        reset_config()
        assert get_config().checker.step_budget == 100000


class TestJournal:
    def make(self, **kwargs):
        stream = io.StringIO()
        return Journal(nom="holcheck.test", niveau="INFO", stream=stream, **kwargs), stream

    def test_console_on_stream(self):
        journal, stream = self.make()
        journal.info("bonjour", source="loader", theorie="nat")
        assert "[loader] [nat] bonjour" in stream.getvalue()
        journal.close()

    def test_level_filter(self, tmp_path):
        path = tmp_path / "journal.jsonl"
        journal, stream = self.make(json_path=path)
        journal.debug("invisible")
        journal.close()
        assert stream.getvalue() == ""
        assert json.loads(path.read_text(encoding="utf-8"))["niveau"] == "DEBUG"

    def test_theorem_failure_is_warning(self, tmp_path):
        path = tmp_path / "journal.jsonl"
        journal, stream = self.make(json_path=path)
        journal.log_theorem_checked("nat", "add_comm", "failed", 3, 1, erreur="énoncé différent")
        journal.log_theorem_checked("nat", "add_assoc", "ok", 12, 2)
        journal.log_theory_checked("nat", 2, 1, 0, 4)
        journal.close()
        lines = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
        assert [line["niveau"] for line in lines] == ["WARNING", "INFO", "WARNING"]
        assert lines[0]["theoreme"] == "add_comm"
        assert lines[0]["metadata"] == {"statut": "failed", "etapes": 3}
        assert lines[2]["metadata"]["nb_echecs"] == 1
        assert "[checker] [nat/add_comm] failed (3 étapes, 1ms) - énoncé différent" in stream.getvalue()

    def test_json_lines(self, tmp_path):
        path = tmp_path / "logs" / "journal.jsonl"
        journal, _ = self.make(json_path=path)
        journal.log_theory_loaded("nat", "theories/nat.json", 28, 5)
        journal.log_expansion("nat", "two_plus_two", 1, 40)
        journal.close()
        lines = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
        assert [line["source"] for line in lines] == ["loader", "expand"]
        assert lines[0]["metadata"]["nb_elements"] == 28
        assert lines[1]["theoreme"] == "two_plus_two"
        assert lines[1]["niveau"] == "INFO"

    def test_rotating_file(self, tmp_path):
        path = tmp_path / "holcheck.log"
        journal, _ = self.make(log_file=path)
        journal.warning("attention", source="checker")
        journal.close()
        assert "attention" in path.read_text(encoding="utf-8")

    def test_from_config(self, tmp_path):
        config = Config()
        config.logging.level = "DEBUG"
        config.logging.json_path = tmp_path / "j.jsonl"
        journal = Journal.from_config(config, console_output=False)
        journal.debug("détail")
        journal.close()
        assert "détail" in (tmp_path / "j.jsonl").read_text(encoding="utf-8")
