import io
import json
import subprocess
import sys
from pathlib import Path

from jdiff.cli import run

FIXTURES = Path(__file__).parent / "fixtures"
BASE = str(FIXTURES / "base.json")
CHANGED = str(FIXTURES / "changed.json")
MALFORMED = str(FIXTURES / "malformed.json")
GOLDEN = FIXTURES / "golden_result.json"


class TestExitCodes:
    def test_identical_documents(self, capsys):
        assert run([BASE, BASE]) == 0
        out = capsys.readouterr().out
        assert "similarity 1.000" in out
        assert "0 events" in out

    def test_different_documents(self, capsys):
        assert run([BASE, CHANGED]) == 1

    def test_missing_file(self, capsys):
        assert run([BASE, str(FIXTURES / "does_not_exist.json")]) == 2
        err = capsys.readouterr().err
        assert err.startswith("jdiff: error:")
        assert err.count("\n") == 1

    def test_malformed_document(self, capsys):
        assert run([BASE, MALFORMED]) == 2

    def test_unknown_flag(self, capsys):
        assert run(["--frobnicate", BASE, BASE]) == 2

    def test_operator_failure(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(
            json.dumps(
                {
                    "operators": [
                        {
                            "name": "l2_distance",
                            "path_regex": "^meta$",
                            "params": {"distance_threshold": 1},
                        }
                    ]
                }
            )
        )
        assert run([BASE, CHANGED, "--config", str(config), "--quiet"]) == 3
        assert "l2-distance" in capsys.readouterr().err

    def test_help_exits_cleanly(self, capsys):
        assert run(["--help"]) == 0


class TestOutputs:
    def test_out_file_matches_golden(self, tmp_path, capsys):
        out = tmp_path / "result.json"
        code = run([BASE, CHANGED, "--mode", "ordered-fuzzy", "--out", str(out)])
        assert code == 1
        assert out.read_bytes() == GOLDEN.read_bytes()

    def test_repeated_runs_are_byte_identical(self, tmp_path, capsys):
        first = tmp_path / "first.json"
        second = tmp_path / "second.json"
        run([BASE, CHANGED, "--out", str(first), "--quiet"])
        run([BASE, CHANGED, "--out", str(second), "--quiet"])
        assert first.read_bytes() == second.read_bytes()

    def test_summary_lists_categories_with_counts(self, capsys):
        run([BASE, CHANGED])
        out_lines = capsys.readouterr().out.splitlines()
        assert out_lines[0].startswith("similarity ")
        assert "different" in out_lines[0]
        assert any(line.strip().startswith("value:change:") for line in out_lines[1:])

    def test_quiet_suppresses_stdout(self, capsys):
        run([BASE, CHANGED, "--quiet"])
        assert capsys.readouterr().out == ""

    def test_summary_and_quiet_conflict(self, capsys):
        assert run([BASE, BASE, "--summary", "--quiet"]) == 2


class TestConfigAndFlags:
    def test_ignore_flag_repeatable(self, capsys):
        code = run(
            [
                str(FIXTURES / "timestamps_only_left.json"),
                str(FIXTURES / "timestamps_only_right.json"),
                "--ignore",
                r"^meta->timestamp$",
                "--ignore",
                r"^never->matches$",
                "--quiet",
            ]
        )
        assert code == 0

    def test_without_ignore_rule_documents_differ(self, capsys):
        code = run(
            [
                str(FIXTURES / "timestamps_only_left.json"),
                str(FIXTURES / "timestamps_only_right.json"),
                "--quiet",
            ]
        )
        assert code == 1

    def test_unordered_flag(self, tmp_path, capsys):
        left = tmp_path / "l.json"
        right = tmp_path / "r.json"
        left.write_text('{"s": [1, 2, 3]}')
        right.write_text('{"s": [3, 1, 2]}')
        assert run([str(left), str(right), "--quiet"]) == 1
        assert run([str(left), str(right), "--unordered", "^s$", "--quiet"]) == 0

    def test_threshold_flag_validated(self, capsys):
        assert run([BASE, BASE, "--threshold", "1.5"]) == 2

    def test_config_file_applies(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"ignore": ["^meta->timestamp$"]}))
        code = run(
            [
                str(FIXTURES / "timestamps_only_left.json"),
                str(FIXTURES / "timestamps_only_right.json"),
                "--config",
                str(config),
                "--quiet",
            ]
        )
        assert code == 0

    def test_flags_override_config(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"ignore": ["^meta->timestamp$"]}))
        code = run(
            [
                str(FIXTURES / "timestamps_only_left.json"),
                str(FIXTURES / "timestamps_only_right.json"),
                "--config",
                str(config),
                "--ignore",
                "^something->else$",
                "--quiet",
            ]
        )
        assert code == 1  # the flag replaced the config's ignore list

    def test_unknown_config_key_rejected(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"default_mode": "ordered-exact", "watch": True}))
        assert run([BASE, BASE, "--config", str(config)]) == 2
        assert "watch" in capsys.readouterr().err

    def test_config_unordered_entries(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(
            json.dumps({"unordered": [{"path_regex": "^tags$", "fuzzy": False}]})
        )
        left = tmp_path / "l.json"
        right = tmp_path / "r.json"
        left.write_text('{"tags": ["a", "b"]}')
        right.write_text('{"tags": ["b", "a"]}')
        assert run([str(left), str(right), "--config", str(config), "--quiet"]) == 0

    def test_invalid_mode_in_config(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"default_mode": "sorted-vaguely"}))
        assert run([BASE, BASE, "--config", str(config)]) == 2

    def test_invalid_regex_in_config(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"ignore": ["*["]}))
        assert run([BASE, BASE, "--config", str(config)]) == 2

    def test_unordered_flag_fuzziness_follows_mode(self, tmp_path, capsys):
        left = tmp_path / "l.json"
        right = tmp_path / "r.json"
        left.write_text('{"s": [{"a": 1, "b": 1}, {"a": 2, "b": 2}]}')
        right.write_text('{"s": [{"a": 2, "b": 2}, {"a": 1, "b": 9}]}')
        out = tmp_path / "out.json"

        run([str(left), str(right), "--unordered", "^s$", "--out", str(out), "--quiet"])
        assert json.loads(out.read_text())["similarity"] == 0.5  # exact set match

        run(
            [
                str(left),
                str(right),
                "--mode",
                "ordered-fuzzy",
                "--unordered",
                "^s$",
                "--out",
                str(out),
                "--quiet",
            ]
        )
        assert json.loads(out.read_text())["similarity"] == 0.75  # fuzzy set match

    def test_depth_breach_is_internal_error(self, tmp_path, capsys):
        deep = {}
        node = deep
        for _ in range(600):
            node["n"] = {}
            node = node["n"]
        doc = tmp_path / "deep.json"
        doc.write_text(json.dumps(deep))
        assert run([str(doc), str(doc), "--quiet"]) == 3
        assert "depth" in capsys.readouterr().err


class TestStdin:
    def test_one_side_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(Path(BASE).read_text()))
        assert run(["-", BASE, "--quiet"]) == 0

    def test_both_sides_from_stdin_rejected(self, capsys):
        assert run(["-", "-"]) == 2


def test_installed_script_runs():
    proc = subprocess.run(["jdiff", BASE, BASE], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "similarity 1.000" in proc.stdout
