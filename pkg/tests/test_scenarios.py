import json
import math
import shutil
import subprocess

import pytest

from qmasslab import cli, scenarios
from qmasslab.errors import InvalidConfigError

# fast overrides keeping every scenario well under a second
FAST_PARAMS = {
    "boost": {},
    "doubleslit-map": {"nx": 41, "ny": 41},
    "doubleslit-traj": {"starts": [[25.0, 0.0]], "max_steps": 400},
    "doubleslit-fringes": {},
    "box-beat": {},
    "box-states": {"n_positions": 32},
    "box-quantize": {"n_max": 3},
}


@pytest.mark.parametrize("kind", scenarios.SCENARIOS)
def test_every_scenario_passes(kind, tmp_path):
    summary = scenarios.run(kind, FAST_PARAMS[kind], tmp_path)
    assert summary.passed, [m.name for m in summary.metrics if not m.passed]
    for name in summary.files + ["summary.json"]:
        assert (tmp_path / name).is_file()


def test_summary_schema(tmp_path):
    scenarios.run("boost", {}, tmp_path)
    doc = json.loads((tmp_path / "summary.json").read_text())
    assert doc["schema_version"] == scenarios.SCHEMA_VERSION
    assert doc["scenario"] == "boost"
    assert doc["pass"] is True
    for m in doc["metrics"]:
        assert set(m) == {
            "name", "predicted", "measured", "rel_error", "tolerance",
            "source", "pass",
        }
        assert m["source"] in ("formula", "oracle")


def test_repeated_runs_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    s1 = scenarios.run("box-beat", {}, a)
    s2 = scenarios.run("box-beat", {}, b)
    assert s1.files == s2.files
    for name in s1.files:
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_export_grid_layout(tmp_path):
    path = tmp_path / "grid.csv"
    scenarios.export_grid([0.0, 1.0], [2.0, 3.0], [[4.0, 5.0], [6.0, 7.0]], path)
    lines = path.read_text().splitlines()
    assert lines[0] == "x,y,value"
    assert len(lines) == 5
    assert lines[1] == "0,2,4"
    assert lines[4] == "1,3,7"


def test_unknown_scenario_rejected(tmp_path):
    with pytest.raises(InvalidConfigError):
        scenarios.run("nonsense", {}, tmp_path)


def test_unknown_parameter_rejected(tmp_path):
    with pytest.raises(InvalidConfigError):
        scenarios.run("boost", {"banana": 1}, tmp_path)


class TestCli:
    def test_success_exit_code(self, tmp_path, capsys):
        code = cli.main(["boost", "--out", str(tmp_path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "PASS boost" in out
        assert out.count("PASS") >= 4  # three metrics plus the final line

    def test_override_flag(self, tmp_path):
        code = cli.main(["boost", "--out", str(tmp_path), "--set", "beta=0.3"])
        assert code == 0
        doc = json.loads((tmp_path / "summary.json").read_text())
        assert doc["params"]["beta"] == 0.3

    def test_config_file(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"beta": 0.5}))
        assert cli.main(["boost", "--config", str(cfg), "--out", str(tmp_path)]) == 0

    def test_bad_parameter_exit_2(self, tmp_path, capsys):
        code = cli.main(["boost", "--out", str(tmp_path), "--set", "beta=1.2"])
        assert code == 2
        assert "config error" in capsys.readouterr().err

    def test_missing_config_exit_2(self, tmp_path):
        code = cli.main(
            ["boost", "--config", str(tmp_path / "absent.json"), "--out", str(tmp_path)]
        )
        assert code == 2

    def test_physics_error_exit_3(self, tmp_path, capsys):
        # probe at a standing-wave node of the forward-frequency component
        from qmasslab import boxwell

        p = scenarios.DEFAULTS["box-beat"]
        cfg = boxwell.BoxConfig(W=p["W"], L=p["L"], omega0=p["omega0"], v=p["v"])
        node = 9.0 * math.pi / (cfg.omega_bar + cfg.delta_omega)
        code = cli.main(
            ["box-beat", "--out", str(tmp_path), "--set", f"probe={node}"]
        )
        assert code == 3

    def test_unknown_scenario_usage_error(self, tmp_path):
        assert cli.main(["nonsense", "--out", str(tmp_path)]) == 2

    @pytest.mark.skipif(
        shutil.which("qmass-lab") is None, reason="entry point not on PATH"
    )
    def test_installed_entry_point(self, tmp_path):
        proc = subprocess.run(
            ["qmass-lab", "box-quantize", "--out", str(tmp_path), "--set", "n_max=2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        assert "PASS box-quantize" in proc.stdout
