"""Command line interface: outputs, exit codes, determinism."""

import json
import math
import shutil
import subprocess
import sys

import pytest

from shotnoise_lab.cli import main

CONFIG_A1 = """
[experiment]
t_ladder = [200.0, 400.0]
u_points = [0.5, 1.0]
replicates = 64
seed = 31337
grid_points = 33

[law]
family = "exponential"
rate = 1.0

[response]
kind = "power"
beta = 0.0

[verdicts]
ks_max = 0.2
"""


@pytest.fixture
def config_path(tmp_path):
    p = tmp_path / "experiment.toml"
    p.write_text(CONFIG_A1)
    return str(p)


class TestMoments:
    def test_known_first_moment(self, capsys):
        rc = main(["moments", "--alpha", "0.5", "--beta", "1.0", "--kmax", "2"])
        out = capsys.readouterr().out
        assert rc == 0
        assert out.splitlines()[0] == "k,moment"
        assert "1,0.4244131816" in out
        assert "2,0.2652582385" in out

    def test_beta_zero_mean(self, capsys):
        rc = main(["moments", "--alpha", "0.5", "--beta", "0.0", "--kmax", "1"])
        out = capsys.readouterr().out
        assert rc == 0
        assert f"1,{2.0 / math.pi:.10g}" in out

    def test_bad_kmax(self, capsys):
        rc = main(["moments", "--alpha", "0.5", "--beta", "1.0", "--kmax", "0"])
        err = capsys.readouterr().err
        assert rc == 2
        assert "error" in json.loads(err)


class TestVerifyLimit:
    def test_pass_run_writes_reports(self, config_path, tmp_path, capsys):
        out_dir = tmp_path / "out"
        rc = main(["verify-limit", "--config", config_path, "--out", str(out_dir)])
        stdout = capsys.readouterr().out
        assert rc == 0
        assert stdout.startswith("verify-limit a1: PASS")
        payload = json.loads((out_dir / "report.json").read_text())
        assert payload["schema_version"] == 1
        assert payload["case"] == "a1"
        assert payload["config"]["experiment"]["seed"] == 31337
        assert len(payload["rows"]) == 4
        csv_text = (out_dir / "report.csv").read_text()
        assert csv_text.startswith("# config: {")
        header = csv_text.splitlines()[1]
        assert header == "t,u,n,ks,ks_p,ecf_se,moment_z1,moment_z2,passed,informational"

    def test_rerun_is_byte_identical(self, config_path, tmp_path, capsys):
        a = tmp_path / "a"
        b = tmp_path / "b"
        main(["verify-limit", "--config", config_path, "--out", str(a)])
        main(["verify-limit", "--config", config_path, "--out", str(b)])
        capsys.readouterr()
        assert (a / "report.json").read_bytes() == (b / "report.json").read_bytes()
        assert (a / "report.csv").read_bytes() == (b / "report.csv").read_bytes()

    def test_thread_count_does_not_change_bytes(self, config_path, tmp_path, capsys):
        a = tmp_path / "t1"
        b = tmp_path / "t2"
        main(["verify-limit", "--config", config_path, "--out", str(a),
              "--threads", "1"])
        main(["verify-limit", "--config", config_path, "--out", str(b),
              "--threads", "2"])
        capsys.readouterr()
        assert (a / "report.json").read_bytes() == (b / "report.json").read_bytes()

    def test_seed_override_changes_rows(self, config_path, tmp_path, capsys):
        a = tmp_path / "s1"
        b = tmp_path / "s2"
        main(["verify-limit", "--config", config_path, "--out", str(a)])
        main(["verify-limit", "--config", config_path, "--out", str(b),
              "--seed", "99"])
        capsys.readouterr()
        pa = json.loads((a / "report.json").read_text())
        pb = json.loads((b / "report.json").read_text())
        assert pb["config"]["experiment"]["seed"] == 99
        assert pa["rows"] != pb["rows"]

    def test_missing_config_file(self, tmp_path, capsys):
        rc = main(["verify-limit", "--config", str(tmp_path / "nope.toml")])
        err = capsys.readouterr().err
        assert rc == 2
        assert "error" in json.loads(err)

    def test_malformed_toml(self, tmp_path, capsys):
        p = tmp_path / "broken.toml"
        p.write_text("[experiment\nt_ladder = [")
        rc = main(["verify-limit", "--config", str(p)])
        err = capsys.readouterr().err
        assert rc == 2
        assert "error" in json.loads(err)

    def test_unknown_family(self, tmp_path, capsys):
        p = tmp_path / "bad.toml"
        p.write_text(CONFIG_A1.replace('family = "exponential"',
                                       'family = "weibull"'))
        rc = main(["verify-limit", "--config", str(p)])
        err = capsys.readouterr().err
        assert rc == 2
        assert "law.family" in json.loads(err)["error"]


class TestSimulate:
    def test_csv_and_svg_outputs(self, config_path, tmp_path, capsys):
        out_dir = tmp_path / "sim"
        rc = main(["simulate", "--config", config_path, "--out", str(out_dir),
                   "--paths", "3", "--format", "csv", "--format", "svg"])
        assert rc == 0
        capsys.readouterr()
        lines = (out_dir / "paths.csv").read_text().splitlines()
        assert lines[0].startswith("# config: ")
        assert lines[1] == "u,path_0,path_1,path_2"
        assert len(lines) == 2 + 33
        svg = (out_dir / "paths.svg").read_text()
        assert svg.startswith("<svg")
        assert not (out_dir / "paths.json").exists()


class TestSelfsim:
    def test_inverse_integral_kind(self, capsys):
        rc = main(["selfsim", "--kind", "z", "--alpha", "0.5", "--beta", "1.0",
                   "--paths", "2000", "--grid", "33", "--seed", "11"])
        out = capsys.readouterr().out
        payload = json.loads(out)
        assert rc == 0
        assert payload["pass"] is True
        assert payload["hurst"] == pytest.approx(1.5)

    def test_stable_integral_kind(self, capsys):
        rc = main(["selfsim", "--kind", "y", "--alpha", "1.5", "--beta", "1.0",
                   "--paths", "4000", "--grid", "129", "--seed", "11"])
        payload = json.loads(capsys.readouterr().out)
        assert rc == 0
        assert payload["hurst"] == pytest.approx(1.0 + 1.0 / 1.5)

    def test_factor_validation(self, capsys):
        rc = main(["selfsim", "--kind", "y", "--alpha", "1.5", "--factor", "1.0",
                   "--paths", "100", "--grid", "17"])
        err = capsys.readouterr().err
        assert rc == 2
        assert "factor" in json.loads(err)["error"]


class TestStableCheck:
    def test_default_grid_passes(self, capsys):
        rc = main(["stable-check", "--alpha", "1.5", "--n", "20000", "--seed", "3"])
        payload = json.loads(capsys.readouterr().out)
        assert rc == 0
        assert payload["overall_pass"] is True
        assert payload["results"][0]["alpha"] == 1.5


class TestEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "shotnoise_lab.cli", "moments",
             "--alpha", "0.5", "--beta", "0", "--kmax", "1"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "1,0.6366197724" in proc.stdout

    @pytest.mark.skipif(shutil.which("shotnoise-lab") is None,
                        reason="console script not on PATH")
    def test_console_script(self):
        proc = subprocess.run(
            ["shotnoise-lab", "moments", "--alpha", "0.5", "--beta", "0",
             "--kmax", "1"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "1,0.6366197724" in proc.stdout
