import json

import pytest

import cxga
from cxga.cli import main

from conftest import DATA_DIR


@pytest.fixture()
def tiny_file(tmp_path):
    inst = cxga.random_euclidean_instance(8, seed=81, name="cli8")
    path = tmp_path / "cli8.tsp"
    path.write_text(cxga.format_instance(inst))
    return path


@pytest.fixture()
def triangle_file(tmp_path, triangle_345_text):
    path = tmp_path / "tri3.tsp"
    path.write_text(triangle_345_text)
    return path


def test_exact_subcommand(triangle_file, capsys):
    assert main(["exact", str(triangle_file)]) == 0
    out = capsys.readouterr().out
    assert "optimum : 12" in out
    assert "1 2 3" in out


def test_exact_refuses_large(capsys, tmp_path):
    inst = cxga.random_euclidean_instance(12, seed=1, name="big12")
    path = tmp_path / "big12.tsp"
    path.write_text(cxga.format_instance(inst))
    assert main(["exact", str(path)]) == 2
    assert "11" in capsys.readouterr().err


def test_solve_subcommand(tiny_file, capsys):
    code = main(["solve", str(tiny_file), "--algo", "GA3",
                 "--seed", "3", "--budget", "500", "--ps", "10", "--tour"])
    assert code == 0
    out = capsys.readouterr().out
    assert "best cost" in out
    assert "best tour" in out


def test_solve_cxga_preset(tiny_file, capsys):
    code = main(["solve", str(tiny_file), "--algo", "CXGA",
                 "--seed", "3", "--budget", "500", "--ps", "10"])
    assert code == 0
    assert "CXGA" in capsys.readouterr().out


def test_solve_deterministic_output(tiny_file, capsys):
    args = ["solve", str(tiny_file), "--seed", "9", "--budget", "400",
            "--ps", "10"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    strip = lambda s: [l for l in s.splitlines() if "wall time" not in l]
    assert strip(first) == strip(second)


def test_solve_unknown_algorithm_exit_2(tiny_file, capsys):
    assert main(["solve", str(tiny_file), "--algo", "GA7"]) == 2
    assert "error" in capsys.readouterr().err


def test_solve_missing_file_exit_3(capsys):
    assert main(["solve", "/no/such/file.tsp"]) == 3


def test_solve_malformed_file_exit_3(tmp_path, capsys):
    path = tmp_path / "bad.tsp"
    path.write_text("DIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\n")
    assert main(["solve", str(path)]) == 3
    assert "error" in capsys.readouterr().err


def test_bench_and_compare_flow(tiny_file, tmp_path, capsys):
    toml = tmp_path / "exp.toml"
    toml.write_text(
        f'instances = ["{tiny_file.name}"]\n'
        'algorithms = ["GA3", "CXGA"]\n'
        'repeats = 2\n'
        'base_seed = 4\n'
        'budget = 400\n'
        'ps = 10\n'
        'jobs = 1\n'
        f'output_dir = "{tmp_path / "out"}"\n')
    assert main(["bench", str(toml)]) == 0
    out = capsys.readouterr().out
    assert "cli8" in out
    report_path = tmp_path / "out" / "aggregate.json"
    assert report_path.exists()

    assert main(["compare", str(report_path),
                 "--baseline", "GA3", "--challenger", "CXGA"]) == 0
    out = capsys.readouterr().out
    assert "cli8" in out
    assert "mean delta" in out


def test_bench_missing_spec_exit_3(capsys):
    assert main(["bench", "/no/such/spec.toml"]) == 3


def test_bench_overrides(tiny_file, tmp_path, capsys):
    toml = tmp_path / "exp.toml"
    toml.write_text(
        f'instances = ["{tiny_file.name}"]\n'
        'algorithms = ["GA3"]\n'
        'repeats = 5\n'
        'budget = 400\n'
        'ps = 10\n'
        'jobs = 1\n'
        f'output_dir = "{tmp_path / "o1"}"\n')
    assert main(["bench", str(toml), "--repeats", "1",
                 "--output-dir", str(tmp_path / "o2")]) == 0
    capsys.readouterr()
    with open(tmp_path / "o2" / "aggregate.json") as fh:
        payload = json.load(fh)
    assert len(payload["results"][0]["runs"]) == 1


def test_compare_missing_algorithm_exit_2(tiny_file, tmp_path, capsys):
    toml = tmp_path / "exp.toml"
    toml.write_text(
        f'instances = ["{tiny_file.name}"]\n'
        'algorithms = ["GA3"]\n'
        'repeats = 1\nbudget = 400\nps = 10\njobs = 1\n'
        f'output_dir = "{tmp_path / "out"}"\n')
    assert main(["bench", str(toml)]) == 0
    capsys.readouterr()
    assert main(["compare", str(tmp_path / "out" / "aggregate.json"),
                 "--baseline", "GA3", "--challenger", "CXGA"]) == 2


def test_console_script_installed():
    import shutil
    import subprocess
    exe = shutil.which("cxga")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run([exe, "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "solve" in proc.stdout
