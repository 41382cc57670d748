import subprocess
import sys
from pathlib import Path

import pytest

from parity_resilience.cli import main
from parity_resilience.formats import parse_game, parse_report
from parity_resilience.gallery import running_example
from parity_resilience.rigged import build_rigged

DATA = Path(__file__).parent / "data"
RUNNING = str(DATA / "running_example.game")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def sigma_file(tmp_path, capsys):
    path = tmp_path / "sigma.txt"
    assert run(capsys, "solve", RUNNING, "--strategy-out", str(path))[0] == 0
    return str(path)


def test_solve_report(capsys):
    code, out, _ = run(capsys, "solve", RUNNING)
    assert code == 0
    assert out.splitlines() == [
        "0 omega+1", "1 0", "2 1", "3 1", "4 1", "5 2", "6 1", "7 omega", "8 omega", "9 omega+1",
    ]


def test_solve_trace_goes_to_stderr(capsys):
    code, out, err = run(capsys, "solve", RUNNING, "--trace")
    assert code == 0 and len(out.splitlines()) == 10
    assert "r_1 disturbance: v2=1" in err


def test_strategy_file(sigma_file):
    assert Path(sigma_file).read_text() == "2 2\n4 2\n5 5\n7 7\n9 9\n"


def test_verify_omega_plus_one_from_v9(capsys, sigma_file):
    code, out, _ = run(capsys, "verify", RUNNING, "--strategy", sigma_file, "--alpha", "omega+1", "--from", "9")
    assert code == 0 and out.startswith("ok")


def test_verify_three_from_v5_fails_with_lasso(capsys, sigma_file):
    code, out, _ = run(capsys, "verify", RUNNING, "--strategy", sigma_file, "--alpha", "3", "--from", "5")
    assert code == 1
    assert out.strip() == "stem: 5 3* 2 1* | cycle: 1"


def test_verify_accepts_vertex_names(capsys, sigma_file):
    code, out, _ = run(capsys, "verify", RUNNING, "--strategy", sigma_file, "--alpha", "omega", "--from", "v7")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "does-not-exist.game"],
        ["verify", RUNNING, "--strategy", RUNNING, "--alpha", "1", "--from", "5"],
        ["verify", RUNNING, "--strategy", "SIGMA", "--alpha", "lots", "--from", "5"],
        ["verify", RUNNING, "--strategy", "SIGMA", "--alpha", "1", "--from", "v99"],
        ["reduce-counter", RUNNING, "--target", "1", "--k", "-1"],
        ["gen", "--vertices", "0"],
        ["oracle", RUNNING, "--limit", "1"],
    ],
)
def test_input_errors_exit_2(capsys, sigma_file, argv):
    argv = [sigma_file if a == "SIGMA" else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 2


def test_bad_strategy_move_is_input_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("9 0\n")
    code, _, err = run(capsys, "verify", RUNNING, "--strategy", str(bad), "--alpha", "1", "--from", "9")
    assert code == 2 and "not a standard edge" in err


def test_malformed_game_reports_location(capsys, tmp_path):
    path = tmp_path / "g.game"
    path.write_text("parity 0;\n0 0 0 2;\n")
    code, _, err = run(capsys, "solve", str(path))
    assert code == 2 and "line 2, col 7" in err


def test_oracle_matches_solve(capsys):
    _, solved, _ = run(capsys, "solve", RUNNING)
    code, oracle, _ = run(capsys, "oracle", RUNNING)
    assert code == 0 and oracle == solved


def test_rig(capsys):
    code, out, _ = run(capsys, "rig", RUNNING)
    assert code == 0
    assert parse_game(out) == build_rigged(running_example()).game


def test_reduce_counter_writes_tag(capsys, tmp_path):
    out_path = tmp_path / "prod.game"
    visit = str(DATA / "visit_count.game")
    code, _, _ = run(capsys, "reduce-counter", visit, "--target", "v", "--k", "3", "-o", str(out_path))
    assert code == 0
    product = parse_game(out_path.read_text())
    tag_lines = (tmp_path / "prod.game.tag").read_text().splitlines()
    assert product.n == len(tag_lines) == 10
    assert tag_lines[0] == "0 0 0"
    code, report, _ = run(capsys, "solve", str(out_path))
    values = parse_report(report)
    # (v, init=1) and (v', init=0)
    assert str(values[1]) == "3" and str(values[5]) == "4"


def test_gen_is_deterministic(capsys):
    a = run(capsys, "gen", "--vertices", "5", "--seed", "42")[1]
    b = run(capsys, "gen", "--vertices", "5", "--seed", "42")[1]
    assert a == b and parse_game(a).n == 5


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "parity_resilience", "solve", RUNNING],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and len(proc.stdout.splitlines()) == 10
