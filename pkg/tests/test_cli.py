import json
import subprocess
import sys

import pytest

import _reference as ref
from paretorule.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_point_gaussian(capsys):
    code, out, _ = run(capsys, "point", "--ratio", "2", "--t", "0.8416212336")
    assert code == 0
    assert out == "i_cause=0.2000000000 i_effect=0.7599238408\n"


def test_point_pareto_from_cause(capsys):
    code, out, _ = run(capsys, "point", "--alpha", "1.160964047", "--i-cause", "0.2")
    assert code == 0
    effect = float(out.split("i_effect=")[1])
    # alpha given to 10 digits moves the effect by ~4e-10.
    assert effect == pytest.approx(0.8, abs=1e-9)
    code, out, _ = run(capsys, "point", "--alpha", repr(ref.ALPHA_80_20), "--i-cause", "0.2")
    assert out == "i_cause=0.2000000000 i_effect=0.8000000000\n"


def test_point_pareto_from_threshold(capsys):
    code, out, _ = run(capsys, "point", "--alpha", "2", "--A", "4", "--x-min", "2")
    assert out == "i_cause=0.2500000000 i_effect=0.5000000000\n"


def test_point_above_one_has_note(capsys):
    code, out, err = run(capsys, "point", "--ratio", "2", "--t", "0")
    assert code == 0
    assert float(out.split("i_effect=")[1]) == pytest.approx(ref.IE_T0_R2, abs=1e-9)
    assert "note:" in err


def test_point_absolute_threshold(capsys):
    code, out, _ = run(capsys, "point", "--mu", "1", "--sigma", "2", "--X", "2")
    assert code == 0
    c, e = (float(v.split("=")[1]) for v in out.split())
    assert c == pytest.approx(ref.SF_1, abs=1e-10)


@pytest.mark.parametrize(
    "argv",
    [
        ["point", "--ratio", "2"],
        ["point", "--ratio", "2", "--t", "1", "--alpha", "2"],
        ["point", "--ratio", "2", "--mu", "1", "--t", "1"],
        ["point", "--alpha", "2", "--A", "3", "--i-cause", "0.2"],
        ["point", "--ratio", "2", "--t", "1", "--format", "svg"],
        ["table", "--ratio", "2"],
        ["table", "--ratio", "2", "--X", "1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error: usage:" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["point", "--ratio", "abc"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2


@pytest.mark.parametrize(
    "argv, message",
    [
        (["fit-ratio", "--i-cause", "0.2", "--i-effect", "0.1"], "effect fraction must exceed cause fraction"),
        (["fit-alpha", "--i-cause", "0.3", "--i-effect", "0.3"], "unbounded"),
        (["fit-alpha", "--i-cause", "0.3", "--i-effect", "1"], "every alpha <= 1"),
        (["point", "--ratio", "-1", "--t", "0"], "shape ratio"),
        (["point", "--alpha", "2", "--A", "0.5"], "below x_min"),
        (["mc-check", "--ratio", "2", "--t", "0", "--n", "0"], "sample count"),
    ],
)
def test_domain_errors_exit_1(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error: ") and message in err
    assert len(err.strip().splitlines()) == 1


def test_fit_ratio(capsys):
    code, out, _ = run(capsys, "fit-ratio", "--i-cause", "0.2", "--i-effect", "0.8")
    assert float(out.split()[0].split("=")[1]) == pytest.approx(ref.RATIO_80_20, abs=1e-8)
    code, out, _ = run(capsys, "fit-ratio", "--i-cause", "0.5", "--i-effect", "0.89894")
    assert float(out.split()[0].split("=")[1]) == pytest.approx(1.0, abs=1e-4)


def test_fit_alpha_iterated(capsys):
    code, out, _ = run(capsys, "fit-alpha", "--i-cause", "0.2", "--i-effect", "0.8", "--iterate", "3")
    lines = out.splitlines()
    assert lines[0] == "alpha=1.160964047"
    assert [ln.split()[1] for ln in lines[1:]] == ["rule=80/20", "rule=64/4", "rule=51.2/0.8"]
    code, out, _ = run(capsys, "fit-alpha", "--i-cause", "0.2", "--i-effect", "0.8", "--iterate", "3",
                       "--format", "json")
    doc = json.loads(out)
    assert doc["alpha"] == pytest.approx(ref.ALPHA_80_20, abs=1e-9)
    assert [(r["i_cause"], r["i_effect"]) for r in doc["iterated"]] == [(0.2, 0.8), (0.04, 0.64), (0.008, 0.512)]


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--ratio", "2", "--t", "1.7,1.3,1.1,0.67", "--format", "json")
    rules = json.loads(out)["rules"]
    published = [(5, 25), (10, 45), (15, 60), (25, 90)]
    for rule, (c, e) in zip(rules, published):
        assert abs(100 * rule["i_cause"] - c) <= 3
        assert abs(100 * rule["i_effect"] - e) <= 3
    code, out, _ = run(capsys, "table", "--mu", "1", "--sigma", "2", "--X", "3.4", "--format", "csv")
    assert out.splitlines()[1].startswith("25/5,1.7,")


def test_json_output_for_every_command(capsys, tmp_path):
    commands = [
        ["point", "--ratio", "2", "--t", "1"],
        ["fit-ratio", "--i-cause", "0.2", "--i-effect", "0.8"],
        ["fit-alpha", "--i-cause", "0.2", "--i-effect", "0.8"],
        ["table", "--ratio", "2", "--targets", "0.2,0.1"],
        ["curve", "--steps", "11"],
        ["profile", "--steps", "11"],
        ["compare", "--steps", "11"],
        ["mc-check", "--ratio", "2", "--t", "0.84", "--n", "1000", "--seed", "1"],
    ]
    for argv in commands:
        code, out, _ = run(capsys, *argv, "--format", "json")
        assert code == 0, argv
        doc = json.loads(out)
        assert json.loads(json.dumps(doc)) == doc


def test_curve_and_compare_files(capsys, tmp_path):
    for argv in (["curve"], ["compare"], ["profile", "--shade-t", "1"]):
        for suffix in ("csv", "json", "svg"):
            a, b = tmp_path / f"a.{suffix}", tmp_path / f"b.{suffix}"
            assert run(capsys, *argv, "--out", str(a))[0] == 0
            assert run(capsys, *argv, "--out", str(b))[0] == 0
            assert a.read_bytes() == b.read_bytes()
            assert a.stat().st_size > 0
    assert (tmp_path / "a.svg").read_text().count("<polyline") == 2


def test_curve_threshold_axes(capsys):
    code, out, _ = run(capsys, "curve", "--ratio", "2", "--axes", "threshold", "--format", "svg")
    assert out.count("<polyline") == 2 and 'class="marker"' not in out


def test_mc_check(capsys):
    code, out, _ = run(capsys, "mc-check", "--ratio", "2", "--t", "0.8416", "--n", "1000000", "--seed", "7")
    assert code == 0
    assert "within_bound=yes" in out
    code2, out2, _ = run(capsys, "mc-check", "--ratio", "2", "--t", "0.8416", "--n", "1000000", "--seed", "7")
    assert out == out2


def test_stdout_identical_across_processes():
    argv = [sys.executable, "-m", "paretorule", "compare", "--steps", "31", "--format", "svg"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"<?xml")


def test_exit_codes_from_process():
    bad = subprocess.run([sys.executable, "-m", "paretorule", "fit-ratio", "--i-cause", "0.2", "--i-effect", "0.1"],
                         capture_output=True, text=True)
    assert bad.returncode == 1 and bad.stderr.startswith("error: domain:")
    usage = subprocess.run([sys.executable, "-m", "paretorule", "point"], capture_output=True, text=True)
    assert usage.returncode == 2
