import json

import pytest

from cli import EXIT_COUNTEREXAMPLE, EXIT_PASS, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_trace_cbn(capsys):
    code, out = run(capsys, "trace-cbn", r"(\x. x) y")
    assert code == EXIT_PASS
    lines = out.out.splitlines()
    assert "db" in lines[1] and "ls" in lines[2]
    assert lines[-1] == "normal form"


def test_trace_cbn_out_of_fuel(capsys):
    code, out = run(capsys, "trace-cbn", r"(\x. x x) (\x. x x)", "--fuel", "3")
    assert code == EXIT_PASS
    assert out.out.splitlines()[-1] == "fuel exhausted"


def test_trace_cbn_json(capsys):
    code, out = run(capsys, "trace-cbn", r"(\x. x) y", "--format", "json")
    data = json.loads(out.out)
    assert data["schema"] == 1
    assert [s["label"] for s in data["steps"]] == ["db", "ls"]


@pytest.mark.parametrize("command", ["trace-cbn", "trace-cbv"])
def test_json_flag_on_traces(capsys, command):
    code, out = run(capsys, command, r"(\x. x) y", "--json")
    assert code == EXIT_PASS
    data = json.loads(out.out)
    assert data["schema"] == 1


def test_trace_cbv_all_paths(capsys):
    code, out = run(capsys, "trace-cbv", r"((\x. x) (y y))[y/z]", "--policy", "all")
    assert code == EXIT_PASS
    assert "maximal path lengths: [2]" in out.out


def test_parse_error_is_a_usage_error(capsys):
    code, out = run(capsys, "trace-cbn", r"(\x. x")
    assert code == EXIT_USAGE
    assert out.err.startswith("error:")


def test_non_kernel_term_is_a_usage_error(capsys):
    code, _ = run(capsys, "trace-cbv", "(x y) z")
    assert code == EXIT_USAGE


def test_encode(capsys):
    code, out = run(capsys, "encode-cbn", "y")
    assert (code, out.out.strip()) == (EXIT_PASS, "y<@a>")
    code, out = run(capsys, "encode-cbv", "y", "--param", "x")
    assert (code, out.out.strip()) == (EXIT_PASS, "!x(@b1). y<@b1>")


def test_encode_cbn_rejects_a_variable_channel(capsys):
    code, _ = run(capsys, "encode-cbn", "y", "--channel", "a")
    assert code == EXIT_USAGE


def test_pi_step(capsys):
    code, out = run(capsys, "pi-step", "x<@a> | x<@c> | !x(@b). y<@b>", "--all", "--format", "json")
    data = json.loads(out.out)
    assert code == EXIT_PASS
    assert data["redexes"] == 2
    assert [s["kind"] for s in data["steps"]] == ["bang", "bang"]


def test_pi_step_without_redex(capsys):
    _, out = run(capsys, "pi-step", "x<@a>")
    assert out.out.strip() == "no redex"


def test_congr(capsys):
    code, out = run(capsys, "congr", "x<@a> | 0", "x<@a>", "--depth", "1")
    assert code == EXIT_PASS
    assert "congruent: True" in out.out
    code, _ = run(capsys, "congr", "x<@a>", "y<@a>")
    assert code == EXIT_COUNTEREXAMPLE


def test_harmony(capsys):
    code, _ = run(capsys, "harmony", "!x(@b). y<@b> | x<@a>", "--depth", "1")
    assert code == EXIT_PASS
    code, out = run(capsys, "harmony", "!x(@b). y<@b> | x<@a>", "--depth", "1", "--strict")
    assert code == EXIT_COUNTEREXAMPLE
    assert "bang: DIFFERENT" in out.out


def test_bisim(capsys):
    code, out = run(capsys, "bisim", r"(\x. x) y", "--fuel", "10")
    assert code == EXIT_PASS
    assert out.out.startswith("cbn: bisimilar")
    code, out = run(capsys, "bisim", r"(\x. x) y", "--mode", "cbv", "--json")
    assert json.loads(out.out)["ok"] is True


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--size", "3")
    assert code == EXIT_PASS
    assert len(out.out.splitlines()) == 2
    _, out = run(capsys, "enumerate", "--size", "4", "--count", "--cross-check")
    count = out.out.split()[0]
    assert out.out.strip() == f"{count} (brute force: {count})"


def test_suite(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _ = run(capsys, "suite", "determinism", "--size", "4", "--format", "json", "--out", str(target))
    assert code == EXIT_PASS
    data = json.loads(target.read_text())
    assert data["suite"] == "determinism"
    assert data["ok"] is True


def test_unknown_suite_is_rejected_by_the_parser(capsys):
    with pytest.raises(SystemExit) as info:
        main(["suite", "nope"])
    assert info.value.code == 2


def test_quadratic_defaults_to_csv(capsys):
    code, out = run(capsys, "quadratic", "--prefixes", "3")
    assert code == EXIT_PASS
    assert out.out.splitlines()[0] == "term,n,m,d,terminated"
