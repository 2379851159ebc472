import main


def feed(monkeypatch, *lines):
    answers = iter(lines)
    monkeypatch.setattr("builtins.input", lambda _: next(answers))


def test_loop_plays_both_modes_on_kernel_terms(monkeypatch, capsys):
    feed(monkeypatch, r"(\x. x) y", "quit")
    main.main(fuel=10)
    out = capsys.readouterr().out
    assert "cbn: bisimilar" in out
    assert "cbv: bisimilar" in out


def test_loop_reports_parse_errors(monkeypatch, capsys):
    feed(monkeypatch, r"(\x.", "(x y) z", "")
    main.main(fuel=5)
    out = capsys.readouterr().out
    assert out.startswith("error:")
    assert "cbn: bisimilar" in out
    assert "cbv:" not in out
