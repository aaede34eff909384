import json
from fractions import Fraction

import pytest

from harmsum import acceptance, cli, sums


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("what, expected", [("q2", 5), ("Z", 2), ("X", 1)])
def test_compute_at_11(capsys, what, expected):
    code, out, _ = run(capsys, "compute", "--p", "11", "--what", what)
    assert code == 0
    assert out == f"11\t{what}\t{expected}\n"


def test_compute_x_at_13_json(capsys):
    code, out, _ = run(capsys, "compute", "--p", "13", "--what", "X", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"p": 13, "quantity": "X", "value": 0}


def test_compute_all(capsys):
    code, out, _ = run(capsys, "compute", "--p", "23")
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 0
    assert [r[1] for r in rows[:4]] == ["q2", "q3", "X", "Z"]
    assert len(rows) == 4 + 9 + 18
    assert all(0 <= int(r[2]) < 23 for r in rows)


def test_compute_usage_errors(capsys):
    assert run(capsys, "compute", "--p", "12")[0] == 2
    assert run(capsys, "compute", "--p", "3", "--what", "Z")[0] == 2
    assert run(capsys, "compute", "--p", "13", "--what", "sum:0/18")[0] == 2
    assert run(capsys, "compute", "--p", "13", "--what", "bogus")[0] == 2


def test_compute_is_byte_stable(capsys):
    first = run(capsys, "compute", "--p", "1093", "--format", "json")[1]
    assert run(capsys, "compute", "--p", "1093", "--format", "json")[1] == first


def test_table_f(capsys):
    code, out, _ = run(capsys, "table", "--name", "f", "--n", "36")
    assert code == 0
    assert out.splitlines()[-1] == "36\t14651320015"


def test_table_kappa_and_g(capsys):
    out = run(capsys, "table", "--name", "kappa", "--n", "36")[1]
    assert out.splitlines()[-1] == f"36\t{3 * -26402265898}"
    out = run(capsys, "table", "--name", "g", "--n", "12")[1]
    assert out.splitlines()[-1] == "12\t-704"


def test_table_h_block(capsys):
    out = run(capsys, "table", "--name", "h-block", "--n", "7", "--cls", "4", "--format", "json")[1]
    values = [json.loads(line)["value"] for line in out.splitlines()]
    assert values == acceptance.MULTISECTION_BLOCKS[4]
    out = run(capsys, "table", "--name", "h-block", "--n", "2")[1]
    assert len(out.splitlines()) == 8


def test_table_unknown_name(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "--name", "nope", "--n", "3"])
    assert exc.value.code == 2


def test_search_examples(capsys):
    code, out, _ = run(capsys, "search", "--target", "sum:0/9", "--bound", "10000")
    assert code == 0
    assert [json.loads(line) for line in out.splitlines()] == [
        {"p": 677, "target": "sum:0/9"},
        {"p": 6691, "target": "sum:0/9"},
    ]
    out = run(capsys, "search", "--target", "Z", "--bound", "10000", "--format", "tsv")[1]
    assert out == "179\tZ\n1949\tZ\n"


def test_search_checkpoint(capsys, tmp_path):
    path = str(tmp_path / "s.ckpt")
    run(capsys, "search", "--target", "Z", "--bound", "1000", "--checkpoint", path)
    out = run(capsys, "search", "--target", "Z", "--bound", "3000", "--checkpoint", path)[1]
    assert [json.loads(line)["p"] for line in out.splitlines()] == [179, 1949]
    assert run(capsys, "search", "--target", "X", "--bound", "3000", "--checkpoint", path)[0] == 2


def test_search_usage_errors(capsys):
    assert run(capsys, "search", "--target", "W", "--bound", "100")[0] == 2
    assert run(capsys, "search", "--target", "X")[0] == 2
    assert run(capsys, "search", "--target", "X", "--pmin", "50", "--bound", "10")[0] == 2


def test_verify_passes(capsys):
    code, out, err = run(capsys, "verify", "--pmin", "5", "--pmax", "499")
    assert code == 0
    assert out == ""
    assert "0 failures" in err


def test_verify_relation_range(capsys):
    assert run(capsys, "verify", "--pmin", "19", "--pmax", "2000")[0] == 0


def test_verify_reports_corrupted_table(capsys, monkeypatch):
    rows = list(sums.COMPONENT_TABLE[9])
    rows[1] = rows[1]._replace(x=Fraction(-2))
    monkeypatch.setitem(sums.COMPONENT_TABLE, 9, tuple(rows))
    code, out, _ = run(capsys, "verify", "--pmin", "19", "--pmax", "60")
    assert code == 1
    assert "s(1,9) components" in out
    # X(19) = 0, so a wrong X coefficient first shows at 23
    assert out.splitlines()[0].startswith("23\t")


def test_verify_bad_range(capsys):
    assert run(capsys, "verify", "--pmin", "50", "--pmax", "10")[0] == 2


def _fake_result(passed):
    return lambda: acceptance.CriterionResult(1, "fake", passed, "stub", 0.0, 1.0)


def test_selftest_exit_codes(capsys, monkeypatch):
    monkeypatch.setattr(acceptance, "CRITERIA", {1: _fake_result(True)})
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and out.startswith("[PASS]")
    monkeypatch.setattr(acceptance, "CRITERIA", {1: _fake_result(False)})
    code, out, _ = run(capsys, "selftest")
    assert code == 1 and out.startswith("[FAIL]")
