import json

import pytest

from kronhook import kronecker
from kronhook.cli import main
from kronhook.orders import parse_order
from kronhook.tableaux import parse_tableau, tableau_from_json

from conftest import FIG3_ORDERS, FIG3_TEXT


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


@pytest.fixture
def fig3_file(tmp_path):
    path = tmp_path / "fig3.tab"
    path.write_text(FIG3_TEXT[0] + "\n")
    return path


def test_compute(capsys):
    assert run(capsys, "compute", "--lambda", "2,1", "--nu", "2,1", "--d", "1") == (0, "1\n", "")


def test_compute_oracle_and_witnesses_json(capsys):
    status, out, _ = run(capsys, "compute", "--lambda", "5,5,4", "--nu", "4,3,3,3,1", "--d", "6",
                         "--oracle", "--witnesses", "--format", "json")
    data = json.loads(out)
    assert status == 0
    assert data["g"] == data["oracle"] == 3
    fig3 = parse_tableau(FIG3_TEXT[0], parse_order(FIG3_ORDERS[0]))
    assert fig3 in [tableau_from_json(w) for w in data["witnesses"]]


def test_compute_oracle_mismatch(capsys, monkeypatch):
    import kronhook.cli as cli

    monkeypatch.setattr(cli, "oracle_hook", lambda lam, d, nu: 99)
    status, out, _ = run(capsys, "compute", "--lambda", "2,1", "--nu", "2,1", "--d", "1", "--oracle")
    assert status == 1 and "MISMATCH" in out


def test_convert_trace_reproduces_fig3(capsys, fig3_file):
    status, out, _ = run(capsys, "convert", "--to", "smallbar", "--input", str(fig3_file), "--trace")
    assert status == 0
    blocks = out.strip().split("\n\n")
    assert blocks == [f"order: {o}\n{t}" for o, t in zip(FIG3_ORDERS, FIG3_TEXT)]


def test_convert_json_round_trip(capsys, fig3_file, tmp_path):
    status, out, _ = run(capsys, "convert", "--to", "smallbar", "--input", str(fig3_file), "--json")
    assert status == 0
    data = json.loads(out)
    assert tableau_from_json(data) == parse_tableau(FIG3_TEXT[3], parse_order(FIG3_ORDERS[3]))
    # JSON input carries its own order
    back = tmp_path / "last.json"
    back.write_text(out)
    status, out, _ = run(capsys, "convert", "--to", "natural", "--input", str(back))
    assert out.strip() == FIG3_TEXT[0]


def test_convert_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1' 1\n2 3'\n3\n"))
    status, out, _ = run(capsys, "convert", "--to", "smallbar", "--input", "-")
    assert (status, out) == (0, "1' 1\n3' 2\n3\n")


def test_seeded_output_is_reproducible(capsys, fig3_file):
    args = ("convert", "--to", "smallbar", "--input", str(fig3_file), "--trace", "--seed", "4")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
    # any shortest path ends at the same tableau
    assert first[1].strip().split("\n\n")[-1] == f"order: {FIG3_ORDERS[3]}\n{FIG3_TEXT[3]}"


def test_words(capsys, fig3_file):
    status, out, _ = run(capsys, "words", "--input", str(fig3_file))
    assert status == 0
    assert out.splitlines()[:3] == ["u 11221323", "v 113232", "w 11221323113232"]
    assert "w_ballot true" in out


def test_enumerate(capsys):
    status, out, _ = run(capsys, "enumerate", "--shape", "2", "--content", "2", "--color", "1")
    assert (status, out) == (0, "1' 1\n")
    status, out, _ = run(capsys, "enumerate", "--shape", "2,2", "--content", "2,2", "--color", "2",
                         "--order", "1 1' 2 2'", "--json")
    rows = [t["rows"] for t in json.loads(out)]
    assert [["1", "2"], ["1'", "2'"]] in rows


def test_table_tsv_and_json(capsys):
    status, out, _ = run(capsys, "table", "--n", "3")
    lines = out.strip().splitlines()
    assert lines[0] == "lambda\td\tnu\tg"
    assert len(lines) == 1 + 3 * 3 * 3
    assert "2,1\t1\t2,1\t1" in lines
    status, out, _ = run(capsys, "table", "--n", "3", "--format", "json", "--d", "0")
    data = json.loads(out)
    assert len(data) == 9
    assert {"lambda": [3], "d": 0, "nu": [3], "g": 1} in data


def test_verify(capsys):
    status, out, _ = run(capsys, "verify", "--n", "2")
    assert status == 0 and "0 mismatches" in out
    status, out, _ = run(capsys, "verify", "--n", "3", "--format", "json")
    assert status == 0 and len(json.loads(out)) == 27


def test_verify_lists_every_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(kronecker, "oracle_hook", lambda lam, d, nu: 5)
    status, out, _ = run(capsys, "verify", "--n", "2")
    assert status == 1
    assert out.count("MISMATCH") == 8


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--lambda", "1,2", "--nu", "2,1", "--d", "1"])
    assert exc.value.code == 2
    assert "--lambda" in capsys.readouterr().err
    status, _, err = run(capsys, "compute", "--lambda", "2,1", "--nu", "2,1", "--d", "5")
    assert status == 2 and "ShapeError" in err
    status, _, err = run(capsys, "convert", "--to", "smallbar", "--input", "/nonexistent/file")
    assert status == 2


def test_invalid_tableau_reports_category(capsys, tmp_path):
    path = tmp_path / "bad.tab"
    path.write_text("1' 1'\n")
    status, _, err = run(capsys, "words", "--input", str(path))
    assert status == 2 and "RepeatedBarredError" in err
