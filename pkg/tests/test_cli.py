import csv
import io
import json

import pytest

from nlie import cli, counting


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_csv(text):
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    return list(csv.reader(io.StringIO("\n".join(lines))))


def test_count_ladder(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--d", "3", "--w", "4",
                       "--method", "ladder")
    assert code == 0 and out.strip() == "6"


def test_count_witt(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "--d", "3", "--w", "4",
                       "--method", "witt")
    assert code == 0 and out.strip() == "18"


def test_count_oracle(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "--d", "2", "--w", "5",
                       "--method", "oracle")
    assert code == 0 and out.strip() == "6"


def test_count_inapplicable_method(capsys):
    code, out, err = run(capsys, "count", "--n", "3", "--d", "3", "--w", "4",
                         "--method", "witt")
    assert code == 1
    assert out == ""
    assert "does not apply" in err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--d", "3", "--w", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert "[[x3,x2,x1],x2,x1]" in lines


def test_enumerate_json_schema(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--d", "3", "--w", "3",
                       "--format", "json")
    assert code == 0
    for line in out.strip().splitlines():
        rec = json.loads(line)
        assert set(rec) == {"term", "weight", "length"}
        assert rec["weight"] == 3
        assert rec["length"] == 5


def test_enumerate_modes_differ(capsys):
    _, full, _ = run(capsys, "enumerate", "--n", "3", "--d", "3", "--w", "4")
    _, left, _ = run(capsys, "enumerate", "--n", "3", "--d", "3", "--w", "4",
                     "--mode", "left")
    assert len(full.strip().splitlines()) == 7
    assert len(left.strip().splitlines()) == 6


def test_rewrite(capsys):
    code, out, _ = run(capsys, "rewrite", "--n", "3", "[x1,x2,x3]")
    assert code == 0 and out.strip() == "-1*[x3,x2,x1]"
    code, out, _ = run(capsys, "rewrite", "--n", "3", "[x2,x1,x1]")
    assert code == 0 and out.strip() == "0"


def test_rewrite_parse_error(capsys):
    code, _, err = run(capsys, "rewrite", "--n", "3", "[x1,x2]")
    assert code == 1 and "parse error" in err


def test_rewrite_budget_exhaustion(capsys):
    code, out, err = run(capsys, "rewrite", "--n", "3", "--budget", "0",
                         "[[[x3,x2,x1],x3,x2],x2,x1]")
    assert code == 2
    assert "budget" in err
    assert out.strip() != "0"


def test_table_2(capsys):
    code, out, _ = run(capsys, "table", "--which", "2")
    rows = parse_csv(out)
    assert code == 0
    assert rows[0] == ["n", "1", "2", "3", "4", "5", "6", "7", "8"]
    assert rows[4] == ["5", "1", "5", "9", "13", "17", "21", "25", "29"]


def test_table_3(capsys):
    code, out, _ = run(capsys, "table", "--which", "3")
    rows = parse_csv(out)
    assert code == 0
    # weight-6 row carries the 1,3,3,1 pattern
    w6 = next(r for r in rows if r[0] == "6")
    assert w6[1:5] == ["1", "3", "3", "1"]


def test_table_4(capsys):
    code, out, _ = run(capsys, "table", "--which", "4")
    assert code == 0
    assert out.splitlines()[0].startswith("#")
    rows = parse_csv(out)
    w4 = next(r for r in rows if r[0] == "4")
    assert w4[1:] == ["3", "6", "10", "15", "21", "28", "36", "45", "55"]


def test_table_5(capsys):
    code, out, _ = run(capsys, "table", "--which", "5")
    rows = parse_csv(out)
    n3 = next(r for r in rows if r[0] == "3")
    assert n3[1:3] == ["-1", "1/2"]
    assert n3[3] == ""  # l4 column empty for n=3, never 0


def test_compare_schema(capsys):
    code, out, _ = run(capsys, "compare", "--n", "3", "--d", "3",
                       "--w-max", "3")
    assert code == 0
    comments = [l for l in out.splitlines() if l.startswith("#")]
    assert len(comments) == 2
    rows = parse_csv(out)
    header = rows[0]
    assert header[:3] == ["n", "d", "w"]
    assert header[-1] == "flags"
    assert set(counting.METHODS) <= set(header)
    assert len(rows) == 4  # header + w = 1..3


def test_compare_flags_disagreements(capsys):
    _, out, _ = run(capsys, "compare", "--n", "4", "--d", "4", "--w-max", "3")
    assert "EQ14=11 vs LADDER=4" in out
    _, out, _ = run(capsys, "compare", "--n", "2", "--d", "2", "--w-max", "3")
    assert "EQ14=0 vs WITT=2" in out


def test_compare_empty_fields_not_zero(capsys):
    _, out, _ = run(capsys, "compare", "--n", "3", "--d", "4", "--w-max", "2")
    rows = parse_csv(out)
    header = rows[0]
    w1 = rows[1]
    cell = dict(zip(header, w1))
    assert cell[counting.WITT] == ""  # n != 2: not applicable, not "0"
    assert cell[counting.LADDER] == ""  # n != d


def test_discrepancy_flag_mechanism_synthetic():
    values = {
        counting.ORACLE: 99,
        counting.NECKLACE_BOUND: 5,
        counting.ENUM_FULL: 99,
    }
    flags = cli.discrepancy_flags(3, 4, values)
    assert "ORACLE=99 exceeds NECKLACE_BOUND=5" in flags
    values = {counting.WITT: 2, counting.EQ14: 0}
    flags = cli.discrepancy_flags(2, 2, values)
    assert flags == ["EQ14=0 vs WITT=2"]


def test_unknown_command_rejected(capsys):
    with pytest.raises(SystemExit):
        cli.main(["frobnicate"])
