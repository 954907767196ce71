import json

import pytest

from hyperform.binform import Transform
from hyperform.cli import main
from hyperform.minimize import global_reduce
from hyperform.nfield import QuadField, RATIONALS
from hyperform.tables import (
    TableError,
    load_tables,
    parse_factor,
    parse_row,
    scramble_and_recover,
    select_rows,
    verify_row,
)

ROWS = load_tables()


def _row(dab, curve=1):
    return [r for r in ROWS if r.dab == dab and r.curve == curve][0]


def test_row_counts():
    assert sum(r.table_id == "1a" for r in ROWS) == 19
    assert sum(r.table_id == "1b" for r in ROWS) == 12


def test_load_examples():
    r = _row((5, 5, 5))
    assert [c.as_fraction() for c in r.f] == [-1, 0, 0, 0, 0, 1, 0]
    assert [str(f) for f in r.delta_stable] == []
    assert [(f.norm, f.exponent) for f in r.delta_ratio] == [(2, 8), (5, 5)]
    r = _row((5, 15, 45))
    assert [(f.norm, f.exponent, f.rational) for f in r.delta_stable] == [(2, 12, True), (3, 6, True)]
    (f,) = r.delta_ratio
    assert f.norm == 5 and f.exponent == 10
    assert f.generator == r.field(1, 2)


def test_parse_factor_norm_invariant():
    K = QuadField(5)
    assert parse_factor("(2*a+1)_5^10", K).exponent == 10
    with pytest.raises(TableError):
        parse_factor("(2*a+1)_7^10", K)
    with pytest.raises(TableError):
        parse_factor("(2*a+1_5^10", K)


def test_parse_row_errors_carry_position():
    with pytest.raises(TableError) as ei:
        parse_row("table=1a; DAB=[5,5,5]; dstable=1; dratio=(2)^8 * (5)^x; f=[-1,0,0,0,0,1,0]",
                  line=7)
    assert ei.value.line == 7
    with pytest.raises(TableError):
        parse_row("table=3z; DAB=[5,5,5]; dstable=1; dratio=1; f=[1,0,0,0,0,0,1]")


def test_load_from_file(tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("# comment\n\ntable=1a; DAB=[5,5,5]; dstable=1; dratio=(2)^8 * (5)^5; "
                 "f=[-1, 0, 0, 0, 0, 1, 0]\n")
    (row,) = load_tables(p)
    assert row.line == 3 and row.field is RATIONALS
    p.write_text("table=1a; DAB=[5,5,5]; dstable=1; dratio=(q)^8; f=[-1,0,0,0,0,1,0]\n")
    with pytest.raises(TableError):
        load_tables(p)


def test_select_rows():
    assert len(select_rows(ROWS, "1b")) == 12
    assert all(r.dab[0] == 17 for r in select_rows(ROWS, "17"))
    assert [r.curve for r in select_rows(ROWS, "[5, 10, 20]")] == [1, 2]
    assert select_rows(ROWS, None) == ROWS


def test_dataset_norm_invariant():
    for r in ROWS:
        for f in r.factors():
            n = f.norm if f.rational else int(f.generator.norm())
            assert abs(n) == f.norm


@pytest.mark.parametrize("row", ROWS, ids=lambda r: r.key)
def test_verify_row(row):
    rep = verify_row(row)
    assert rep.ok, rep.errors


def test_verify_examples():
    r = _row((5, 10, 20))
    assert r.form().discriminant().as_fraction() * 2 ** 8 == 2 ** 22 * 5 ** 5
    rep = verify_row(_row((5, 15, 45)))
    assert rep.ok
    D = _row((5, 15, 45)).form().discriminant() * 2 ** 8
    assert int(D.norm()) == 4 ** 12 * 9 ** 6 * 5 ** 10


def test_verify_detects_bad_row():
    bad = parse_row("table=1a; DAB=[5,5,5]; dstable=1; dratio=(2)^8 * (5)^4; "
                    "f=[-1, 0, 0, 0, 0, 1, 0]")
    assert not verify_row(bad).ok


@pytest.mark.parametrize("row", ROWS, ids=lambda r: r.key)
def test_table_models_are_minimal(row):
    F = row.form()
    assert global_reduce(F).form == F


def test_identity_scramble():
    r = _row((5, 5, 5))
    t = scramble_and_recover(r, 0, Transform.identity(r.field))
    assert t.ok and t.form == r.form()


def test_pipeline_idempotent_on_rows():
    for r in select_rows(ROWS, "1a,[5,15,45]"):
        t = scramble_and_recover(r, 0, Transform.identity(r.field))
        assert t.ok
        again = scramble_and_recover(r, 0, Transform.identity(r.field))
        assert again.form == t.form


@pytest.mark.parametrize("dab,seed", [((5, 5, 5), 1), ((5, 15, 45), 7)])
def test_scramble_examples(dab, seed):
    t = scramble_and_recover(_row(dab), seed)
    assert t.ok and t.disc_equal and t.same_class


# ---------------------------------------------------------------------------
# command line


def _lines(capsys):
    return [json.loads(x) for x in capsys.readouterr().out.splitlines() if x.strip()]


def test_cli_disc(capsys):
    assert main(["disc", "--form", "x^5 - 1"]) == 0
    (rec,) = _lines(capsys)
    assert rec["disc"] == "3125"
    assert rec["curve_disc"] == str(2 ** 8 * 3125)


def test_cli_invariants(capsys):
    assert main(["invariants", "--form", "deg=6; f=[-1,0,0,0,0,1,0]"]) == 0
    (rec,) = _lines(capsys)
    assert rec["I10"] == str(2 ** 20 * 3125)
    assert set(rec["absolute"]) == {"i1", "i2", "i3", "degenerate"}


def test_cli_minimize(capsys):
    assert main(["minimize", "--form", "deg=6; f=[-1,0,0,0,0,32,0]"]) == 0
    (rec,) = _lines(capsys)
    assert rec["proven"] and rec["disc"] == "3125"


def test_cli_minimize_factor_cmd(capsys, tmp_path):
    script = tmp_path / "fac.py"
    script.write_text("import sys\nn = int(sys.stdin.read())\nprint(7, 11)\n")
    N = 11 * 49
    form = f"deg=6; f=[1,1,0,0,0,0,{N * N}]"
    rc = main(["minimize", "--form", form, "--factor-cmd", f"python3 {script}"])
    (rec,) = _lines(capsys)
    assert rc == 0 and rec["proven"]


def test_cli_sc_reduce(capsys):
    assert main(["sc-reduce", "--form", "(x+5)^6 + 1"]) == 0
    (rec,) = _lines(capsys)
    assert rec["poly"] == "x^6 + 1"
    assert rec["flags"] == {"R": True, "M": True}
    assert main(["sc-reduce", "--field", "5", "--form", "x^6 + (1+a)*x + 3"]) in (0, 1)
    (rec,) = _lines(capsys)
    assert set(rec["flags"]) == {"R", "I", "M"}


def test_cli_verify_tables(capsys):
    assert main(["verify-tables", "--rows", "[5,5,5],[5,15,45]", "--seeds", "1"]) == 0
    recs = _lines(capsys)
    assert recs[-1]["summary"] and recs[-1]["ok"] and recs[-1]["rows"] == 3
    assert [r["row"] for r in recs[:-1]] == sorted(r["row"] for r in recs[:-1])


def test_cli_verify_tables_failure(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("table=1a; DAB=[5,5,5]; dstable=1; dratio=(2)^8 * (5)^4; f=[-1,0,0,0,0,1,0]\n")
    assert main(["verify-tables", str(p)]) == 1
    assert _lines(capsys)[-1]["failed"] == ["1a:[5,5,5]#1"]


def test_cli_bad_input(capsys):
    assert main(["disc", "--field", "4", "--form", "x^6+1"]) == 2
    assert _lines(capsys)[0]["error"]
