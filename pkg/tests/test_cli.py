import csv
import io
import json

import pytest

from braidkit.cli import VERIFY_CSV_COLUMNS, main

T09633 = "SFS [D: (2,1) (3,1)] U/m SFS [D: (2,1) (3,1)], m = [ 1,2 | 0,1 ]"


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_mfw_trefoil():
    assert run(["mfw", "--braid", "1,1,1"]) == (0, "2\n")


def test_format_before_or_after():
    a = run(["--format", "json", "mfw", "--braid", "1,1,1"])
    b = run(["mfw", "--braid", "1,1,1", "--format", "json"])
    assert a == b
    assert json.loads(a[1])["mfw"] == 2


def test_homfly_variants():
    assert run(["homfly", "--braid", "1 1 1"]) == (0, "-v^4 + v^2*z^2 + 2*v^2\n")
    assert run(["homfly", "--braid", "1 1 1", "--az"])[1] == "a^-2*z^2 + 2*a^-2 - a^-4\n"


def test_alexander_methods():
    for method in ("burau", "homfly"):
        assert run(["alexander", "--braid", "1,-2,1,-2", "--method", method]) == (0, "-t + 3 - t^-1\n")


def test_invariants_json():
    code, text = run(["--format", "json", "invariants", "--braid", "1,1,1,1,1"])
    doc = json.loads(text)
    assert code == 0
    assert doc["genus"] == 2 and doc["mfw"] == 2 and doc["lspace_form"] == "2,1,0"


def test_invariants_link_csv():
    code, text = run(["--format", "csv", "invariants", "--braid", "1,1"])
    rows = list(csv.reader(io.StringIO(text)))
    row = dict(zip(rows[0], rows[1]))
    assert code == 0 and row["components"] == "2" and row["genus"] == ""


def test_obstruct():
    code, text = run(["obstruct", "--sfs", T09633])
    assert code == 0
    assert "verdict: ObstructedNotGenus2" in text
    doc = json.loads(run(["--format", "json", "obstruct", "--sfs", T09633])[1])
    assert doc["verdict"] == "ObstructedNotGenus2"
    assert doc["presentation"]["gluings"] == [[1, 2, 0, 1]]


def test_usage_errors(capsys):
    assert run(["mfw", "--braid", "1,0"])[0] == 2
    assert run(["obstruct", "--sfs", "SFS [D: (2,1)]"])[0] == 2
    assert run(["alexander", "--braid", "1,1"])[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_resource_limit_exit(monkeypatch):
    monkeypatch.setenv("BRAIDKIT_BUDGET_SECONDS", "0")
    assert run(["mfw", "--braid", ",".join(["1,2,3,4,5,6"] * 8)])[0] == 3


def test_verify_cohort_a_json():
    code, text = run(["--format", "json", "verify", "--dataset", "t2", "--cohort", "A"])
    doc = json.loads(text)
    assert code == 0
    assert len(doc["reports"]) == 9 and all(r["ok"] for r in doc["reports"])


def test_verify_csv_and_failure_exit(tmp_path):
    from braidkit.dataset import load_dataset
    rec = load_dataset()[0].to_dict()
    rec["mfw_bound"] = 5
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema_version": 1, "records": [rec]}))
    code, text = run(["--format", "csv", "verify", "--dataset", str(path)])
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 1
    assert tuple(rows[0]) == VERIFY_CSV_COLUMNS
    assert ["fail"] == [r[2] for r in rows[1:] if r[1] == "mfw"]


def test_verify_bad_dataset_exit(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("[]")
    assert run(["verify", "--dataset", str(path)])[0] == 2
