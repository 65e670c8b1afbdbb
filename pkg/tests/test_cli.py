from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ternbch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field_json(capsys):
    code, out, _ = run(capsys, "field", "--m", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"m": 2, "n": 8, "modulus": [2, 1, 1], "primitive_check": True}


def test_field_modulus_override(capsys):
    code, out, _ = run(capsys, "field", "--m", "2", "--modulus", "2,2,1", "--json")
    assert code == 0 and json.loads(out)["modulus"] == [2, 2, 1]
    assert run(capsys, "field", "--m", "2", "--modulus", "1,0,1")[0] == 2


def test_cosets_top_text(capsys):
    code, out, _ = run(capsys, "cosets", "--m", "4", "--top", "3")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[-1].endswith("16")


def test_cosets_json_elements_only_when_verbose(capsys):
    _, out, _ = run(capsys, "cosets", "--m", "3", "--top", "2", "--json")
    rows = json.loads(out)
    assert [r["acl"] for r in rows] == [13, 5, 5]
    assert all("elements" not in r for r in rows)
    _, out, _ = run(capsys, "cosets", "--m", "3", "--top", "1", "--json", "--verbose")
    assert json.loads(out) == [{"leader": 13, "acl": 13, "size": 1, "elements": [13]}]


def test_gauss(capsys):
    assert run(capsys, "gauss", "--s", "2")[1].strip() == "3"
    assert json.loads(run(capsys, "gauss", "--s", "1", "--json")[1]) == {"s": 1, "value": 1, "omega": 2}


def test_code_json_example(capsys):
    code, out, _ = run(capsys, "code", "--family", "A", "--m", "5", "--json", "--weights", "all")
    assert code == 0
    d = json.loads(out)
    assert d["weights"] == {"0": 1, "162": 242}
    assert (d["n"], d["k"], d["min_distance"], d["lcd"]) == (242, 5, 162, False)
    assert list(d) == ["family", "m", "n", "k", "designed_distance", "generator", "defining_set",
                       "lcd", "weights", "min_distance", "bch_bound_report"]
    assert json.dumps(json.loads(out), ensure_ascii=False, indent=2) == out.rstrip("\n")


def test_code_csv(capsys):
    _, out, _ = run(capsys, "code", "--family", "F", "--m", "4", "--csv")
    assert out == "weight,count\n0,1\n40,12\n60,8\n80,6\n"


def test_code_defining_set(capsys):
    code, out, _ = run(capsys, "code", "--defining-set", "1,2", "--m", "2", "--json")
    d = json.loads(out)
    assert code == 0 and d["family"] is None and d["k"] == 4
    assert d["defining_set"] == [1, 2, 3, 6]


@pytest.mark.parametrize("argv, status", [
    (["code", "--family", "A", "--m", "4"], 2),
    (["code", "--family", "E", "--m", "5", "--weights", "trace"], 3),
    (["code", "--family", "G", "--m", "6", "--max-dim", "10"], 3),
    (["code", "--family", "E", "--m", "3", "--weights", "closed"], 2),
    (["code", "--m", "3"], 2),
    (["kloosterman", "--m", "2", "--scan"], 2),
    (["kloosterman", "--m", "1", "--scan"], 4),
    (["kloosterman", "--m", "3", "--scan"], 0),
    (["field", "--m", "20"], 3),
])
def test_exit_codes(capsys, argv, status):
    assert main(argv) == status


def test_env_budget(capsys, monkeypatch):
    monkeypatch.setenv("BCH3_MAX_DIM", "4")
    assert main(["code", "--family", "A", "--m", "5"]) == 3
    assert main(["code", "--family", "A", "--m", "5", "--max-dim", "5"]) == 0


def test_kloosterman_point(capsys):
    code, out, _ = run(capsys, "kloosterman", "--m", "3", "--a", "0", "--b", "zero", "--json")
    assert code == 0 and json.loads(out) == {"m": 3, "a": "0", "b": "zero", "value": -1}


def test_verify_smoke(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "all", "--max-m", "2")
    assert code == 0
    assert out.strip().endswith("PASS")


def test_verify_workers_identical(capsys):
    a = run(capsys, "verify", "--scope", "codes", "--max-m", "4", "--json")[1]
    b = run(capsys, "verify", "--scope", "codes", "--max-m", "4", "--json", "--workers", "2")[1]
    assert a == b


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "ternbch.cli", "gauss", "--s", "4"],
                       capture_output=True, text=True, check=True)
    assert r.stdout.strip() == "-9"
