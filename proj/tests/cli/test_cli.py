import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("ARITHGEO_CLI", "arithgeo_cli")


def run(*args, check_code=0):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    assert proc.returncode == check_code, proc.stderr
    return proc


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_construct_fields_rows():
    out = rows(run("construct-fields", "--delta", -4, "--n", 2).stdout)
    assert [r["x"] for r in out] == ["1", "3"]
    assert [r["disc_bound"] for r in out] == ["20480", "53248"]
    assert out[0]["minimal_polynomial"] == "T^4 - 2T^2 + 5"
    assert all(r["galois"] == "false" for r in out)


def test_construct_fields_json():
    data = json.loads(run("construct-fields", "--delta", -3, "--n", 1, "--json").stdout)
    assert data["fields"][0]["x"] == 2


def test_manifest_on_stderr():
    proc = run("construct-fields", "--delta", -4, "--n", 1)
    line = [l for l in proc.stderr.splitlines() if l.startswith("manifest: ")][0]
    manifest = json.loads(line[len("manifest: "):])
    assert manifest["tool"] == "arithgeo"
    assert manifest["command"] == "construct-fields"
    assert manifest["certified"] is True


def test_census_small_header():
    out = run("census", "--x", 100, "--quiet").stdout
    header = out.splitlines()[0]
    assert header == ("checkpoint,prime_count,density_ratio,expected_density,"
                      "squarefree_count,normalized_count,algebra_count")
    assert rows(out)[-1]["checkpoint"] == "100"


def test_census_counts_and_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run("census", "--x", "1e5", "--quiet", "--out", a)
    run("census", "--x", "1e5", "--quiet", "--shards", 3, "--out", b)
    assert a.read_bytes() == b.read_bytes()
    manifest = json.loads((tmp_path / "a.csv.manifest.json").read_text())
    assert manifest["x"] == 100000
    last = rows(a.read_text())[-1]
    assert last["checkpoint"] == "100000"


def test_census_algebra_file(tmp_path):
    alg = tmp_path / "alg.txt"
    run("census", "--x", 1682, "--quiet", "--algebras", alg)
    assert "41" in alg.read_text()


def test_recover():
    out = rows(run("recover", "--pairs", 5, "--d-bound", 200, "--p-bound", 100).stdout)
    assert out[0]["recovered"] == "5"
    assert out[0]["equals_pairing"] == "true"
    out = rows(run("recover", "--pairs", "5,13", "--d-bound", 2000, "--p-bound", 200).stdout)
    assert out[0]["recovered"] == "5 13"


def test_surface_demo_alias_matches():
    a = run("surface-demo", "--n", 3, "--json").stdout
    b = run("theorem2-demo", "--n", 3, "--json").stdout
    assert a == b
    data = json.loads(a)
    assert data["embedding"] == [[True, False, False], [False, True, False], [False, False, True]]
    assert [r["coarea_exact"] for r in data["rows"]] == ["84*pi", "36*pi", "56*pi"]


@pytest.mark.parametrize(
    "args,code",
    [
        (("census", "--delta", 5, "--x", 100), 2),
        (("construct-fields", "--delta", -4, "--n", 0), 2),
        (("recover", "--pairs", 3), 2),
        (("recover", "--pairs", 5, "--d-bound", 2), 4),
        (("no-such-command",), 2),
    ],
)
def test_exit_codes(args, code):
    run(*args, check_code=code)
