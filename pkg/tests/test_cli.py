import json

import pytest

from dnachain.cli import (
    EXIT_DOMAIN,
    EXIT_INSTABILITY,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    argv_from_meta,
    run,
)
from dnachain.output import read_meta, read_rows, render

COMMANDS = [
    ["spectrum", "--seq", "ACGTA", "--direction", "z", "--spacing", "4.5"],
    ["spectrum", "--omega", "4", "--sites", "12", "--boundary", "periodic"],
    ["site-entropy", "--seq", "GATTACA", "--temperature", "0"],
    ["binding-energy", "--omega", "6", "--sites", "50", "--boundary", "periodic", "--direction", "z", "--spacing", "20"],
    ["negativity-scan", "--steps", "5", "--sites", "20"],
    ["negativity-scan", "--steps", "3", "--config", "1,x,3", "--config", "0.01,z,6"],
    ["entropy-ensemble", "--strings", "15", "--length", "50", "--seed", "42"],
    ["neighbor-table", "--directions", "x"],
]


def invoke(tmp_path, argv, name="out", fmt="csv"):
    out = tmp_path / f"{name}.{fmt}"
    code = run(argv + ["--format", fmt, "--out", str(out)])
    return code, (out.read_text() if out.exists() else None)


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a[:3]))
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_metadata_closure(tmp_path, argv, fmt):
    code, text = invoke(tmp_path, argv, "first", fmt)
    assert code == EXIT_OK
    meta = read_meta(text)
    assert meta["command"] == argv[0]
    code, again = invoke(tmp_path, argv_from_meta(meta), "second", fmt)
    assert code == EXIT_OK
    assert again == text


def test_ensemble_is_byte_identical(tmp_path):
    argv = ["entropy-ensemble", "--strings", "30", "--seed", "42"]
    _, a = invoke(tmp_path, argv, "a")
    _, b = invoke(tmp_path, argv, "b")
    assert a == b
    rows = read_rows(a)
    assert len(rows) == 30
    assert {"shannon_nats", "mean_vne", "min_freq"} <= set(rows[0])


def test_spectrum_csv(tmp_path):
    code, text = invoke(tmp_path, ["spectrum", "--seq", "ACGTA", "--direction", "z"])
    assert code == EXIT_OK
    rows = read_rows(text)
    assert [r["mode"] for r in rows] == ["1", "2", "3", "4", "5"]
    freqs = [float(r["frequency_phz"]) for r in rows]
    assert freqs == sorted(freqs)
    assert 5.0 < freqs[0] < freqs[-1] < 7.0
    # 12 significant digits
    assert all(len(r["frequency_phz"].replace(".", "").lstrip("0")) <= 12 for r in rows)


def test_fasta_input_folds_into_header(tmp_path):
    fasta = tmp_path / "in.fa"
    fasta.write_text(">probe\nacgt\nTA\n")
    code, text = invoke(tmp_path, ["site-entropy", "--fasta", str(fasta)])
    assert code == EXIT_OK
    meta = read_meta(text)
    assert meta["seq"] == "ACGTTA"
    assert "fasta" not in meta
    assert len(read_rows(text)) == 6


def test_neighbor_table_grid(tmp_path):
    code, text = invoke(tmp_path, ["neighbor-table"], fmt="json")
    assert code == EXIT_OK
    doc = json.loads(text)
    assert [r["right\\left"] for r in doc["rows"]] == ["adenine", "cytosine", "guanine", "thymine"]
    assert doc["rows"][0]["adenine"] == pytest.approx(0.077, abs=1e-3)


def test_binding_energy_columns(tmp_path):
    _, text = invoke(tmp_path, COMMANDS[3])
    row = read_rows(text)[0]
    assert float(row["exact_j"]) < 0
    assert float(row["exact_ev"]) == pytest.approx(float(row["exact_j"]) / 1.602176634e-19, rel=1e-10)
    assert float(row["relative_gap"]) < 0.01


@pytest.mark.parametrize(
    "argv, code",
    [
        (["spectrum", "--seq", "ACGU"], EXIT_PARSE),
        (["spectrum", "--fasta", "/nonexistent/file.fa"], EXIT_PARSE),
        (["spectrum", "--seq", "ACGT", "--bogus"], EXIT_USAGE),
        (["nonsense"], EXIT_USAGE),
        (["spectrum", "--seq", "AAAA", "--spacing", "2.5", "--direction", "z"], EXIT_INSTABILITY),
        (["spectrum", "--seq", "AAAA", "--spacing", "-1"], EXIT_DOMAIN),
        (["site-entropy", "--seq", "AAAA", "--temperature", "-3"], EXIT_DOMAIN),
        (["negativity-scan", "--r-min", "2", "--r-max", "2.5", "--steps", "2", "--config", "1,x,3"], EXIT_INSTABILITY),
    ],
)
def test_exit_codes(tmp_path, capsys, argv, code):
    assert run(argv + ["--out", str(tmp_path / "x.csv")]) == code
    err = capsys.readouterr().err.strip().splitlines()
    assert err and err[-1].startswith("dnachain")


def test_instability_reports_threshold(tmp_path, capsys):
    run(["spectrum", "--seq", "AAAA", "--spacing", "2.5", "--direction", "z", "--out", str(tmp_path / "x")])
    assert "stable only for spacing above" in capsys.readouterr().err


def test_scan_drops_unstable_curve_with_diagnostic(tmp_path, capsys):
    code, text = invoke(tmp_path, ["negativity-scan", "--r-min", "3.5", "--steps", "3"])
    assert code == EXIT_OK
    assert "1,x,3 unstable" in capsys.readouterr().err
    assert {r["omega0_phz"] for r in read_rows(text) if r["epsilon"] == "1"} == {"6", "4"}


def test_stdout_output(capsys):
    assert run(["spectrum", "--seq", "AC"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("# command=spectrum")


def test_render_round_trip():
    meta = {"command": "x", "n": 3, "eps": 0.01}
    rows = [(1, 0.1 + 0.2, None), (2, 1e-20, "s")]
    csv_text = render("csv", meta, ["i", "v", "w"], rows)
    assert read_meta(csv_text) == {"command": "x", "n": "3", "eps": "0.01"}
    assert read_rows(csv_text)[0] == {"i": "1", "v": "0.3", "w": ""}
    json_text = render("json", meta, ["i", "v", "w"], rows)
    assert read_meta(json_text) == read_meta(csv_text)
    assert read_rows(json_text)[1] == {"i": 2, "v": 1e-20, "w": "s"}
