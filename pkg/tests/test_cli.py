"""CLI surface: JSON schemas, exit codes, formats, determinism."""

import json
from fractions import Fraction as F

from bqec.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    lines = [json.loads(line) for line in out.splitlines() if line.strip()]
    return code, lines


def test_curve_info(capsys):
    code, lines = run_json(capsys, "curve", "--a", "10")
    assert code == 0
    (payload,) = lines
    assert payload["A"] == "5761"
    assert payload["B"] == "160000"
    assert payload["torsion"]["shape"] == "Z/8"
    assert payload["torsion"]["proven"] is True
    assert payload["full_two_torsion"] is False
    orders = sorted(entry["order"] for entry in payload["torsion_points"])
    assert orders == [2, 4, 4, 8, 8, 8, 8]


def test_curve_full_two_torsion(capsys):
    code, lines = run_json(capsys, "curve", "--a", "6")
    assert code == 0
    assert lines[0]["torsion"]["shape"] == "Z/2xZ/8"
    assert lines[0]["full_two_torsion"] is True


def test_curve_singular_parameter(capsys):
    code, lines = run_json(capsys, "curve", "--a", "1")
    assert code == 2
    assert lines[0]["error"] == "singular-parameter"


def test_quad_from_sides(capsys):
    code, lines = run_json(capsys, "quad", "--sides", "21,28,12,5")
    assert code == 0
    payload = lines[0]
    assert payload["N"] == "99/40"
    assert payload["a"] == "21/5"
    assert payload["u"] == "1764"
    assert F(payload["v"]) in (F(366912, 5), F(-366912, 5))


def test_quad_from_point(capsys):
    code, lines = run_json(capsys, "quad", "--a", "21/5", "--u", "756/125", "--v", "532224/3125")
    assert code == 0
    payload = lines[0]
    assert payload["s"] == "69/13"
    assert payload["sides"] == ["273", "280", "72", "65"]


def test_quad_unrealizable(capsys):
    code, lines = run_json(
        capsys, "quad", "--a", "21/5", "--u", "9604/225", "--v", "7990528/16875"
    )
    assert code == 3
    payload = lines[0]
    assert payload["error"] == "not-realizable"
    assert payload["side"] == "c"
    assert payload["value"] == "-8/15"


def test_quad_irrational(capsys):
    code, lines = run_json(capsys, "quad", "--sides", "1,1,1,1")
    assert code == 3
    assert lines[0]["error"] == "irrational-n"


def test_quad_invalid_inputs(capsys):
    code, lines = run_json(capsys, "quad", "--sides", "1,2,1,1")
    assert code == 2  # incircle condition violated
    assert lines[0]["error"] == "not-pitot"
    code, lines = run_json(capsys, "quad", "--sides", "1,2,x,1")
    assert code == 2
    code, lines = run_json(capsys, "quad", "--sides", "1,2,1")
    assert code == 2


def test_search_quads_json(capsys):
    code, lines = run_json(capsys, "search-quads", "--max-side", "28")
    assert code == 0
    assert {"sides": [5, 12, 28, 21], "N": "99/40"} in lines


def test_search_quads_csv(capsys):
    code, out = run_cli(capsys, "search-quads", "--max-side", "12", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a,b,c,d,N"
    assert all(line.count(",") == 4 for line in lines[1:])


def test_sieve_json(capsys):
    code, lines = run_json(capsys, "sieve", "--subfamily", "4", "--k", "115/28")
    assert code == 0
    payload = lines[0]
    assert payload["subfamily"] == 4
    assert payload["k"] == "115/28"
    assert payload["passed"] is True
    assert payload["S523"] > 8 and payload["S1979"] > 10


def test_sieve_csv_columns(capsys):
    code, out = run_cli(
        capsys, "sieve", "--subfamily", "1", "--k", "257/134",
        "--thresholds", "523:10,1979:14", "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "subfamily,k,S523,S1979,passed"
    assert lines[1].startswith("1,257/134,") and lines[1].endswith(",true")


def test_sieve_singular_record(capsys):
    code, lines = run_json(capsys, "sieve", "--subfamily", "1", "--k", "2,257/134")
    assert code == 0
    assert lines[0]["singular"] is True and lines[0]["passed"] is False
    assert lines[1]["passed"] is True


def test_sieve_k_file(tmp_path, capsys):
    path = tmp_path / "k.txt"
    path.write_text("115/28\n301/396\n")
    code, lines = run_json(capsys, "sieve", "--subfamily", "4", "--k-file", str(path))
    assert code == 0
    assert [line["k"] for line in lines] == ["115/28", "301/396"]


def test_sieve_requires_one_k_source(capsys):
    code, lines = run_json(capsys, "sieve", "--subfamily", "1")
    assert code == 2


def test_height_command(capsys):
    code, lines = run_json(
        capsys, "height", "--A", "10334", "--B", "9150625", "--x", "625", "--y", "100000"
    )
    assert code == 0
    assert abs(lines[0]["height"] - 2.34275900093414) < 1e-3
    assert lines[0]["doublings"] == 8


def test_regulator_command(capsys):
    code, lines = run_json(capsys, "regulator", "--a", "10", "--point=-32,-864")
    assert code == 0
    assert lines[0]["regulator"] > 0
    assert lines[0]["independent"] is True
    assert lines[0]["points"] == 1


def test_verify_command(capsys):
    code, lines = run_json(capsys, "verify", "progressions")
    assert code == 0
    assert all(line["status"] in ("pass", "paper-discrepancy") for line in lines)
    assert all(set(line) == {"item", "status", "detail"} for line in lines)


def test_verify_deterministic_output(capsys):
    _, first = run_cli(capsys, "verify", "table3")
    _, second = run_cli(capsys, "verify", "table3")
    assert first == second


def test_digit_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("BQEC_DIGIT_CAP", "50")
    code, lines = run_json(
        capsys, "height", "--A", "10334", "--B", "9150625", "--x", "625", "--y", "100000"
    )
    assert code == 4
    assert lines[0]["error"] == "digit-cap-exceeded"


def test_jobs_flag_matches_serial(capsys):
    _, serial = run_cli(capsys, "search-quads", "--max-side", "20")
    _, parallel = run_cli(capsys, "search-quads", "--max-side", "20", "--jobs", "2")
    assert serial == parallel
