import json
import os

import pytest

from grmtrees.cli import main
from grmtrees.families import make_t_opt
from grmtrees.trees import format_edge_list, parse_edge_list


@pytest.fixture()
def star4(tmp_path):
    path = tmp_path / "star4.edges"
    path.write_text("0 1\n0 2\n0 3\n")
    return path


def test_index_single_lambda(star4, capsys):
    assert main(["index", "--tree", str(star4), "--lambda=-2"]) == 0
    assert capsys.readouterr().out == "-3\n"


def test_index_multiple_lambdas_text(star4, capsys):
    assert main(["index", "--tree", str(star4), "--lambda=-2", "--lambda", "1/2"]) == 0
    out = capsys.readouterr().out
    assert out == "-2\t-3\n1/2\t63/4\n"


def test_index_json(star4, capsys):
    assert main(["index", "--tree", str(star4), "--lambda", "0", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["m2"] == "9" and payload["values"][0]["grm"] == "9"


def test_index_rejects_float_lambda(star4, capsys):
    assert main(["index", "--tree", str(star4), "--lambda", "0.5"]) == 2


def test_family_emits_edge_list_and_sidecar(tmp_path, capsys):
    out = tmp_path / "fam"
    code = main(["family", "--kind", "TT1", "--k", "2", "--emit", "edgelist",
                 "--out", str(out)])
    assert code == 0
    files = sorted(p.name for p in out.iterdir())
    assert files == ["tt1_k2.census.json", "tt1_k2_000.edges"]
    tree = parse_edge_list((out / "tt1_k2_000.edges").read_text())
    assert tree.order == 9
    sidecar = json.loads((out / "tt1_k2.census.json").read_text())
    assert sidecar["members"][0]["grm_minus2"] == "-12"
    assert sidecar["predicted_census"]


def test_family_code_emission(capsys):
    assert main(["family", "--kind", "t3", "--k", "2", "--emit", "code"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(make_t_opt(3, 2))
    assert lines == sorted(lines)


def test_family_usage_errors(capsys):
    assert main(["family", "--kind", "nosuch", "--k", "2"]) == 2
    assert main(["family", "--kind", "t1"]) == 2  # k missing


def test_enumerate_codes(capsys):
    assert main(["enumerate", "--n", "5", "--emit", "code"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3 and lines == sorted(lines)


def test_enumerate_census_lines(capsys):
    assert main(["enumerate", "--n", "5", "--max-deg", "4", "--exact-deg",
                 "--emit", "census"]) == 0
    rows = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert len(rows) == 1 and rows[0]["vertex_counts"]["4"] == 1


def test_enumerate_edgelist_files(tmp_path, capsys):
    out = tmp_path / "trees"
    assert main(["enumerate", "--n", "4", "--emit", "edgelist", "--out", str(out)]) == 0
    files = sorted(out.iterdir())
    assert len(files) == 2
    for f in files:
        assert parse_edge_list(f.read_text()).order == 4


def test_enumerate_guard(capsys):
    assert main(["enumerate", "--n", "30", "--emit", "code"]) == 2
    assert "LimitExceeded" in capsys.readouterr().err
    assert main(["enumerate", "--n", "27", "--max-deg", "2", "--emit", "code",
                 "--guard", "27"]) == 0


def test_census_table(capsys):
    assert main(["census", "--delta", "4", "--n", "9"]) == 0
    out = capsys.readouterr().out
    assert "m14  6" in out and "GRM(-2)  -12" in out and "realizable  yes" in out


def test_census_json_unrealizable(capsys):
    assert main(["census", "--delta", "4", "--n", "9", "--m12", "2",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["realizable"] is False
    assert payload["entries"]["n2"] == "5/2"


def test_census_usage_error(capsys):
    assert main(["census", "--delta", "3", "--n", "9", "--m44", "1"]) == 2


def test_normalize_trace(tmp_path, capsys):
    tree_file = tmp_path / "t13.edges"
    tree_file.write_text(format_edge_list(make_t_opt(1, 3)[0]))
    assert main(["normalize", "--tree", str(tree_file)]) == 0
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert lines[-1]["final_order"] < 7
    assert all("transform" in row for row in lines[:-1])
    assert lines[-1]["total_delta"] == "-2"


def test_verify_cli_passing_range(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--theorem", "3.2", "--n-min", "7", "--n-max", "11",
                 "--format", "json", "--out", str(out), "--jobs", "1"])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["passed"] is True and len(payload["cells"]) == 5


def test_verify_cli_reports_the_family_gap(tmp_path):
    # six cells as requested; exit 1 because the n=12 equality family is
    # incomplete, which the harness is required to surface
    out = tmp_path / "report.json"
    code = main(["verify", "--theorem", "3.2", "--n-min", "7", "--n-max", "12",
                 "--format", "json", "--out", str(out), "--jobs", "1"])
    assert code == 1
    payload = json.loads(out.read_text())
    assert len(payload["cells"]) == 6
    bad = [c for c in payload["cells"] if not c["passed"]]
    assert [c["n"] for c in bad] == [12]
    assert bad[0]["unexpected_in_argmin"]


def test_verify_cli_byte_identical_runs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--theorem", "sec4", "--n-min", "5", "--n-max", "9",
            "--format", "json", "--jobs", "1"]
    main(args + ["--out", str(a)])
    main(args + ["--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_verify_cli_csv_and_md(tmp_path, capsys):
    assert main(["verify", "--theorem", "3.3", "--n-min", "7", "--n-max", "9",
                 "--format", "csv", "--jobs", "1"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("theorem,")
    assert main(["verify", "--theorem", "2.1", "--n-min", "6", "--n-max", "7",
                 "--lambda", "0", "--format", "md", "--jobs", "1"]) == 0
    assert "| 2.1 |" in capsys.readouterr().out


def test_verify_cli_timings_flag(tmp_path):
    out = tmp_path / "t.json"
    main(["verify", "--theorem", "3.2", "--n-min", "7", "--n-max", "8",
          "--format", "json", "--out", str(out), "--jobs", "1", "--timings"])
    assert "wall_ms" in out.read_text()


def test_out_dir_env_var(tmp_path, monkeypatch, star4, capsys):
    monkeypatch.setenv("GRMTREES_OUT", str(tmp_path))
    assert main(["index", "--tree", str(star4), "--lambda", "0",
                 "--out", "sub/val.txt"]) == 0
    assert (tmp_path / "sub" / "val.txt").read_text() == "9\n"


def test_bad_usage_exits_two(capsys):
    assert main(["verify"]) == 2
    assert main(["nosuchcommand"]) == 2
    assert main(["index", "--tree", "/nonexistent/file", "--lambda", "0"]) == 2
