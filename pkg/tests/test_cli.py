import json

import pytest

from coexpy.cli import RunManifest, build_parser, main, resolve_hypergraphon
from coexpy.errors import InputError
from coexpy.hypergraph import complete_graph, parse_graph, read_graph, serialize_graph, serialize_graphs
from coexpy.hypergraphon import StepHypergraphon

K4_TEXT = "3 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"

PAIR_TABLE = {"k": 3, "lengths": ["1/2", "1/2"],
             "table": [{"assign": {"1": a, "2": b, "3": c, "12": 0, "13": 0, "23": 0}, "value": "1"}
                       for a in range(2) for b in range(2) for c in range(2)]}


@pytest.fixture
def files(tmp_path):
    paths = {"k4": tmp_path / "k4.txt", "k5": tmp_path / "k5.txt", "edge": tmp_path / "edge.txt",
             "host": tmp_path / "host.txt", "graphs": tmp_path / "graphs.txt", "pair": tmp_path / "pair.json",
             "skew": tmp_path / "skew.json"}
    paths["k4"].write_text(K4_TEXT)
    paths["k5"].write_text(serialize_graph(complete_graph(5, 3)))
    paths["edge"].write_text("3 3\n0 1 2\n")
    paths["host"].write_text("3 4\n0 1 2\n")
    paths["graphs"].write_text(serialize_graphs([complete_graph(5, 3), parse_graph("3 3\n0 1 2\n")]))
    paths["pair"].write_text(json.dumps(PAIR_TABLE))
    paths["skew"].write_text(json.dumps({"k": 2, "lengths": ["1/2", "1/2"],
                                         "table": [{"assign": {"1": 0, "2": 1}, "value": "1"}]}))
    return {key: str(path) for key, path in paths.items()}


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def body(out):
    return [line for line in out.splitlines() if not line.startswith("#")]


def test_delta(capsys, files):
    code, out = run(capsys, ["delta", "--graph", files["k5"], "--l", "2", "--mode", "positive"])
    assert code == 0
    assert out.startswith("# coexpy ")
    assert body(out) == ["3"]
    code, out = run(capsys, ["delta", "--graph", files["host"], "--l", "2", "--mode", "min"])
    assert body(out) == ["0"]


def test_delta_rejects_large_l(capsys, files):
    assert main(["delta", "--graph", files["k5"], "--l", "5", "--mode", "positive"]) == 1
    assert "error" in capsys.readouterr().err


def test_usage_errors(files):
    with pytest.raises(SystemExit) as err:
        main(["delta", "--graph", files["k5"], "--mode", "positive"])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["transmogrify"])
    assert err.value.code == 1


def test_missing_file(capsys, tmp_path):
    assert main(["delta", "--graph", str(tmp_path / "absent.txt"), "--l", "2", "--mode", "positive"]) == 1


def test_density(capsys, files):
    code, out = run(capsys, ["density", "--f", files["edge"], "--g", files["host"]])
    assert code == 0
    assert body(out) == ["3/32 0.09375"]
    code, out = run(capsys, ["density", "--f", files["edge"], "--hypergraphon", "builtin:pair-coordinate"])
    assert body(out) == ["1/8 0.125"]
    code, out = run(capsys, ["density", "--f", files["edge"], "--hypergraphon", files["pair"]])
    assert body(out) == ["1/8 0.125"]


def test_solve(capsys, files, tmp_path):
    out_dir = tmp_path / "witnesses"
    code, out = run(capsys, ["solve", "--n", "4", "--k", "3", "--l", "2", "--mode", "positive",
                             "--family", files["k4"], "--witnesses", str(out_dir)])
    assert code == 0
    record = json.loads(out)
    assert record["value"] == 1
    assert record["exact"] is True
    assert record["witnesses"] == 3
    assert record["manifest"]["subcommand"] == "solve"
    assert files["k4"] in record["manifest"]["inputs"]
    written = sorted(out_dir.iterdir())
    assert [path.name for path in written] == ["witness_000.txt", "witness_001.txt", "witness_002.txt"]
    assert all(read_graph(path).n == 4 for path in written)
    assert written[0].read_text().startswith("# coexpy ")


def test_solve_brute_agrees(capsys, files):
    argv = ["solve", "--n", "5", "--k", "3", "--l", "2", "--mode", "min", "--family", files["k4"]]
    _, out = run(capsys, argv)
    _, brute = run(capsys, argv + ["--brute"])
    assert json.loads(out)["value"] == json.loads(brute)["value"]


def test_solve_budget_exhausted(capsys, files):
    code, out = run(capsys, ["solve", "--n", "6", "--k", "3", "--l", "2", "--mode", "positive",
                             "--family", files["k4"], "--budget-nodes", "1"])
    assert code == 2
    assert json.loads(out)["exact"] is False


def test_solve_output_ignores_jobs(capsys, files):
    argv = ["solve", "--n", "5", "--k", "3", "--l", "1", "--mode", "positive", "--family", files["k4"]]
    _, serial = run(capsys, argv)
    _, parallel = run(capsys, ["--jobs", "2"] + argv)
    assert serial == parallel


def test_solve_cache(capsys, files, tmp_path, monkeypatch):
    monkeypatch.setenv("COEXPY_CACHE_DIR", str(tmp_path / "cache"))
    argv = ["solve", "--n", "5", "--k", "3", "--l", "2", "--mode", "positive", "--family", files["k4"], "--cache"]
    _, first = run(capsys, argv)
    assert list((tmp_path / "cache" / "solve").glob("*.json"))
    _, second = run(capsys, argv)
    assert first == second


def test_ratios(capsys, files):
    code, out = run(capsys, ["ratios", "--k", "3", "--l", "2", "--mode", "positive", "--family", files["k4"],
                             "--n-from", "4", "--n-to", "5"])
    assert code == 0
    lines = body(out)
    assert lines[0] == "n,value,ratio,ratio_decimal,exact"
    assert lines[1] == "4,1,1/2,0.5,True"
    assert len(lines) == 3
    assert main(["ratios", "--k", "3", "--l", "2", "--mode", "positive", "--n-from", "5", "--n-to", "4"]) == 1


def test_sample(capsys):
    code, out = run(capsys, ["sample", "--n", "8", "--seed", "1", "--hypergraphon", "const:1", "--k", "3"])
    assert code == 0
    assert parse_graph(out) == complete_graph(8, 3)
    code, out = run(capsys, ["sample", "--n", "8", "--seed", "1", "--trials", "3", "--l", "2",
                             "--hypergraphon", "const:1", "--k", "3"])
    lines = body(out)
    assert lines[0] == "trial,edges,edge_density,pos_ratio,min_ratio"
    assert lines[1:] == ["{},56,1,1,1".format(t) for t in range(3)]
    assert main(["sample", "--n", "8", "--seed", "1", "--hypergraphon", "const:1"]) == 1


def test_containment(capsys, files):
    code, out = run(capsys, ["containment", "--f", files["edge"], "--hypergraphon", "builtin:pair-coordinate",
                             "--trials", "2000", "--seed", "4"])
    record = json.loads(out)
    assert code == 0
    assert record["exact"] == "1/8"
    assert record["trials"] == 2000
    assert 0 <= record["estimate"] <= 1


def test_converge(capsys, files):
    code, out = run(capsys, ["converge", "--hypergraphon", "const:1", "--k", "3", "--l", "2", "--n", "6", "8",
                             "--trials", "2", "--seed", "1", "--f", files["edge"]])
    assert code == 0
    lines = body(out)
    assert lines[0] == "kind,n,trial,stat,pos_ratio,min_ratio,t_F0"
    assert lines[1] == "reference,,,,1,1,1"
    assert len(lines) == 1 + 1 + 2 * (2 + 3)


def test_kk_check(capsys, files):
    code, out = run(capsys, ["kk-check", "--graphs", files["graphs"], "--l", "2"])
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert "manifest" in lines[0]
    assert [line["e"] for line in lines[1:]] == [10, 1]
    assert all(line["holds"] for line in lines[1:])


def test_penalty(capsys):
    code, out = run(capsys, ["penalty", "--eps", "1/5", "--delta", "1/2", "--beta", "1/10"])
    record = json.loads(out)
    assert code == 0
    assert record["properties"]["ok"] is True
    assert record["sup_error"] <= .1
    code, out = run(capsys, ["penalty", "--eps", "1/5", "--delta", "1/2", "--beta", "1/10",
                             "--degree", "4", "--coefficients"])
    record = json.loads(out)
    assert record["degree"] == 4
    assert len(record["coefficients"]) == 5
    assert main(["penalty", "--eps", "1/5", "--delta", "1/3", "--beta", "1/10"]) == 1


def test_hypergraphon_validate(capsys, files):
    code, out = run(capsys, ["hypergraphon-validate", "--hypergraphon", files["pair"]])
    record = json.loads(out)
    assert code == 0
    assert record["ok"] is True
    assert record["edge_density"] == "1/8"
    assert record["min_positive_degree"]["2"] == "1/4"
    assert record["min_degree"]["2"] == "0"
    assert main(["hypergraphon-validate", "--hypergraphon", files["skew"]]) == 1
    capsys.readouterr()
    code, out = run(capsys, ["hypergraphon-validate", "--hypergraphon", files["skew"], "--symmetrize"])
    record = json.loads(out)
    assert record["ok"] is True
    assert "hypergraphon" in record


def test_manifest_and_resolution():
    args = build_parser().parse_args(["--jobs", "3", "sample", "--n", "5", "--seed", "9", "--hypergraphon", "const:1/2",
                                      "--k", "3"])
    manifest = RunManifest.from_args(args)
    assert manifest.seed == 9
    assert "jobs" not in manifest.params
    assert manifest.params["n"] == 5
    assert isinstance(resolve_hypergraphon("const:1/2", k=3), StepHypergraphon)
    with pytest.raises(InputError):
        resolve_hypergraphon("const:3/2", k=3)
    with pytest.raises(InputError):
        resolve_hypergraphon("const:1/2")
