import json

from edgeprim import build_group, from_cycles
from edgeprim.cli import main
from edgeprim.fileio import read_graph, read_group, write_graph, write_group
from edgeprim.families import complete_graph, petersen


def run(argv):
    return main(argv)


def test_construct_hoffman_singleton(tmp_path, capsys):
    out = tmp_path / "hs.graph"
    assert run(["construct", "--family", "hoffman-singleton", "--out", str(out)]) == 0
    g = read_graph(out)
    assert g.n == 50 and g.num_edges == 175


def test_construct_complete(tmp_path):
    out = tmp_path / "k4.graph"
    assert run(["construct", "--family", "complete:4", "--out", str(out)]) == 0
    assert read_graph(out).num_edges == 6


def test_construct_unknown_family_lists_registry(tmp_path, capsys):
    rc = run(["construct", "--family", "mystery", "--out", str(tmp_path / "x.graph")])
    assert rc == 2
    err = capsys.readouterr().err
    assert "known families" in err and "hoffman-singleton" in err


def test_construct_coset_spec(tmp_path):
    s4 = build_group([from_cycles(4, [(0, 1)]), from_cycles(4, [(0, 1, 2, 3)])])
    write_group(s4, tmp_path / "s4.group")
    spec = {
        "group_file": "s4.group",
        "subgroup_generators": [[1, 0, 2, 3], [1, 2, 0, 3]],
        "connector": [0, 1, 3, 2],
    }
    (tmp_path / "spec.json").write_text(json.dumps(spec))
    out = tmp_path / "k4.graph"
    assert run(["construct", "--family", f"coset:{tmp_path / 'spec.json'}", "--out", str(out)]) == 0
    graph = read_graph(out)
    assert graph.n == 4 and graph.num_edges == 6
    companion = read_group(tmp_path / "k4.graph.group")
    assert companion.order == 24


def test_analyze_exit_codes(tmp_path, capsys):
    good = tmp_path / "k4.graph"
    write_graph(complete_graph(4), good)
    assert run(["analyze", "--graph", str(good), "--check", "s-degree"]) == 0
    out = capsys.readouterr().out
    assert "s_degree=2" in out

    bad = tmp_path / "pet.graph"
    write_graph(petersen(), bad)
    assert run(["analyze", "--graph", str(bad), "--check", "edge-primitive"]) == 1

    assert run(["analyze", "--graph", str(tmp_path / "nope.graph"), "--check", "s-degree"]) == 2

    broken = tmp_path / "broken.graph"
    broken.write_text("graph\nn 3\ne 0 0\n")
    assert run(["analyze", "--graph", str(broken), "--check", "s-degree"]) == 2

    assert run(["analyze", "--graph", str(good), "--check", "unknown-check"]) == 2


def test_analyze_json_deterministic(tmp_path, capsys):
    path = tmp_path / "hw.graph"
    assert run(["construct", "--family", "heawood", "--out", str(path)]) == 0
    capsys.readouterr()
    assert run(["analyze", "--graph", str(path), "--check", "edge-primitive,s-degree", "--json"]) == 0
    first = capsys.readouterr().out
    assert run(["analyze", "--graph", str(path), "--check", "edge-primitive,s-degree", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert [c["check_name"] for c in payload] == ["edge-primitive", "s-degree"]
    assert payload[0]["verdict"] == "pass"
    assert payload[0]["inputs"]["graph_sha256"]


def test_analyze_with_group_file(tmp_path, capsys):
    from edgeprim import psl2

    graph_path = tmp_path / "k14.graph"
    write_graph(complete_graph(14), graph_path)
    group_path = tmp_path / "psl213.group"
    write_group(psl2(13), group_path)
    rc = run([
        "analyze", "--graph", str(graph_path), "--group", str(group_path),
        "--check", "s-degree,prime-valency", "--json",
    ])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    by_name = {c["check_name"]: c for c in payload}
    assert by_name["s-degree"]["evidence"]["s_degree"] == 1
    assert by_name["prime-valency"]["verdict"] == "pass"


def test_analyze_certificate_directory(tmp_path):
    path = tmp_path / "k4.graph"
    write_graph(complete_graph(4), path)
    out_dir = tmp_path / "certs"
    assert run(["analyze", "--graph", str(path), "--check", "s-degree", "--out", str(out_dir)]) == 0
    data = json.loads((out_dir / "s-degree.json").read_text())
    assert data["verdict"] == "pass"
    assert data["config"]["schema_version"] == 1


def test_lemmas_small_suite(tmp_path, capsys):
    rc = run([
        "lemmas", "--suite", "affine", "--fixture-dir", str(tmp_path / "fx"),
    ])
    assert rc == 0
    out = capsys.readouterr().out
    assert "agl1-9" in out and "pass" in out


def test_lemmas_unknown_suite(tmp_path, capsys):
    assert run(["lemmas", "--suite", "bogus", "--fixture-dir", str(tmp_path)]) == 2


def test_bad_config_values_exit_usage(tmp_path):
    path = tmp_path / "k4.graph"
    write_graph(complete_graph(4), path)
    assert run(["analyze", "--graph", str(path), "--check", "s-degree", "--cutoff", "10"]) == 2
    assert run(["analyze", "--graph", str(path), "--check", "s-degree", "--s-cap", "9"]) == 2


def test_construct_documented_coset_example(tmp_path):
    from pathlib import Path

    spec = Path(__file__).resolve().parent.parent / "docs" / "examples" / "k5-coset.json"
    out = tmp_path / "k5.graph"
    assert run(["construct", "--family", f"coset:{spec}", "--out", str(out)]) == 0
    graph = read_graph(out)
    assert graph.n == 5 and graph.num_edges == 10
    assert read_group(tmp_path / "k5.graph.group").order == 60


def test_analyze_hoffman_singleton_three_checks(tmp_path, capsys):
    graph_path = tmp_path / "hs.graph"
    assert run(["construct", "--family", "hoffman-singleton", "--out", str(graph_path)]) == 0
    capsys.readouterr()
    rc = run([
        "analyze", "--graph", str(graph_path),
        "--check", "edge-primitive,s-degree,main-theorem", "--json",
    ])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    by_name = {c["check_name"]: c for c in payload}
    assert by_name["edge-primitive"]["verdict"] == "pass"
    assert by_name["s-degree"]["evidence"]["s_degree"] == 3
    assert by_name["main-theorem"]["verdict"] == "pass"


def test_lemmas_all_suite_has_zero_failures(tmp_path, capsys):
    rc = run(["lemmas", "--suite", "all", "--fixture-dir", str(tmp_path / "fx")])
    assert rc == 0
    out = capsys.readouterr().out
    assert "fail" not in out.split("summary:")[1]


def test_group_utility(tmp_path, capsys):
    group_path = tmp_path / "d12.group"
    d12 = build_group([from_cycles(6, [(0, 1, 2, 3, 4, 5)]), from_cycles(6, [(1, 5), (2, 4)])])
    write_group(d12, group_path)
    assert run(["group", "--group", str(group_path), "--orbits", "--blocks"]) == 0
    out = capsys.readouterr().out
    assert "order: 12" in out
    assert "orbit: [0, 1, 2, 3, 4, 5]" in out
    assert "blocks: size" in out
