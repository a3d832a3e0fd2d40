import json
import random

import pytest

from graphcodes.analysis import analyze
from graphcodes.cli import main
from graphcodes.graphs import builtin_graph, format_graph_text, graph_to_selfdual_code
from graphcodes.gf2 import format_matrix_text
from graphcodes.published import LIFTS
from graphcodes.store import CodeStore, StoreEntry, StoreError

from conftest import random_selfdual_code


def _store_graph_entry(store, name="cube"):
    code = graph_to_selfdual_code(builtin_graph(name))
    report = analyze(code)
    entry = StoreEntry(name, {"kind": "graph", "graph": name}, code, report)
    store.save(entry)
    return entry


def test_store_round_trip(tmp_path):
    store = CodeStore(tmp_path / "st")
    saved = _store_graph_entry(store)
    loaded = store.load("cube")
    assert loaded.code.generator == saved.code.generator
    assert loaded.report == saved.report
    assert loaded.provenance == saved.provenance
    # re-analysis of the stored generator reproduces the stored report
    assert analyze(loaded.code) == loaded.report


def test_store_reanalysis_random_codes(tmp_path):
    store = CodeStore(tmp_path)
    rng = random.Random(13)
    for i in range(5):
        code = random_selfdual_code(rng, 12)
        entry = StoreEntry(f"rand{i}", {"kind": "test"}, code, analyze(code))
        store.save(entry)
    for name in store.names():
        loaded = store.load(name)
        assert analyze(loaded.code) == loaded.report


def test_store_rejects_bad_names(tmp_path):
    store = CodeStore(tmp_path)
    code = graph_to_selfdual_code(builtin_graph("cube"))
    with pytest.raises(StoreError):
        store.save(StoreEntry("../evil", {}, code, analyze(code)))


def test_store_missing_entry(tmp_path):
    with pytest.raises(StoreError):
        CodeStore(tmp_path).load("nope")


def test_cli_graph2code_stores_and_reports(tmp_path, capsys):
    rc = main(["--store", str(tmp_path), "graph2code", "cube"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "[8,4,4]" in out and "type II" in out
    assert CodeStore(tmp_path).has("cube")


def test_cli_graph2code_json(tmp_path, capsys):
    rc = main(["--store", str(tmp_path), "--json", "graph2code", "G1"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["report"]["d"] == 4
    assert payload["report"]["type"] == "II"
    assert payload["report"]["distribution"]["8"] == 198


def test_cli_graph2code_explicit_faces_match_default(tmp_path, capsys):
    main(["--store", str(tmp_path), "graph2code", "cube", "--name", "a"])
    main(["--store", str(tmp_path), "graph2code", "cube", "--faces", "5", "6", "--name", "b"])
    store = CodeStore(tmp_path)
    assert store.load("a").report == store.load("b").report


def test_cli_graph2code_rejects_same_color_pair(tmp_path, capsys):
    rc = main(["--store", str(tmp_path), "graph2code", "cube", "--faces", "1", "6"])
    assert rc == 1
    assert "color" in capsys.readouterr().err


def test_cli_graph2code_validation_failure(tmp_path, capsys):
    g = builtin_graph("cube")
    g.edges.discard(frozenset({1, 2}))
    bad = tmp_path / "bad.graph"
    bad.write_text(format_graph_text(g))
    rc = main(["--store", str(tmp_path), "graph2code", str(bad)])
    assert rc == 1
    assert "cubic" in capsys.readouterr().err


def test_cli_analyze_file(tmp_path, capsys):
    code = graph_to_selfdual_code(builtin_graph("G2"))
    path = tmp_path / "g2.txt"
    path.write_text(format_matrix_text(code.generator))
    rc = main(["--json", "analyze", str(path)])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["report"]["type"] == "I"
    assert payload["report"]["family"] == "none"


def test_cli_lift_errata_error_names_length(capsys):
    rc = main(["lift", "A2", LIFTS["L8"].hex, "--no-store"])
    assert rc == 1
    err = capsys.readouterr().err
    assert "37" in err and "repair" in err


def test_cli_extend_from_store(tmp_path, capsys):
    main(["--store", str(tmp_path), "graph2code", "G1"])
    capsys.readouterr()
    rc = main(["--store", str(tmp_path), "--json", "extend", "G1", "110^{13}1"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["report"]["n"] == 18
    assert payload["report"]["k"] == 9
    assert CodeStore(tmp_path).has("G1-ext")


def test_cli_extend_even_weight_rejected(tmp_path, capsys):
    main(["--store", str(tmp_path), "graph2code", "G1"])
    rc = main(["--store", str(tmp_path), "extend", "G1", "10^{14}1"])
    assert rc == 1
    assert "odd weight" in capsys.readouterr().err


def test_cli_extend_deterministic(tmp_path, capsys):
    main(["--store", str(tmp_path), "graph2code", "G1"])
    capsys.readouterr()
    runs = []
    for _ in range(2):
        main(["--store", str(tmp_path), "--json", "extend", "G1", "110^{13}1"])
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1]


def test_cli_unknown_store_base(tmp_path, capsys):
    rc = main(["--store", str(tmp_path), "extend", "missing", "101"])
    assert rc == 1
    assert "missing" in capsys.readouterr().err


def test_store_env_var_sets_default(tmp_path, monkeypatch):
    monkeypatch.setenv("GRAPHCODES_STORE", str(tmp_path / "envstore"))
    store = CodeStore()
    _store_graph_entry(store)
    assert (tmp_path / "envstore" / "cube.json").exists()


def _fake_reports(status):
    from graphcodes.repro import RowResult, TableReport

    return [TableReport("1", [RowResult("K1", status, {"family": "W64_1", "beta": 20, "d": 12})])]


def test_cli_reproduce_exit_codes(monkeypatch, capsys):
    import graphcodes.cli as cli

    monkeypatch.setattr(cli, "reproduce", lambda *a, **k: _fake_reports("match"))
    assert main(["reproduce", "1"]) == 0
    monkeypatch.setattr(cli, "reproduce", lambda *a, **k: _fake_reports("errata-flagged"))
    assert main(["reproduce", "1"]) == 0
    monkeypatch.setattr(cli, "reproduce", lambda *a, **k: _fake_reports("repaired"))
    assert main(["reproduce", "1"]) == 0
    monkeypatch.setattr(cli, "reproduce", lambda *a, **k: _fake_reports("mismatch"))
    assert main(["reproduce", "1"]) == 1
    capsys.readouterr()


@pytest.mark.slow
def test_cli_search_writes_discovery_records(tmp_path, capsys):
    out = tmp_path / "hits.jsonl"
    rc = main([
        "--threads", "2", "search", "A2",
        "--budget", "1", "--seed", "5", "--min-distance", "2", "--out", str(out),
    ])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 1
    rec = json.loads(lines[0])
    assert rec["base"] == "A2" and rec["seed"] == 5
    assert set(rec) == {"base", "hex", "seed", "family", "beta", "a12_pair", "timestamp"}
    assert len(rec["hex"]) == 36


def test_cli_reproduce_json_payload_shape(monkeypatch, capsys):
    import graphcodes.cli as cli

    monkeypatch.setattr(cli, "reproduce", lambda *a, **k: _fake_reports("match"))
    rc = main(["--json", "reproduce", "1"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    row = payload["tables"][0]["rows"][0]
    assert list(row) == ["name", "status", "expected", "measured", "note"]
    assert "seconds" not in row
