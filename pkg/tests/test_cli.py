from __future__ import annotations

import json
import subprocess
import sys

from bicolim.cli import default_corpus, main, verify_suite

CORPUS = default_corpus()


def run_cli(*argv, capsys):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fixture(name: str) -> str:
    return str(CORPUS / name)


def test_check_bifiltered_positive(capsys):
    code, out, _ = run_cli("check", "bifiltered", fixture("poset_top.twocat.json"), capsys=capsys)
    assert code == 0
    assert "positive" in out


def test_check_bifiltered_negative_with_counterexample(capsys):
    code, out, _ = run_cli("check", "bifiltered", fixture("discrete2.twocat.json"), capsys=capsys)
    assert code == 1
    assert "span" in out


def test_check_sigma_filtered_with_named_class(capsys):
    code, out, _ = run_cli(
        "check", "sigma-filtered", fixture("laxtriangle.twocat.json"), "--sigma", "lax", capsys=capsys
    )
    assert code == 0


def test_check_cofinal(capsys):
    code, _, _ = run_cli("check", "cofinal", fixture("chain_into_top.map.json"), capsys=capsys)
    assert code == 0
    code, _, _ = run_cli("check", "cofinal", fixture("point_into_top.map.json"), capsys=capsys)
    assert code == 1


def test_missing_fixture_exits_two(capsys):
    code, _, err = run_cli("flat", "check", fixture("missing.json"), capsys=capsys)
    assert code == 2
    assert "error" in err


def test_malformed_fixture_exits_two(tmp_path, capsys):
    bad = tmp_path / "broken.json"
    bad.write_text('{"kind": "fincat", "name": "x", "objects": ["a"]}')
    code, _, err = run_cli("check", "bifiltered", str(bad), capsys=capsys)
    assert code == 2


def test_machine_format_is_json(capsys):
    code, out, _ = run_cli(
        "check", "bifiltered", fixture("poset_top.twocat.json"), "--format", "machine", capsys=capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["outcome"] is True
    assert payload["witnesses"]


def test_colimit_command_with_emit(tmp_path, capsys):
    out_path = tmp_path / "colim.json"
    code, out, _ = run_cli(
        "colimit", fixture("const_arrow.diagram.json"), "--emit", str(out_path), capsys=capsys
    )
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["kind"] == "fincat"
    assert set(doc["cocone"]) == {"a", "b", "top"}
    # the emitted document is itself a valid category fixture
    from bicolim.fixtures import load_fixture

    emitted = load_fixture(out_path)
    assert len(emitted.category.objects) == 6


def test_sigma_colimit_command(capsys):
    code, out, _ = run_cli(
        "colimit", fixture("lax_fill.diagram.json"), "--sigma", "lax", capsys=capsys
    )
    assert code == 0


def test_bilim_commands(tmp_path, capsys):
    code, _, _ = run_cli(
        "bilim", "product", fixture("probe_point.fincat.json"), fixture("probe_arrow.fincat.json"),
        capsys=capsys,
    )
    assert code == 0
    code, _, _ = run_cli("bilim", "cotensor", fixture("probe_arrow.fincat.json"), capsys=capsys)
    assert code == 0
    code, _, _ = run_cli("bilim", "equalizer", fixture("funcpair_iso.functor_pair.json"), capsys=capsys)
    assert code == 0
    code, _, _ = run_cli("bilim", "split", fixture("idem_identity.idempotent.json"), capsys=capsys)
    assert code == 0
    code, _, _ = run_cli("bilim", "pseudolimit", fixture("const_arrow.diagram.json"), capsys=capsys)
    assert code == 0


def test_flat_commands(tmp_path, capsys):
    code, _, _ = run_cli("flat", "check", fixture("repr_poset_bottom_bot.diagram.json"), capsys=capsys)
    assert code == 0
    code, _, _ = run_cli("flat", "check", fixture("nonflat_empty.diagram.json"), capsys=capsys)
    assert code == 1
    report = tmp_path / "rep.json"
    code, _, _ = run_cli(
        "flat", "decompose", fixture("repr_poset_bottom_bot.diagram.json"),
        "--report", str(report), capsys=capsys,
    )
    assert code == 0
    assert json.loads(report.read_text())["ok"] is True


def test_compact_command(capsys):
    code, _, _ = run_cli(
        "compact", "check", fixture("probe_point.fincat.json"), fixture("const_arrow.diagram.json"),
        capsys=capsys,
    )
    assert code == 0


def test_lex_commands(capsys):
    code, _, _ = run_cli("lex", "check", fixture("probe_point.fincat.json"), capsys=capsys)
    assert code == 0
    code, _, _ = run_cli("lex", "verify-colimit", fixture("lex_chain.diagram.json"), capsys=capsys)
    assert code == 0


def test_verify_empty_corpus_warns_and_passes(tmp_path, capsys):
    code, out, err = run_cli("verify", str(tmp_path), capsys=capsys)
    assert code == 0
    assert "empty" in err


def test_verify_missing_corpus_exits_two(tmp_path, capsys):
    code, _, err = run_cli("verify", str(tmp_path / "nope"), capsys=capsys)
    assert code == 2


def test_verify_rejects_invalid_fixture(tmp_path, capsys):
    (tmp_path / "bad.json").write_text(
        json.dumps(
            {
                "kind": "fincat",
                "name": "bad",
                "objects": ["x"],
                "morphisms": [
                    {"name": "id", "dom": "x", "cod": "x"},
                    {"name": "e", "dom": "x", "cod": "x"},
                ],
                "identities": {"x": "id"},
                # (e, e) composite missing: non-total table
                "composition": [["id", "id", "id"], ["id", "e", "e"], ["e", "id", "e"]],
            }
        )
    )
    code, _, err = run_cli("verify", str(tmp_path), capsys=capsys)
    assert code == 2
    assert "composition not total" in err


def test_verify_rejects_non_associative_injection(tmp_path, capsys):
    (tmp_path / "nonassoc.json").write_text(
        json.dumps(
            {
                "kind": "fincat",
                "name": "nonassoc",
                "objects": ["x"],
                "morphisms": [
                    {"name": "id", "dom": "x", "cod": "x"},
                    {"name": "e", "dom": "x", "cod": "x"},
                    {"name": "w", "dom": "x", "cod": "x"},
                ],
                "identities": {"x": "id"},
                "composition": [
                    ["id", "id", "id"],
                    ["id", "e", "e"],
                    ["e", "id", "e"],
                    ["id", "w", "w"],
                    ["w", "id", "w"],
                    ["e", "e", "w"],
                    ["e", "w", "w"],
                    ["w", "e", "e"],
                    ["w", "w", "w"],
                ],
            }
        )
    )
    code, _, err = run_cli("verify", str(tmp_path), capsys=capsys)
    assert code == 2
    assert "associativity" in err


def test_verify_suite_report_shape():
    report = verify_suite(CORPUS)
    assert report["ok"] is True
    assert report["fixture_count"] >= 12
    for name, slot in report["lemmas"].items():
        assert slot["fail"] == 0, (name, slot)
    # every corpus file is hashed into the report
    assert set(report["corpus"]) == {p.name for p in CORPUS.glob("*.json")}


def test_verify_determinism_across_seed_orders():
    first = json.dumps(verify_suite(CORPUS, seed_order=0), sort_keys=True)
    second = json.dumps(verify_suite(CORPUS, seed_order=7), sort_keys=True)
    assert first == second


def test_negative_verdict_replays_identically(capsys):
    # replaying a negative command reproduces its counterexample verbatim
    first = run_cli(
        "check", "bifiltered", fixture("discrete2.twocat.json"), "--format", "machine",
        capsys=capsys,
    )
    second = run_cli(
        "check", "bifiltered", fixture("discrete2.twocat.json"), "--format", "machine",
        capsys=capsys,
    )
    assert first[0] == second[0] == 1
    assert json.loads(first[1]) == json.loads(second[1])
    assert json.loads(first[1])["counterexample"]["condition"] == "span"


def test_console_entrypoint_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "bicolim.cli", "check", "bifiltered", fixture("terminal.twocat.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
