"""CLI behaviour: exit codes, JSON envelopes, and witness replay."""

import json

from ordtop.cli import main
from tests.conftest import FIXTURES


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv, "--json")
    return code, json.loads(out)


def fx(name: str) -> str:
    return str(FIXTURES / name)


def test_validate_fixture_exits_zero(capsys):
    code, payload = run_json(capsys, "validate", fx("vee.json"))
    assert code == 0
    assert payload["ok"] and payload["result"]["round_trip"]
    assert payload["result"]["functions"] == ["g_a", "g_b", "g_c"]


def test_validate_rejects_missing_file(capsys):
    assert main(["validate", fx("nope.json")]) == 2


def test_topology_command_lists_opens(capsys):
    code, payload = run_json(capsys, "topology", fx("chain3.json"), "--topology", "upper")
    assert code == 0
    assert payload["result"]["opens"] == [[], ["c"], ["b", "c"], ["a", "b", "c"]]


def test_decide_rp_prints_family(capsys):
    code, payload = run_json(capsys, "decide-rp", fx("vee.json"), "--topology", "upper")
    assert code == 0
    family = payload["result"]["family"]
    assert family["g_a"] == {"a": "1", "b": "4", "c": "5"}
    assert family["g_b"] == {"a": "4", "b": "1", "c": "5"}
    assert family["g_c"] == {"a": "1", "b": "1", "c": "2"}


def test_decide_rp_obstruction_path(capsys, tmp_path):
    code, payload = run_json(
        capsys, "decide-rp", fx("chain3.json"), "--topology", "indiscrete"
    )
    assert code == 1
    assert payload["witness"]["detail"]["element"] == "a"
    # the witness instance is itself a valid document
    witness_file = tmp_path / "witness.json"
    witness_file.write_text(json.dumps(payload["witness"]["instance"]))
    assert main(["validate", str(witness_file)]) == 0


def test_check_lsc_witness_replay(capsys, tmp_path):
    code, payload = run_json(
        capsys, "check-lsc", fx("chain3.json"), "--topology", "indiscrete"
    )
    assert code == 1
    witness = payload["witness"]
    assert witness["detail"]["contour"] == ["a"]

    witness_file = tmp_path / "witness.json"
    witness_file.write_text(json.dumps(witness["instance"]))
    assert main(["validate", str(witness_file)]) == 0
    capsys.readouterr()
    # the embedded explicit topology reproduces the failure bit-for-bit
    code, payload2 = run_json(capsys, "check-lsc", str(witness_file))
    assert code == 1
    assert payload2["witness"]["detail"] == witness["detail"]


def test_check_lsc_passes_for_upper(capsys):
    code, payload = run_json(capsys, "check-lsc", fx("chain3.json"), "--topology", "upper")
    assert code == 0 and payload["result"]["semicontinuous"]


def test_represent_includes_constructions(capsys):
    code, payload = run_json(capsys, "represent", fx("vee.json"), "--topology", "upper")
    assert code == 0
    result = payload["result"]
    assert result["rp_utility"] == {"a": "1", "b": "1", "c": "2"}
    assert result["indicator_multiutility"]["u_a"] == {"a": "1", "b": "0", "c": "1"}
    assert result["lsc_multiutility"]["v_c"] == {"a": "0", "b": "0", "c": "0"}
    assert "rank_utility" not in result  # vee is not total


def test_represent_not_lsc_is_failure(capsys):
    code, payload = run_json(
        capsys, "represent", fx("chain3.json"), "--topology", "indiscrete"
    )
    assert code == 1
    assert payload["witness"]["detail"]["element"] == "a"


def test_topology_from_file_flag(capsys):
    # chain3.json carries an upper topology; apply it to itself via --topology FILE
    code, payload = run_json(
        capsys, "check-lsc", fx("chain3.json"), "--topology", fx("chain3.json")
    )
    assert code == 0


def test_theorems_command_small(capsys):
    code, payload = run_json(capsys, "theorems", "--all", "--max-size", "2")
    assert code == 0
    reports = {r["theorem"]: r for r in payload["result"]["reports"]}
    assert reports["topology-coincidence"]["violations"] == 0
    assert reports["chain-restriction"]["non_vacuous"] > 0


def test_mine_command(capsys):
    code, payload = run_json(capsys, "mine", "--seed", "3", "--trials", "25", "--max-size", "5")
    assert code == 0
    assert payload["result"]["trials"] == 25


def test_export_dot(capsys):
    code, out = run_cli(capsys, "export", fx("vee.json"))
    assert code == 0
    assert out.startswith("digraph preorder {")
    assert '"a" -> "c";' in out


def test_export_to_file(capsys, tmp_path):
    target = tmp_path / "vee.gv"
    code, _ = run_cli(capsys, "export", fx("vee.json"), "-o", str(target))
    assert code == 0
    assert target.read_text().startswith("digraph preorder {")


def test_text_output_mode(capsys):
    code, out = run_cli(capsys, "check-lsc", fx("chain3.json"), "--topology", "indiscrete")
    assert code == 1
    assert "witness instance" in out
