"""End-to-end CLI tests: golden outputs, exit codes, and format stability."""
from __future__ import annotations

import json
from pathlib import Path

import pytest

from foldcheck.cli import main

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
DATA = HERE / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# golden outputs (byte-for-byte)


GOLDEN_CASES = [
    ("decide_rp4_r4.json", ["decide", "RP4", "--target", "R4", "--format", "json"]),
    ("decide_3rp4_r3_tame.txt", ["decide", "3#RP4", "--target", "R3", "--tame"]),
    ("thom_rp4_x_s1.txt", ["thom", "RP4 x S1"]),
    ("invariants_rp4.txt", ["invariants", "RP4"]),
    ("span_k3.txt", ["span", "K3"]),
    ("catalog.txt", ["catalog"]),
]


@pytest.mark.parametrize("filename,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_stdout(capsys, filename, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0
    assert err == ""
    assert out == (GOLDEN / filename).read_text()


def test_golden_stderr_for_sum_mismatch(capsys):
    code, out, err = run(capsys, "decide", "RP4 # S3", "--target", "R3")
    assert code == 2
    assert out == ""
    assert err == (GOLDEN / "decide_sum_mismatch.stderr.txt").read_text()


def test_json_output_is_deterministic(capsys):
    first = run(capsys, "decide", "RP4 x S1", "--target", "R4", "--format", "json")
    second = run(capsys, "decide", "RP4 x S1", "--target", "R4", "--format", "json")
    assert first == second
    assert first[0] == 0


# ---------------------------------------------------------------------------
# exit codes


def test_unknown_verdict_is_a_success(capsys):
    code, out, err = run(capsys, "decide", "K3", "--target", "R3")
    assert code == 0
    assert "UNKNOWN" in out


def test_target_larger_than_dim_is_a_usage_error(capsys):
    code, out, err = run(capsys, "decide", "RP4", "--target", "R7")
    assert code == 1
    assert "target dimension 7 exceeds dim M = 4" in err


def test_missing_target_is_a_usage_error(capsys):
    code, out, err = run(capsys, "decide", "RP4")
    assert code == 1
    assert "required" in err


def test_unrecognized_target_is_a_usage_error(capsys):
    code, out, err = run(capsys, "decide", "RP4", "--target", "moebius")
    assert code == 1
    assert "unrecognized target" in err


def test_expression_error_reports_position(capsys):
    code, out, err = run(capsys, "decide", "RP4 @", "--target", "R3")
    assert code == 2
    assert "at position 4" in err


def test_invalid_document_is_a_document_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, "invariants", str(bad))
    assert code == 2
    assert "invalid JSON document" in err


def test_inconsistent_document_is_rejected(capsys):
    code, out, err = run(capsys, "invariants", str(DATA / "bad_euler.json"))
    assert code == 2
    assert "Euler parity" in err


# ---------------------------------------------------------------------------
# documents and descriptors


def test_document_manifold_matches_expression(capsys):
    from_file = run(capsys, "invariants", str(DATA / "rp2.json"))
    from_expr = run(capsys, "invariants", "RP2")
    assert from_file == from_expr


def test_pullback_descriptor_matches_self_target(capsys):
    via_file = run(
        capsys, "decide", "CP2", "--target", f"pullback:{DATA / 'cp2_tangent.json'}"
    )
    via_self = run(capsys, "decide", "CP2", "--target", "self")
    assert via_file == via_self
    assert via_file[0] == 0
    assert "EXISTS" in via_file[1]


def test_descriptor_with_missing_fields_is_rejected(capsys, tmp_path):
    doc = tmp_path / "desc.json"
    doc.write_text(json.dumps({"rank": 4, "w": [], "p1": "zero"}))
    code, out, err = run(capsys, "decide", "CP2", "--target", f"pullback:{doc}")
    assert code == 2
    assert "missing fields ['orientable']" in err


# ---------------------------------------------------------------------------
# output formats and options


def test_sphere_target_label(capsys):
    code, out, err = run(
        capsys, "decide", "RP4", "--target", "sphere:4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["target"] == "S^4"
    assert payload["verdict"] == "not_exists"


def test_decide_json_fields(capsys):
    code, out, err = run(capsys, "decide", "K3", "--target", "R4", "--format", "json")
    payload = json.loads(out)
    assert set(payload) == {"manifold", "dim", "target", "tame", "verdict", "trace"}
    assert payload["trace"][0]["citation"] == "Cor 3.5(i)"
    assert set(payload["trace"][0]) == {"rule", "citation", "obstruction", "value"}


def test_explain_lists_invariants(capsys):
    code, out, err = run(capsys, "decide", "RP4", "--target", "R4", "--explain")
    assert code == 0
    assert "invariants consulted:" in out
    assert "  wu = 1 + a + a^2" in out


def test_invariants_json_parses(capsys):
    code, out, err = run(capsys, "invariants", "RP4 # RP4", "--format", "json")
    payload = json.loads(out)
    assert payload["name"] == "RP4 # RP4"
    assert payload["euler"] == 0
    assert payload["w"]["components"][4] == [0]
    assert payload["w"]["components"][1] == [1, 1]
    assert payload["p1"] == "zero"


def test_span_json_parses(capsys):
    code, out, err = run(capsys, "span", "S7", "--format", "json")
    payload = json.loads(out)
    assert (payload["lower"], payload["upper"]) == (7, 7)


def test_thom_json_parses(capsys):
    code, out, err = run(capsys, "thom", "K3", "--format", "json")
    payload = json.loads(out)
    names = [e["name"] for e in payload["entries"]]
    assert names == ["fold", "cusp", "A3", "A4", "Sigma^{2,0} mod 2", "Sigma^{2,0} integral"]
    integral = payload["entries"][-1]
    assert integral["value"] == "48"
    assert integral["vanishes"] is False


def test_catalog_json_parses(capsys):
    code, out, err = run(capsys, "catalog", "--format", "json")
    payload = json.loads(out)
    tokens = [a["token"] for a in payload["atoms"]]
    assert "K3" in tokens and "RP<n>" in tokens
    assert len(payload["operators"]) == 3


def test_thom_against_own_tangent_vanishes(capsys):
    code, out, err = run(capsys, "thom", "CP2", "--target", "self")
    assert code == 0
    assert "nonzero" not in out
