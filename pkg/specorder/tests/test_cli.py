"""
Tests for the command line interface.
"""

from pathlib import Path

import jsonschema
import orjson
import pytest

from specorder.cli import main, parse_frobenius, parse_indices
from specorder.core.exceptions import ConfigurationError
from specorder.schemas.poset import PosetDocument

GOLDEN = Path(__file__).parent / "golden"
SHIPPED_SCHEMA = Path(__file__).parents[1] / "schemas" / "poset.schema.json"


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# =============================================================================
# Argument helpers
# =============================================================================


def test_parse_indices():
    assert parse_indices("1,3") == [1, 3]
    assert parse_indices("2 1") == [2, 1]
    assert parse_indices("") == []
    assert parse_indices(None) is None
    with pytest.raises(ConfigurationError):
        parse_indices("1,x")


def test_parse_frobenius():
    assert parse_frobenius("id") is None
    assert parse_frobenius(None) is None
    assert parse_frobenius("3,2,1") == [3, 2, 1]


# =============================================================================
# quotient
# =============================================================================


def test_quotient_text(capsys):
    code, out, _ = run(capsys, "quotient", "--family", "A", "--rank", "2", "--j", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# A2")
    assert len(lines) == 4


def test_quotient_json(capsys):
    code, out, _ = run(
        capsys, "quotient", "--rank", "2", "--j", "1", "--k", "2", "--side", "double", "--format", "json"
    )
    assert code == 0
    payload = orjson.loads(out)
    assert payload["count"] == 2
    assert [row["word"] for row in payload["rows"]] == [[], [2, 1]]


@pytest.mark.parametrize("j", ["1,x", "3", "0"])
def test_invalid_indices_exit_with_usage(capsys, j):
    code, out, err = run(capsys, "quotient", "--rank", "2", "--j", j)
    assert code == 2
    assert out == ""
    assert orjson.loads(err)["error_code"] == "CONFIGURATION_ERROR"


def test_invalid_frobenius(capsys):
    code, _, err = run(capsys, "info", "--rank", "3", "--frobenius", "2,1,3")
    assert code == 2
    assert orjson.loads(err)["error_code"] == "NOT_AN_AUTOMORPHISM"


def test_bound_exceeded(capsys):
    code, _, err = run(capsys, "quotient", "--rank", "3", "--max-order", "10")
    assert code == 2
    assert orjson.loads(err)["error_code"] == "BOUND_EXCEEDED"


# =============================================================================
# poset
# =============================================================================


def test_poset_eo_json(capsys):
    code, out, _ = run(capsys, "poset", "--eo", "2")
    assert code == 0
    payload = orjson.loads(out)
    assert [node["eps"] for node in payload["nodes"]] == ["00", "01", "10", "11"]
    assert [node["length"] for node in payload["nodes"]] == [0, 1, 2, 3]
    assert payload["covers"] == [[0, 1], [1, 2], [2, 3]]
    assert payload["leq"][0] == [True, True, True, True]


def test_poset_no_matrix(capsys):
    code, out, _ = run(capsys, "poset", "--family", "C", "--rank", "2", "--j", "1", "--no-matrix")
    assert code == 0
    payload = orjson.loads(out)
    assert "leq" not in payload
    assert [node["word"] for node in payload["nodes"]] == [[], [2], [2, 1], [2, 1, 2]]


def test_poset_dot(capsys):
    code, out, _ = run(capsys, "poset", "--eo", "2", "--format", "dot")
    assert code == 0
    assert 'label="00 / 0"' in out
    assert "1 -> 0" in out


def test_poset_csv(capsys):
    code, out, _ = run(capsys, "poset", "--family", "A", "--rank", "2", "--j", "", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "id,0,1,2,3,4,5"


def test_poset_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "poset", "--family", "A", "--rank", "3", "--j", "1,3", "--frobenius", "3,2,1")
    _, second, _ = run(capsys, "poset", "--family", "A", "--rank", "3", "--j", "1,3", "--frobenius", "3,2,1")
    assert first == second
    assert orjson.loads(first)["frobenius"] == [3, 2, 1]


@pytest.mark.golden
@pytest.mark.parametrize("g", [1, 2, 3])
def test_eo_golden(capsys, g):
    path = GOLDEN / f"eo_g{g}.json"
    if not path.exists():
        pytest.skip(f"{path.name} not generated; run scripts/regenerate-golden.sh")
    code, out, _ = run(capsys, "poset", "--eo", str(g))
    assert code == 0
    assert out == path.read_text(encoding="utf-8")


# =============================================================================
# verify, schema, info
# =============================================================================


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "bruhat", "--family", "A", "--rank", "2")
    assert code == 0
    report = orjson.loads(out)
    assert report["passed"] is True
    assert report["checked"]["pairs"] == 36


def test_verify_eo(capsys):
    code, out, _ = run(capsys, "verify", "eo", "--g", "2")
    assert code == 0
    assert orjson.loads(out)["rank"] == 2


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2
    assert orjson.loads(err)["error_code"] == "UNKNOWN_SUITE"


def test_schema(capsys):
    code, out, _ = run(capsys, "schema")
    assert code == 0
    schema = orjson.loads(out)
    assert schema["title"] == "PosetDocument"
    assert "nodes" in schema["properties"]


def test_shipped_schema_is_current(capsys):
    shipped = orjson.loads(SHIPPED_SCHEMA.read_bytes())
    assert shipped == PosetDocument.model_json_schema()
    _, out, _ = run(capsys, "schema")
    assert orjson.loads(out) == shipped


@pytest.mark.parametrize(
    "argv",
    [
        ("poset", "--eo", "1"),
        ("poset", "--eo", "3"),
        ("poset", "--eo", "2", "--no-matrix"),
        ("poset", "--family", "A", "--rank", "3", "--j", "1,3", "--frobenius", "3,2,1"),
        ("poset", "--family", "C", "--rank", "2", "--j", ""),
    ],
)
def test_poset_output_validates_against_shipped_schema(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    jsonschema.validate(instance=orjson.loads(out), schema=orjson.loads(SHIPPED_SCHEMA.read_bytes()))


def test_poset_eo_genus_one_document(capsys):
    code, out, _ = run(capsys, "poset", "--eo", "1")
    assert code == 0
    assert orjson.loads(out) == {
        "family": "C",
        "rank": 1,
        "j": [],
        "frobenius": "id",
        "nodes": [
            {"id": 0, "word": [], "eps": "0", "length": 0},
            {"id": 1, "word": [1], "eps": "1", "length": 1},
        ],
        "leq": [[True, True], [False, True]],
        "covers": [[0, 1]],
    }


@pytest.mark.parametrize("argv", [("poset", "--eo", "0"), ("verify", "eo", "--g", "0")])
def test_zero_genus_is_a_usage_error(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert orjson.loads(err)["error_code"] == "CONFIGURATION_ERROR"


def test_info_text(capsys):
    code, out, _ = run(capsys, "info", "--family", "C", "--rank", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["system", "C3"]
    assert lines[1].split() == ["|W|", "48"]
    assert lines[2].split() == ["|Phi+|", "9"]


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "--family", "D", "--rank", "4", "--format", "json")
    assert code == 0
    payload = orjson.loads(out)
    assert payload["order"] == 192
    assert payload["frobenius"] == [1, 2, 3, 4]


def test_no_command(capsys):
    assert main([]) == 2


def test_argparse_errors_exit_with_usage(capsys):
    assert main(["quotient", "--side", "middle"]) == 2
    assert main(["--help"]) == 0
