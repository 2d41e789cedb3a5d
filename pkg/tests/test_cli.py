"""Command-line interface: JSON reports, exit codes and determinism."""
import json

import pytest
from typer.testing import CliRunner

from sabsorb import __version__
from sabsorb.cli.main import app

runner = CliRunner()


def _json(*args):
    result = runner.invoke(app, [*args, "--format", "json"])
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def _entries(data):
    return {e["name"]: e for e in data["entries"]}


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_classify_with_witness():
    data = _json("classify", "--ring", "Z/12", "--ideal", "ideal()", "--mult", "mult(4)",
                 "--n", "1")
    entries = _entries(data)
    assert list(entries) == ["1-absorbing", "S-1-absorbing", "S-prime", "S-primary",
                             "strongly S-primary"]
    assert not entries["1-absorbing"]["verdict"]["holds"]
    assert entries["S-1-absorbing"]["verdict"]["witness_s"] == 4
    assert entries["S-1-absorbing"]["verdict"]["witnesses"] == [4]
    assert entries["strongly S-primary"]["value"] == "exponent 1"
    assert data["schema_version"] == "1.0"


def test_classify_counterexample():
    data = _json("classify", "--ring", "Z/12", "--ideal", "ideal()", "--mult", "mult(1)",
                 "--n", "2")
    verdict = _entries(data)["S-2-absorbing"]["verdict"]
    assert not verdict["holds"]
    assert verdict["counterexample"] == [2, 2, 3]


def test_classify_text_output():
    result = runner.invoke(app, ["classify", "--ring", "Z/2[x]/(x^3)", "--ideal", "ideal(x)",
                                 "--mult", "mult(1)"])
    assert result.exit_code == 0
    assert "S-prime" in result.stdout


def test_parse_error_exits_2():
    result = runner.invoke(app, ["classify", "--ring", "Z/", "--ideal", "ideal()",
                                 "--mult", "mult(1)"])
    assert result.exit_code == 2


def test_ideal_meeting_s_exits_2():
    result = runner.invoke(app, ["classify", "--ring", "Z/12", "--ideal", "ideal(2)",
                                 "--mult", "mult(4)"])
    assert result.exit_code == 2


def test_order_cap_exits_2():
    result = runner.invoke(app, ["omega", "--ring", "Z/300", "--ideal", "ideal()",
                                 "--mult", "mult(1)"])
    assert result.exit_code == 2


@pytest.mark.parametrize("ring", ["Z/2[x]/(x^30000)", "Z/2[x]/(x^3000000000)",
                                  "Z/" + "9" * 5000])
def test_oversized_rings_exit_2(ring):
    result = runner.invoke(app, ["omega", "--ring", ring, "--ideal", "ideal()",
                                 "--mult", "mult(1)"])
    assert result.exit_code == 2


def test_omega():
    data = _json("omega", "--ring", "Z/12", "--ideal", "ideal()", "--mult", "mult(1)")
    value = data["entries"][0]["omega"]
    assert value["value"] == 3
    assert value["bound_used"] == 3


def test_omega_table():
    data = _json("omega-table", "--ring", "Z/12", "--mult", "mult(1)")
    entries = _entries(data)
    assert entries["Omega"]["value"] == "{1,2,3}"
    assert entries["ideal()"]["omega"]["value"] == 3
    assert entries["ideal(6)"]["omega"]["value"] == 2


def test_localize():
    data = _json("localize", "--ring", "Z/12", "--mult", "mult(4)", "--map")
    entries = _entries(data)
    assert entries["ring"]["value"] == "quot(Z/12, ideal(3))"
    assert entries["order"]["value"] == "3"
    assert entries["kernel"]["value"] == "ideal(3)"
    assert "4->1" in entries["canonical map"]["value"]


def test_amalg():
    data = _json("amalg", "Z/4", "id", "ideal(2)")
    entries = _entries(data)
    assert entries["order"]["value"] == "8"
    assert entries["ring"]["value"] == "amalg(Z/4, id, ideal(2))"


def test_verify_single_ring():
    data = _json("verify", "--prop", "colon-characterization,radical-law", "--ring", "Z/12")
    assert data["failed"] == 0
    assert [s["check"] for s in data["summaries"]] == ["colon-characterization", "radical-law"]
    assert "wall_time" not in data


def test_verify_unknown_check_exits_2():
    result = runner.invoke(app, ["verify", "--prop", "no-such-check", "--ring", "Z/4"])
    assert result.exit_code == 2


def test_verify_is_deterministic():
    args = ("verify", "--prop", "omega-product,product-absorbing-sum", "--ring",
            "product(Z/4, Z/3)")
    assert _json(*args) == _json(*args)


def test_corpus_listing():
    data = _json("corpus", "--corpus", "fields")
    assert [e["name"] for e in data["entries"]][:2] == ["Z/2", "Z/3"]
    assert len(data["entries"]) == 6


def test_out_file(tmp_path):
    out = tmp_path / "omega.json"
    result = runner.invoke(app, ["omega", "--ring", "Z/8", "--ideal", "ideal()",
                                 "--mult", "mult(1)", "--format", "json", "--out", str(out)])
    assert result.exit_code == 0
    assert json.loads(out.read_text(encoding="utf-8"))["entries"][0]["omega"]["value"] == 3
