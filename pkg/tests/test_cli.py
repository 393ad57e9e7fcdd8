"""End-to-end tests of the command line interface, run in process."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import pytest

from ennola.cli import cyc_text, float_text, main, mp_text, qpoly_text
from ennola.exactnum import Cyclotomic, QPoly
from ennola.multipartitions import MultiPartition, enumerate_mp


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------ text helpers


def test_mp_text_empty_and_blocks():
    assert mp_text(MultiPartition("phi", 2, ())) == "()"
    labels = [mp_text(mu) for mu in enumerate_mp(2, "phi", 2)]
    assert "(1,0):1.1" in labels
    assert "(1,0):1|(1,1):1" in labels
    assert len(set(labels)) == len(labels)


def test_cyc_text_values():
    assert cyc_text(Cyclotomic.from_rational(5)) == "5"
    assert cyc_text(Cyclotomic.from_rational(Fraction(-2, 3))) == "-2/3"
    z = Cyclotomic.root(3)
    assert cyc_text(z) == "z3"
    assert cyc_text(z * 2) == "2*z3"
    assert cyc_text(z * z) == "-1-z3"
    assert cyc_text(Cyclotomic.root(9) ** 2 * -1) == "-z9^2"


def test_qpoly_text_values():
    assert qpoly_text(QPoly()) == "0"
    assert qpoly_text(QPoly({0: 1})) == "1"
    assert qpoly_text(QPoly({1: 1, 0: -1})) == "q-1"
    assert qpoly_text(QPoly({3: 2, 1: -1, 0: 7})) == "2*q^3-q+7"


def test_float_text_rounding():
    assert float_text(complex(0.9999999999999998, 1e-13)) == "1"
    assert float_text(complex(-0.5, 0.8660254037844387)) == "-0.5+0.8660254038i"
    assert float_text(complex(0.0, -1.0)) == "0-1i"
    assert float_text(complex(-0.0, 0.0)) == "0"


# ------------------------------------------------------------ data commands


def test_chartable_1_2_is_the_cyclic_cube_root_table(capsys):
    code, out, _ = run(capsys, "chartable", "--n", "1", "--q", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["command"] == "chartable"
    assert len(doc["rows"]) == 3 and len(doc["cols"]) == 3
    assert doc["class_sizes"] == [1, 1, 1]
    # first row and first column are identically 1
    for v in doc["values"][0]:
        assert v["coeffs"][0] == [1, 1] and v["coeffs"][1] == [0, 1]
    for row in doc["values"]:
        assert row[0]["coeffs"] == [[1, 1], [0, 1]]
    # the middle entry is a primitive cube root of unity
    assert doc["values"][1][1] == {"N": 3, "coeffs": [[0, 1], [1, 1]]}


def test_chartable_byte_identical_reruns(capsys):
    _, first, _ = run(capsys, "chartable", "--n", "2", "--q", "2")
    _, second, _ = run(capsys, "chartable", "--n", "2", "--q", "2")
    assert first == second


def test_chartable_csv_grid(capsys):
    code, out, _ = run(capsys, "chartable", "--n", "2", "--q", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 10 and all(len(r) == 10 for r in rows)
    assert rows[0][0] == ""
    identity_col = rows[0].index("(1,0):1.1")
    degrees = sorted(r[identity_col] for r in rows[1:])
    assert degrees == ["1"] * 6 + ["2"] * 3


def test_chartable_pretty_prints_rounded_floats(capsys):
    code, out, _ = run(capsys, "chartable", "--n", "1", "--q", "2", "--format", "pretty")
    assert code == 0
    assert "-0.5+0.8660254038i" in out
    assert "order 3" in out


def test_classes_json_tiles_group_order(capsys):
    code, out, _ = run(capsys, "classes", "--n", "2", "--q", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 96
    assert doc["count"] == 16 == len(doc["classes"])
    assert sum(c["size"] for c in doc["classes"]) == 96
    for c in doc["classes"]:
        assert c["centralizer"] * c["size"] == 96


def test_orbits_counts_match_level_orders(capsys):
    code, out, _ = run(capsys, "orbits", "--q", "2", "--n", "3")
    assert code == 0
    doc = json.loads(out)
    assert [c["orbits"] for c in doc["counts"]] == [3, 0, 2]
    assert [c["level_order"] for c in doc["counts"]] == [3, 3, 9]
    assert len(doc["theta"]) == len(doc["phi"]) == 5


def test_degrees_json_and_csv(capsys):
    code, out, _ = run(capsys, "degrees", "--m", "2", "--q", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree_sum"] == 12
    assert sorted(r["degree"] for r in doc["records"]) == [1] * 6 + [2] * 3
    polys = {r["text"]: r["polynomial"] for r in doc["records"]}
    assert polys["(1,0):1.1"] == "1"
    assert polys["(1,0):2"] == "q"
    assert polys["(1,0):1|(1,1):1"] == "q-1"
    code, out, _ = run(capsys, "degrees", "--m", "2", "--q", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["label", "degree", "tau_parity", "height", "odd_conjugate", "polynomial"]
    assert len(rows) == 10


# -------------------------------------------------------------- decompose


def test_decompose_gelfand_graev(capsys):
    code, out, _ = run(capsys, "decompose", "gelfand-graev", "--m", "2", "--q", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "gelfand-graev"
    assert doc["count"] == 6
    assert doc["value_at_identity"] == 9
    assert all(c["multiplicity"] == 1 for c in doc["constituents"])


def test_decompose_sp_induction(capsys):
    code, out, _ = run(capsys, "decompose", "sp-induction", "--r", "1", "--q", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 4
    assert doc["value_at_identity"] == 4
    assert all(c["degree"] == 1 for c in doc["constituents"])


def test_decompose_model(capsys):
    code, out, _ = run(capsys, "decompose", "model", "--m", "2", "--q", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree_sum"] == 36
    sizes = {part["r"]: len(part["labels"]) for part in doc["parts"]}
    assert sizes == {0: 12, 1: 4}


def test_decompose_csv_round_trip(capsys):
    code, out, _ = run(
        capsys, "decompose", "model", "--m", "2", "--q", "3", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["r", "label", "degree"]
    assert len(rows) == 17


# -------------------------------------------------------------- bruteforce


def test_bruteforce_json_document(capsys):
    code, out, _ = run(capsys, "bruteforce", "--n", "2", "--q", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 18
    assert len(doc["classes"]) == 9
    assert sum(c["size"] for c in doc["classes"]) == 18
    assert doc["symmetric_count"] == 12
    assert len(doc["fs_indicators"]) == 9
    assert set(doc["fs_indicators"].values()) == {1}


# ------------------------------------------------------------------ verify


def test_verify_degree_sum_example(capsys):
    code, out, _ = run(capsys, "verify", "degree-sum", "--m", "2", "--q", "2")
    assert code == 0
    assert out.startswith("PASS degree-sum:")
    assert "value 12" in out


def test_verify_all_small(capsys):
    code, out, err = run(capsys, "verify", "all", "--n", "2", "--q", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9
    assert all(line.startswith("PASS ") for line in lines)
    names = [line.split()[1].rstrip(":") for line in lines]
    assert names == [
        "divsum",
        "class-equation",
        "orthogonality",
        "degree-sum",
        "even-sum",
        "sameprod",
        "dl",
        "unsym",
        "fs",
    ]
    assert "total:" in err


def test_verify_all_skips_brute_checks_off_model(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n", "1", "--q", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert sum(line.startswith("SKIP ") for line in lines) == 0
    code, out, _ = run(capsys, "verify", "all", "--n", "2", "--q", "5")
    assert code == 0
    skipped = [line for line in out.strip().splitlines() if line.startswith("SKIP ")]
    assert len(skipped) == 2


def test_verify_reports_failures_with_exit_one(capsys, monkeypatch):
    from ennola import cli

    def broken(args):
        return False, "discrepancy 7 at the seeded spot"

    monkeypatch.setitem(cli._CHECKS, "divsum", broken)
    code, out, _ = run(capsys, "verify", "divsum", "--q", "2")
    assert code == 1
    assert out == "FAIL divsum: discrepancy 7 at the seeded spot\n"


def test_verify_converts_internal_assertions_to_fail(capsys, monkeypatch):
    from ennola import cli

    def exploding(args):
        raise AssertionError("routes disagree by 3")

    monkeypatch.setitem(cli._CHECKS, "dl", exploding)
    code, out, _ = run(capsys, "verify", "dl", "--q", "2")
    assert code == 1
    assert "FAIL dl: internal invariant failed: routes disagree by 3" in out


# ----------------------------------------------------------- configuration


@pytest.mark.parametrize(
    "argv",
    [
        ["classes", "--n", "2", "--q", "6"],
        ["classes", "--n", "0", "--q", "2"],
        ["chartable", "--n", "1", "--q", "1"],
        ["bruteforce", "--n", "4", "--q", "2"],
        ["bruteforce", "--n", "3", "--q", "2"],
        ["decompose", "model", "--m", "2", "--q", "2"],
        ["decompose", "gelfand-graev", "--q", "2"],
        ["decompose", "sp-induction", "--q", "3"],
        ["verify", "unsym", "--n", "3", "--q", "3"],
    ],
)
def test_invalid_configuration_exits_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    doc = json.loads(err.strip().splitlines()[-1])
    assert doc["schema"] == 1 and doc["error"]


def test_bruteforce_large_size_behind_flag(capsys):
    code, out, _ = run(
        capsys, "bruteforce", "--n", "3", "--q", "2", "--allow-large", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 25
    assert sum(int(r[1]) for r in rows[1:]) == 648


def test_unknown_command_raises_system_exit():
    with pytest.raises(SystemExit) as info:
        main(["nosuch"])
    assert info.value.code == 2
