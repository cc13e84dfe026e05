"""Command-line surface: flags, exit codes, text and JSON output."""

import json

import pytest

from heckeblocks.cli import (
    EXIT_EMPTY,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_classify_human_output(capsys):
    code, out = run(capsys, "classify", "--ell", "1", "--s", "1", "--beta", "1,1")
    assert code == EXIT_OK
    assert "type: tame" in out
    assert "brauer: graph" in out


def test_classify_json_round_trip(capsys):
    code, out = run(
        capsys, "classify", "--ell", "1", "--s", "1", "--beta", "2,2", "--json"
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["rep_type"] == "wild"
    assert data["canonical"] == {"family": "lambda", "s": 1, "i": 0, "k": 2}
    assert data["input"]["beta"] == [2, 2]


def test_classify_from_bipartition_matches_content(capsys):
    code_a, out_a = run(
        capsys,
        "classify", "--ell", "2", "--s", "1",
        "--from-bipartition", "[[2],[1]]", "--json",
    )
    code_b, out_b = run(
        capsys, "classify", "--ell", "2", "--s", "1", "--beta", "1,2,0", "--json"
    )
    assert code_a == code_b == EXIT_OK
    assert json.loads(out_a) == json.loads(out_b)


def test_classify_exit_codes(capsys):
    assert run(capsys, "classify", "--ell", "2", "--s", "1", "--beta", "5,0,0")[0] == EXIT_EMPTY
    assert run(capsys, "classify", "--ell", "2", "--s", "1", "--beta", "1,1")[0] == EXIT_USAGE
    assert run(capsys, "classify", "--ell", "2", "--s", "1")[0] == EXIT_USAGE
    assert run(capsys, "classify", "--ell", "2", "--s", "5", "--beta", "0,0,0")[0] == EXIT_USAGE
    assert (
        run(
            capsys,
            "classify", "--ell", "1", "--s", "1", "--beta", "1,1",
            "--char2", "--char-odd",
        )[0]
        == EXIT_USAGE
    )


def test_dims_table_and_polynomials(capsys):
    code, out = run(capsys, "dims", "--ell", "1", "--s", "1", "--beta", "1,1", "--all")
    assert code == EXIT_OK
    assert "1+q^2+q^4" in out
    assert "e(0,1)" in out and "e(1,0)" in out


def test_dims_with_explicit_idempotents(capsys):
    code, out = run(
        capsys,
        "dims", "--ell", "1", "--s", "1", "--beta", "2,2",
        "--idems", "0,1,0,1;1,0,1,0",
    )
    assert code == EXIT_OK
    assert "1+3q^2+4q^4+3q^6+q^8" in out
    assert "2q^2+4q^4+2q^6" in out


def test_dims_trivial_and_empty_blocks(capsys):
    code, out = run(capsys, "dims", "--ell", "1", "--s", "1", "--beta", "0,0", "--all")
    assert code == EXIT_OK
    assert "1" in out
    code, _ = run(capsys, "dims", "--ell", "2", "--s", "1", "--beta", "5,0,0", "--all")
    assert code == EXIT_EMPTY


def test_dims_json_matrix(capsys):
    code, out = run(
        capsys, "dims", "--ell", "1", "--s", "1", "--beta", "1,1", "--all", "--json"
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data["idempotents"]) == 2
    assert len(data["entries"]) == 2


def test_orbit_report(capsys):
    code, out = run(capsys, "orbit", "--ell", "2", "--s", "1", "--beta", "3,1,1")
    assert code == EXIT_OK
    assert "(0,0,0)" in out
    assert "lambda(s=1, i=0) + 0*delta" in out
    code, out = run(capsys, "orbit", "--ell", "2", "--s", "1", "--beta", "5,0,0")
    assert code == EXIT_OK
    assert "False" in out


def test_blocks_listing(capsys):
    code, out = run(capsys, "blocks", "--e", "2", "--s", "1", "--n", "2")
    assert code == EXIT_OK
    assert "beta=[1, 1]" in out and "type=tame" in out
    code, out = run(capsys, "blocks", "--e", "3", "--separated", "--n", "2", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data) == 5
    assert all(entry["canonical"] is None for entry in data)


def test_blocks_flag_conflicts(capsys):
    assert run(capsys, "blocks", "--e", "3", "--n", "2")[0] == EXIT_USAGE
    assert (
        run(capsys, "blocks", "--e", "3", "--s", "1", "--separated", "--n", "2")[0]
        == EXIT_USAGE
    )
    assert run(capsys, "blocks", "--e", "4", "--n", "2", "--typeD")[0] == EXIT_USAGE


def test_blocks_typeD(capsys):
    code, out = run(
        capsys, "blocks", "--e", "4", "--n", "3", "--typeD", "--char-odd"
    )
    assert code == EXIT_OK
    assert "beta=[1, 1, 1, 0]" in out and "type=finite" in out


def test_tableaux_listing(capsys):
    code, out = run(
        capsys, "tableaux", "--ell", "1", "--s", "1", "--shape", "[[2],[1]]"
    )
    assert code == EXIT_OK
    assert "total: 3" in out
    assert "degree=" in out and "residues=" in out


def test_check_oracle_suite(capsys):
    code, out = run(capsys, "check", "--suite", "oracle")
    assert code == EXIT_OK
    assert out.count("PASS") == 7


def test_unknown_subcommand_is_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE


def test_internal_code_reserved():
    assert (EXIT_OK, EXIT_USAGE, EXIT_EMPTY, EXIT_INTERNAL) == (0, 1, 2, 3)
