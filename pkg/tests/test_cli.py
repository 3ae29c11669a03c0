import json

import pytest

from rectrep import SemisimpleAlgebra, catalogue_spec, iter_catalogue_items
from rectrep.cli import (EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, ParseError, main,
                         parse_algebra, parse_rep, render_spec)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out else None
    return code, payload, captured


def assert_no_bare_ints(obj):
    # every integer crosses the JSON boundary as a decimal string
    if isinstance(obj, bool) or obj is None:
        return
    assert not isinstance(obj, (int, float)), obj
    if isinstance(obj, dict):
        for k, v in obj.items():
            assert isinstance(k, str)
            assert_no_bare_ints(v)
    elif isinstance(obj, list):
        for v in obj:
            assert_no_bare_ints(v)
    else:
        assert isinstance(obj, str)


# ---------------------------------------------------------------- grammar


def test_parse_algebra_aliases_and_order():
    assert parse_algebra("a1 * b3").label == "A1*B3"
    assert parse_algebra("C2").label == "B2"
    with pytest.raises(ParseError):
        parse_algebra("D2")
    with pytest.raises(ParseError):
        parse_algebra("A0")


def summand_dict(spec):
    return {w.coords: m for w, m in spec.summands}


def test_parse_rep_basics():
    alg = parse_algebra("B3")
    spec = parse_rep("std + spin", alg)
    assert summand_dict(spec) == {(1, 0, 0): 1, (0, 0, 1): 1}
    assert parse_rep("STD + SPIN", alg) == spec
    assert parse_rep(" std+spin ", alg) == spec


def test_parse_rep_multiplicity_by_repetition():
    alg = parse_algebra("A1")
    spec = parse_rep("sym2 + sym2 + triv", alg)
    assert summand_dict(spec) == {(0,): 1, (2,): 2}


def test_parse_rep_tensor_terms_match_factors():
    alg = parse_algebra("A1*B2")
    spec = parse_rep("sym3 * spin", alg)
    assert summand_dict(spec) == {(3, 0, 1): 1}
    with pytest.raises(ParseError, match="factor"):
        parse_rep("sym3", alg)
    with pytest.raises(ParseError, match="expected '\\+'"):
        parse_rep("sym3 * spin * std", alg)


def test_parse_rep_dual_and_hw():
    alg = parse_algebra("A3")
    assert parse_rep("dual(std)", alg) == parse_rep("hw(0,0,1)", alg)
    assert parse_rep("dual(dual(std))", alg) == parse_rep("std", alg)
    with pytest.raises(ParseError):
        parse_rep("hw(1,0)", alg)  # wrong coordinate count


def test_parse_rep_d_spin_expands_to_both_halves():
    alg = parse_algebra("D4")
    assert parse_rep("spin", alg) == parse_rep("spin+ + spin-", alg)


def test_parse_errors_carry_position():
    alg = parse_algebra("A1")
    with pytest.raises(ParseError) as e:
        parse_rep("sym2 & sym2", alg)
    assert e.value.pos is not None
    with pytest.raises(ParseError, match="spin"):
        parse_rep("spin", parse_algebra("A3"))


def test_render_parse_roundtrip_on_catalogue():
    for item in iter_catalogue_items(6, 128):
        alg, spec = catalogue_spec(item)
        text = render_spec(spec)
        assert parse_rep(text, alg) == spec, (item.label, text)


def test_render_uses_aliases():
    alg = parse_algebra("B3")
    assert render_spec(parse_rep("spin + std", alg)) == "spin + std"
    a3 = parse_algebra("A3")
    # summands render in sorted coordinate order
    assert render_spec(parse_rep("std + dual(std)", a3)) == "dual(std) + std"
    assert render_spec(parse_rep("wedge2", a3)) == "wedge2"


# ---------------------------------------------------------------- commands


def test_char_positive(capsys):
    code, payload, _ = run(capsys, "char", "--algebra", "B3", "--rep", "spin")
    assert code == EXIT_OK
    assert payload["ok"] is True
    assert payload["schema_version"] == "1"
    assert payload["result"]["dimension"] == "8"
    assert len(payload["result"]["weights"]) == 8
    assert payload["result"]["multiplicity_free"] is True
    assert_no_bare_ints(payload)


def test_char_negative_bad_grammar(capsys):
    code, payload, _ = run(capsys, "char", "--algebra", "A1", "--rep", "sym$")
    assert code == EXIT_USAGE
    assert payload["ok"] is False
    assert payload["error"]["code"] == "parse"
    assert "column" in payload["error"]


def test_rect_positive(capsys):
    code, payload, _ = run(capsys, "rect", "--algebra", "B2",
                           "--rep", "std + spin")
    assert code == EXIT_OK
    r = payload["result"]
    assert r["rectangular"] is True
    assert r["lengths"] == ["3", "3"]
    assert r["hypercubic"] is True and r["side"] == "3"
    assert r["automorphism_order"] == "8"
    assert_no_bare_ints(payload)


def test_rect_negative_not_rectangular(capsys):
    code, payload, _ = run(capsys, "rect", "--algebra", "A2", "--rep", "std")
    assert code == EXIT_DOMAIN
    assert payload["ok"] is False
    assert payload["error"]["code"] == "not_rectangular"
    assert payload["result"]["reason"] == "asymmetry"


def test_decompose_positive(capsys):
    code, payload, _ = run(capsys, "decompose", "--algebra", "A1*A1",
                           "--rep", "std*triv + triv*std")
    assert code == EXIT_OK
    parts = payload["result"]["parts"]
    assert len(parts) == 1
    assert parts[0]["label"] == "D2Spin"
    assert parts[0]["factors"] == ["1", "2"]
    assert payload["result"]["lengths"] == ["2", "2"]
    assert payload["result"]["hypercubic"] is True
    assert_no_bare_ints(payload)


def test_decompose_negative_unfaithful(capsys):
    code, payload, _ = run(capsys, "decompose", "--algebra", "A1",
                           "--rep", "triv")
    assert code == EXIT_DOMAIN
    assert payload["error"]["code"] == "not_faithful"
    assert payload["result"]["faithful"] is False


def test_enumerate_positive_a3(capsys):
    code, payload, _ = run(capsys, "enumerate", "--algebra", "A3",
                           "--max-rank", "3", "--max-dim", "256")
    assert code == EXIT_OK
    assert payload["result"]["count"] == "1"
    specs = payload["result"]["specs"]
    assert specs[0]["rep"] == "dual(std) + std"
    assert specs[0]["lengths"] == ["2", "2", "2"]
    assert_no_bare_ints(payload)


def test_enumerate_negative_bounds(capsys):
    code, payload, _ = run(capsys, "enumerate", "--max-rank", "9")
    assert code == EXIT_USAGE
    assert payload["ok"] is False


def test_verify_catalogue_positive(capsys):
    code, payload, _ = run(capsys, "verify-catalogue", "--max-rank", "2",
                           "--max-dim", "32")
    assert code == EXIT_OK
    assert payload["result"]["ok"] is True
    assert_no_bare_ints(payload)


def test_verify_catalogue_negative_usage(capsys):
    code, _, captured = run(capsys, "verify-catalogue", "--max-dim", "lots")
    assert code == EXIT_USAGE


def test_verify_howe_positive(capsys):
    code, payload, _ = run(capsys, "verify-howe", "--algebra", "G2",
                           "--max-dim", "64")
    assert code == EXIT_OK
    assert payload["result"]["ok"] is True
    assert_no_bare_ints(payload)


def test_verify_howe_negative_bad_algebra(capsys):
    code, payload, _ = run(capsys, "verify-howe", "--algebra", "Q7")
    assert code == EXIT_USAGE


def test_census_positive(capsys):
    code, payload, _ = run(capsys, "census", "--max-rank", "3")
    assert code == EXIT_OK
    assert payload["result"]["ok"] is True
    assert_no_bare_ints(payload)


def test_census_negative_unknown_flag(capsys):
    code, _, _ = run(capsys, "census", "--nope")
    assert code == EXIT_USAGE


def test_dry_run_reports_plan(capsys):
    code, payload, _ = run(capsys, "enumerate", "--max-rank", "2",
                           "--max-dim", "64", "--dry-run")
    assert code == EXIT_OK
    assert payload["result"]["dry_run"] is True


def test_pretty_goes_to_stderr_only(capsys):
    code, payload, captured = run(capsys, "rect", "--algebra", "B2",
                                  "--rep", "std + spin", "--pretty")
    assert code == EXIT_OK
    assert captured.err
    # stdout still parses as the same JSON envelope
    assert payload["result"]["rectangular"] is True


def test_byte_identical_repeated_runs(capsys):
    argv = ("char", "--algebra", "D4", "--rep", "spin")
    _, _, first = run(capsys, *argv)
    _, _, second = run(capsys, *argv)
    assert first.out == second.out


def test_missing_subcommand_is_usage(capsys):
    assert main([]) == EXIT_USAGE
    capsys.readouterr()
