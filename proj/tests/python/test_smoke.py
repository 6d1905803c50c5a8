"""Smoke tests for the Python bindings."""

import json

import pytest

import hierarchy_lab as hl


def test_parse_and_render():
    assert hl.render_canonical("forall x.(q(x))") == "forall x. q(x)"
    assert hl.free_vars("q(x) /\\ q(y)") == ["x", "y"]
    with pytest.raises(ValueError):
        hl.render_canonical("exists x.")


def test_json_round_trip():
    ast = json.loads(hl.to_json("exists x. p"))
    assert ast["k"] == "ex"
    assert hl.from_json(json.dumps(ast)) == "exists x. p"


def test_classify():
    rep = hl.classify("exists x. forall y. p")
    assert rep["degree"] == 2
    assert rep["alt"] == ["+-"]
    assert rep["classes"]["Sigma"] == 2
    assert rep["classes"]["E"] == 2
    assert "Pi" not in rep["classes"]
    assert hl.in_class("exists x. p", "Sigma", 1)
    assert not hl.in_class("exists x. p", "Pi", 1)


def test_translations():
    assert (
        hl.translate("exists x. p", "dollar")
        == "((exists x. ((p -> $) -> $)) -> $) -> $"
    )
    assert hl.translate("forall x. p", "dual") == "exists x. ~p"
    assert hl.translate("forall x. p", "kuroda") == "~~(forall x. ~~p)"
    with pytest.raises(ValueError):
        hl.translate("p", "unknown-kind")


def test_prenex_and_witnesses():
    pre = hl.prenex_in_class("(exists x. p) \\/ (exists y. q(y))", 1)
    assert pre["target_class"] == {"family": "Sigma", "rank": 1}
    assert hl.in_class(pre["witness"], "Sigma", 1)

    w = hl.u_witness_epi("forall x. exists y. q(y)", 1)
    assert w["target_class"] == {"family": "EPi", "rank": 2}

    pos, neg = hl.b_decompose("p -> q", 1)
    assert hl.check_equiv(pos, "p -> q")["status"] == "pass"
    assert hl.check_equiv(neg, "~(p -> q)")["status"] == "pass"


def test_schemes():
    assert hl.scheme_instance("LEM", ["q(x)"]) == "q(x) \\/ ~q(x)"
    assert hl.scheme_instance("DNS", ["q(x)"], var="x").startswith("(forall x.")
    with pytest.raises(ValueError):
        hl.scheme_instance("CD", ["q(x)", "q(x)"], var="x")


def test_enumeration_and_oracle():
    assert hl.enumerate_all(1) == ["p", "q(x)", "bot"]
    assert hl.enumeration_counts(4) == [3, 12, 75, 516]
    bad = hl.check_equiv("exists x. q(x)", "forall x. q(x)")
    assert bad["status"] == "refuted"
    assert bad["counterexample"]["formula"]


def test_suites():
    assert len(hl.suite_names()) == 8
    rep = hl.run_suite("class-equalities", max_size=4)
    assert rep["checked"] == 606
    assert rep["failures"] == []
