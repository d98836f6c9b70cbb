"""Computability models: recursive functions, numbering, corpora, reports."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from sfcalc.models import (
    SUCC,
    ZERO,
    ArityError,
    CheckReport,
    CheckRow,
    Comp,
    Encoding,
    Mu,
    PrimRec,
    Proj,
    build_probe_corpus,
    cantor_pair,
    cantor_unpair,
    check_simulation,
    check_weak_equivalence,
    enumerate_closed_terms,
    enumerate_normal_forms,
    eval_rec,
    gnum,
    gterm,
    normal_model,
    random_closed_term,
    rec_arity,
    recursive_model,
    show_value,
)
from sfcalc.syntax import render
from sfcalc.terms import App, Calculus, F, S, Var, app

SK = Calculus.SK
SF = Calculus.SF


class TestRecArity:
    def test_base_arities(self):
        assert rec_arity(ZERO) == 1
        assert rec_arity(SUCC) == 1
        assert rec_arity(Proj(2, 3)) == 3

    def test_composite_arities(self):
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        assert rec_arity(add) == 2
        assert rec_arity(Comp(add, (Proj(1, 1), Proj(1, 1)))) == 1
        assert rec_arity(Mu(add)) == 1

    def test_ill_formed_programs_are_rejected(self):
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        for bad in (
            Comp(add, (SUCC,)),          # outer needs 2 inners
            Comp(add, (SUCC, add)),      # inner arities disagree
            Proj(3, 2),                  # index out of range
            Proj(0, 2),                  # projections are 1-indexed
            PrimRec(Proj(1, 1), Proj(1, 1)),  # step must take k+2 args
            Mu(SUCC),                    # mu body needs at least 2 args
        ):
            with pytest.raises(ArityError):
                rec_arity(bad)

    def test_eval_checks_argument_count(self):
        with pytest.raises(ArityError):
            eval_rec(SUCC, [1, 2])


class TestEvalRec:
    def test_primitives(self):
        assert eval_rec(ZERO, [9]).value == 0
        assert eval_rec(SUCC, [9]).value == 10
        assert eval_rec(Proj(2, 3), [7, 8, 9]).value == 8

    def test_addition_and_multiplication(self):
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        mul = PrimRec(ZERO, Comp(add, (Proj(1, 3), Proj(2, 3))))
        for a in range(7):
            for b in range(7):
                assert eval_rec(add, [a, b]).value == a + b
                assert eval_rec(mul, [a, b]).value == a * b

    def test_mu_finds_least_root(self):
        # halve(n) = least x with 2*x = n; the search never stops on odd n.
        # The minimised variable is the body's last argument, so the body
        # below is diff(n, x) = |2x - n|.
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        double_x = Comp(add, (Proj(2, 2), Proj(2, 2)))
        # pred3(x, y) = y - 1 truncated; sub(a, b) = a - b truncated.
        pred3 = PrimRec(ZERO, Proj(3, 3))
        sub = PrimRec(Proj(1, 1), Comp(pred3, (Proj(1, 3), Proj(2, 3))))
        diff = Comp(
            add,
            (
                Comp(sub, (double_x, Proj(1, 2))),
                Comp(sub, (Proj(1, 2), double_x)),
            ),
        )
        halve = Mu(diff)
        assert eval_rec(halve, [8]).value == 4
        assert eval_rec(halve, [0]).value == 0
        out = eval_rec(halve, [7], budget=10_000)
        assert out.status == "budget"  # honest cutoff: undefinedness is not decided

    def test_budget_counts_evaluations(self):
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        out = eval_rec(add, [5, 5], budget=3)
        assert out.status == "budget" and out.value is None
        ok = eval_rec(add, [5, 5])
        assert ok.status == "ok" and ok.evals > 3


class TestNumbering:
    def test_cantor_pair_pins(self):
        assert cantor_pair(0, 0) == 0
        assert cantor_pair(1, 1) == 4
        assert cantor_unpair(4) == (1, 1)

    @given(st.integers(0, 10**6), st.integers(0, 10**6))
    def test_cantor_roundtrip(self, a, b):
        assert cantor_unpair(cantor_pair(a, b)) == (a, b)

    @given(st.integers(0, 10**9))
    def test_cantor_surjective(self, n):
        a, b = cantor_unpair(n)
        assert cantor_pair(a, b) == n

    def test_gnum_pins(self):
        assert gnum(S) == 1
        assert gnum(F) == 2
        assert gnum(App(S, S)) == 7
        assert gnum(App(F, S)) == 10
        assert gnum(App(S, F)) == 11
        assert gnum(App(F, F)) == 15
        sk_k = gnum(Var("x")) if False else None
        assert sk_k is None

    def test_gnum_requires_closed_terms(self):
        with pytest.raises(ValueError):
            gnum(Var("x"))

    def test_gnum_injective_on_enumeration(self):
        for calc in (SK, SF):
            terms = enumerate_closed_terms(calc, 7)
            codes = [gnum(t) for t in terms]
            assert len(set(codes)) == len(codes)

    def test_gterm_inverts_gnum(self):
        for calc in (SK, SF):
            for t in enumerate_closed_terms(calc, 7):
                assert gterm(gnum(t), calc) == t

    def test_gterm_rejects_non_codes(self):
        assert gterm(0, SF) is None
        assert gterm(3, SF) is None  # would need components coded 0
        assert gterm(-1, SF) is None

    def test_gterm_depends_on_calculus(self):
        assert gterm(2, SF) == F
        assert render(gterm(2, SK)) == "K"


class TestCorpora:
    def test_enumeration_counts(self):
        assert len(enumerate_closed_terms(SF, 6)) == 22
        assert len(enumerate_closed_terms(SF, 8)) == 102
        assert len(enumerate_normal_forms(SF, 6)) == 22
        assert len(enumerate_normal_forms(SF, 8)) == 86

    def test_enumerated_normal_forms_are_normal(self, sf_normal_forms_6):
        from sfcalc.reduction import normalize

        for t in sf_normal_forms_6:
            assert normalize(t, SF).steps_taken == 0

    def test_enumeration_is_deterministic(self):
        assert enumerate_closed_terms(SK, 7) == enumerate_closed_terms(SK, 7)

    def test_random_closed_term_is_reproducible(self):
        a = random_closed_term(SF, 9, random.Random(7))
        b = random_closed_term(SF, 9, random.Random(7))
        assert a == b and a.closed and a.size == 9

    def test_probe_corpus_is_deterministic_and_deduplicated(self):
        for calc in (SK, SF):
            corpus = build_probe_corpus(calc)
            assert corpus == build_probe_corpus(calc)
            assert len(set(corpus)) == len(corpus)
            assert all(t.closed for t in corpus)

    def test_probe_corpus_seeds_differ(self):
        assert build_probe_corpus(SF, seed=0) != build_probe_corpus(SF, seed=1)


class TestModels:
    def test_recursive_model(self):
        model = recursive_model()
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        assert model.contains(3) and not model.contains(-1)
        assert not model.contains(True)  # booleans are not naturals here
        assert model.apply(add, [2, 3]).value == 5
        # A search with no root reports budget exhaustion, never a proof
        # of undefinedness.
        never = Mu(Comp(SUCC, (Proj(2, 2),)))
        assert model.apply(never, [0]).status == "budget"

    def test_recursive_model_budget_status(self):
        model = recursive_model(budget=3)
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        assert model.apply(add, [5, 5]).status == "budget"

    def test_normal_model(self, sf_terms):
        model = normal_model(SF)
        assert model.contains(S) and model.contains(App(S, S))
        assert not model.contains(app(S, S, S, S))  # a redex is not a value
        assert not model.contains(Var("x"))
        got = model.apply(sf_terms["succ"], [sf_terms["c1"]])
        assert got.status == "ok" and got.value == sf_terms["c2"]

    def test_normal_model_budget(self):
        from sfcalc.syntax import parse

        model = normal_model(SK, budget=10)
        omega = parse("S(SKK)(SKK)(S(SKK)(SKK))", SK)
        assert model.apply(App(S, S), [omega]).status == "budget"


class TestShowValue:
    def test_terms_render(self):
        assert show_value(App(S, S)) == "SS"

    def test_strings_quote(self):
        assert show_value("AS") == "'AS'"

    def test_small_ints_verbatim(self):
        assert show_value(0) == "0"
        assert show_value(123456) == "123456"

    def test_huge_ints_clamp_to_magnitude(self):
        text = show_value(10**300)
        assert text.startswith("~10^") and "300" in text
        assert show_value(2 * 10**61) == "~10^61"


class TestReports:
    def test_report_counts_and_render(self):
        report = CheckReport("demo")
        report.rows.append(CheckRow("a", "1", "1", "ok"))
        report.rows.append(CheckRow("b", "-", "-", "skipped"))
        report.rows.append(CheckRow("c", "1", "2", "mismatch"))
        assert len(report.skipped) == 1 and len(report.violations) == 1 and not report.ok
        text = report.render()
        assert "demo: 3 rows, 1 violations, 1 skipped" in text
        assert text.splitlines()[0].split() == ["input", "lhs", "rhs", "verdict"]

    def test_report_tsv(self):
        report = CheckReport("demo")
        report.rows.append(CheckRow("a", "1", "1", "ok"))
        lines = report.to_tsv().splitlines()
        assert lines[0] == "input\tlhs\trhs\tverdict"
        assert lines[1] == "a\t1\t1\tok"

    def test_check_simulation_happy_path(self):
        rec = recursive_model()
        enc = Encoding("id", rec, rec, lambda n: n)
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        report = check_simulation(
            "self", enc, add, add, [(a, b) for a in range(3) for b in range(3)]
        )
        assert report.ok and len(report.rows) == 9

    def test_check_simulation_detects_mismatch(self):
        rec = recursive_model()
        enc = Encoding("id", rec, rec, lambda n: n)
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        mul = PrimRec(ZERO, Comp(add, (Proj(1, 3), Proj(2, 3))))
        report = check_simulation("wrong", enc, add, mul, [(2, 3)])
        assert len(report.violations) == 1
        assert report.rows[0].verdict == "mismatch"

    def test_check_simulation_skips_source_budget(self):
        tight = recursive_model(budget=2)
        enc = Encoding("id", tight, recursive_model(), lambda n: n)
        add = PrimRec(Proj(1, 1), Comp(SUCC, (Proj(2, 3),)))
        report = check_simulation("skip", enc, add, add, [(3, 3)])
        assert len(report.skipped) == 1 and report.ok

    def test_check_weak_equivalence_domain_error(self):
        rec = recursive_model()
        with pytest.raises(ValueError):
            check_weak_equivalence(
                "bad", rec, rec, lambda x: x, lambda x: x, SUCC, [-5]
            )
