"""Rewrite rules, strategies, tracing, budgets, and the fast/slow parity."""

from __future__ import annotations

import re

import pytest
from hypothesis import given, settings, strategies as st

from sfcalc.reduction import (
    DEFAULT_BUDGET,
    RULE_F_ATOM,
    RULE_F_COMPOUND,
    RULE_K,
    RULE_S,
    Status,
    Strategy,
    extensionally_agree,
    normalize,
    render_trace,
    step_once,
)
from sfcalc.syntax import parse, render
from sfcalc.terms import App, Atom, Calculus, F, K, S, Var, app, subterm_at

SK = Calculus.SK
SF = Calculus.SF


def nf(text, calc, **kw):
    out = normalize(parse(text, calc), calc, **kw)
    assert out.status is Status.NORMAL, out
    return render(out.term)


def closed_terms_st(calc):
    leaves = st.sampled_from(sorted(calc.operators)).map(Atom)
    return st.recursive(leaves, lambda sub: st.builds(App, sub, sub), max_leaves=10)


class TestRules:
    def test_s_rule(self):
        out = normalize(parse("S x y z", SF), SF)
        assert out.term == parse("x z (y z)", SF)

    def test_k_rule(self):
        out = normalize(parse("K x y", SK), SK)
        assert out.term == Var("x")

    def test_f_atom_rule_discards_on_atoms(self):
        assert normalize(parse("FSMN", SF), SF).term == Var("M")
        assert normalize(parse("FFMN", SF), SF).term == Var("M")

    def test_f_compound_rule_factorises(self):
        out = normalize(parse("F(SS)MN", SF), SF, trace=True)
        assert out.steps[0].rule == RULE_F_COMPOUND
        assert out.term == parse("NSS", SF)
        out2 = normalize(parse("F(S(SS))MN", SF), SF, trace=True)
        assert out2.term == parse("N S (SS)", SF)

    def test_ff_behaves_as_k(self):
        assert normalize(parse("FF x y", SF), SF).term == Var("x")

    def test_rule_names(self):
        assert RULE_S == "S-rule"
        assert RULE_K == "K-rule"
        assert RULE_F_ATOM == "F-atom-rule"
        assert RULE_F_COMPOUND == "F-compound-rule"

    def test_compound_components_need_not_be_normal(self):
        # First argument of F is a compound whose right component holds a
        # redex; the factorisation still fires at the head first.
        t = app(F, parse("S(S S S S)", SF), Var("M"), Var("N"))
        out = normalize(t, SF, trace=True)
        assert out.steps[0].rule == RULE_F_COMPOUND
        assert out.term == parse("N S (SS(SS))", SF)


class TestStepOnce:
    def test_none_on_normal_forms(self):
        assert step_once(parse("S(KK)", SK), SK) is None
        assert step_once(S, SF) is None

    def test_normal_order_is_leftmost_outermost(self):
        t = parse("K S (K K S)", SK)
        step = step_once(t, SK)
        assert step.rule == RULE_K and step.path == ()

    def test_applicative_order_reduces_arguments_first(self):
        t = parse("K S (K K S)", SK)
        step = step_once(t, SK, Strategy.APPLICATIVE)
        assert step.path != ()
        assert subterm_at(t, step.path) == parse("K K S", SK)

    def test_normal_order_enters_unfactorable_f_argument(self):
        t = app(F, parse("SSSS", SF), Var("M"), Var("N"))
        step = step_once(t, SF)
        assert step.rule == RULE_S
        assert subterm_at(t, step.path) == parse("SSSS", SF)


class TestNormalize:
    def test_statuses_budget(self):
        omega = parse("S(SKK)(SKK)(S(SKK)(SKK))", SK)  # reduces forever
        out = normalize(omega, SK, budget=50)
        assert out.status is Status.BUDGET
        assert out.steps_taken == 50

    def test_stuck_open_f(self):
        out = normalize(parse("F x M N", SF), SF)
        assert out.status is Status.STUCK
        assert out.reason == "varheaded-f"

    def test_closed_terms_never_go_stuck(self, sf_closed_6):
        for t in sf_closed_6:
            out = normalize(t, SF, budget=10_000)
            assert out.status is not Status.STUCK

    def test_strategy_divergence_on_discarded_argument(self):
        t = parse("K a (S(SKK)(SKK)(S(SKK)(SKK)))", SK)
        lazy = normalize(t, SK, Strategy.NORMAL, budget=1_000)
        eager = normalize(t, SK, Strategy.APPLICATIVE, budget=1_000)
        assert lazy.status is Status.NORMAL and lazy.term == Var("a")
        assert eager.status is Status.BUDGET

    def test_default_budget(self):
        assert DEFAULT_BUDGET == 100_000

    def test_machine_and_stepper_agree_on_examples(self):
        for text in ("SKSK", "S(KK)(KK)S", "K(KK)(SKK)", "SSSSSS"):
            fast = normalize(parse(text, SK), SK)
            slow = normalize(parse(text, SK), SK, trace=True)
            assert fast.term == slow.term
            assert fast.steps_taken == slow.steps_taken

    @settings(max_examples=150)
    @given(closed_terms_st(SF))
    def test_machine_and_stepper_parity_sf(self, t):
        fast = normalize(t, SF, budget=300)
        slow = normalize(t, SF, budget=300, trace=True)
        assert fast.status is slow.status
        assert fast.term == slow.term
        assert fast.steps_taken == slow.steps_taken

    @settings(max_examples=100)
    @given(closed_terms_st(SK))
    def test_machine_and_stepper_parity_sk(self, t):
        fast = normalize(t, SK, budget=300)
        slow = normalize(t, SK, budget=300, trace=True)
        assert fast.status is slow.status
        assert fast.term == slow.term


class TestTrace:
    def test_steps_chain(self):
        out = normalize(parse("S(KK)(KS)S", SK), SK, trace=True)
        assert out.steps, "expected at least one step"
        assert out.steps[0].before == parse("S(KK)(KS)S", SK)
        assert out.steps[-1].after == out.term
        for a, b in zip(out.steps, out.steps[1:]):
            assert a.after == b.before

    def test_redex_sits_at_recorded_path(self):
        out = normalize(parse("K(KSS)(KSS)", SK), SK, trace=True)
        for step in out.steps:
            redex = subterm_at(step.before, step.path)
            contractum = subterm_at(step.after, step.path)
            assert redex != contractum

    def test_render_trace_format(self):
        out = normalize(parse("SKKS", SK), SK, trace=True)
        text = render_trace(out.steps)
        lines = text.splitlines()
        assert len(lines) == out.steps_taken
        pattern = re.compile(
            r"^\d+ (S-rule|K-rule|F-atom-rule|F-compound-rule) "
            r"@ ([LR]+|ε) : .+ => .+$"
        )
        for line in lines:
            assert pattern.match(line), line
        assert lines[0].startswith("1 S-rule @ ε : SKKS => KS(KS)")

    def test_trace_empty_on_normal_forms(self):
        out = normalize(parse("S(KK)", SK), SK, trace=True)
        assert out.steps == () and render_trace(out.steps) == ""


class TestExtensionalAgreement:
    def test_identity_pair_agrees(self, sk_terms):
        probes = [S, K, App(S, K), App(K, K)]
        assert extensionally_agree(app(S, K, K), app(S, K, S), SK, probes)

    def test_distinct_behaviour_detected(self):
        probes = [S, K]
        assert not extensionally_agree(App(K, S), App(K, K), SK, probes)

    def test_budget_mismatch_counts_as_disagreement(self):
        omega = parse("S(SKK)(SKK)(S(SKK)(SKK))", SK)
        assert not extensionally_agree(App(K, omega), App(K, K), SK, [K], budget=200)
