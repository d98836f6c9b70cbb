"""deBruijn λ-terms: parser, β-normalization, and bracket abstraction."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sfcalc.lambda_bridge import (
    Index,
    LApp,
    Lam,
    LambdaParseError,
    LambdaStatus,
    beta_normalize,
    bracket_abstract,
    church_lambda,
    enumerate_closed_lambda,
    i_term,
    k_term,
    lam_closed,
    lam_size,
    parse_lambda,
    render_lambda,
)
from sfcalc.reduction import Status, extensionally_agree, normalize
from sfcalc.stdlib import church
from sfcalc.syntax import parse
from sfcalc.terms import App, Calculus, K, S, Var, app

SK = Calculus.SK
SF = Calculus.SF


def lambda_terms_st():
    leaves = st.integers(0, 3).map(Index)
    return st.recursive(
        leaves,
        lambda sub: st.builds(LApp, sub, sub) | sub.map(Lam),
        max_leaves=10,
    )


class TestParseRender:
    def test_backslash_and_lambda_char_both_bind(self):
        assert parse_lambda("\\0") == Lam(Index(0))
        assert parse_lambda("λ0") == Lam(Index(0))

    def test_body_extends_right(self):
        assert parse_lambda("\\0 0") == Lam(LApp(Index(0), Index(0)))
        assert parse_lambda("(\\0)(\\0)") == LApp(Lam(Index(0)), Lam(Index(0)))

    def test_application_left_associates(self):
        assert parse_lambda("\\\\\\ 2 1 0") == Lam(
            Lam(Lam(LApp(LApp(Index(2), Index(1)), Index(0))))
        )

    def test_multi_digit_indices(self):
        t = parse_lambda("\\" * 12 + "11")
        assert lam_closed(t)
        assert parse_lambda(render_lambda(t)) == t

    def test_errors(self):
        for bad in ("", ")", "(", "(\\0", "x", "\\"):
            with pytest.raises(LambdaParseError):
                parse_lambda(bad)

    def test_open_terms_parse(self):
        assert parse_lambda("0") == Index(0)
        assert not lam_closed(Index(0))
        assert lam_closed(Lam(Index(0)))

    @given(lambda_terms_st())
    def test_roundtrip(self, t):
        assert parse_lambda(render_lambda(t)) == t

    def test_lam_size(self):
        assert lam_size(Index(0)) == 1
        assert lam_size(parse_lambda("\\0 0")) == 4


class TestBeta:
    def test_identity_application(self):
        out = beta_normalize(parse_lambda("(\\0)(\\\\1)"))
        assert out.status is LambdaStatus.NORMAL
        assert out.term == parse_lambda("\\\\1")

    def test_church_addition(self):
        plus = parse_lambda("\\\\\\\\ 3 1 (2 1 0)")
        out = beta_normalize(LApp(LApp(plus, church_lambda(2)), church_lambda(3)))
        assert out.term == church_lambda(5)

    def test_church_multiplication(self):
        times = parse_lambda("\\\\\\ 2 (1 0)")
        out = beta_normalize(LApp(LApp(times, church_lambda(3)), church_lambda(4)))
        assert out.term == church_lambda(12)

    def test_budget_on_divergence(self):
        omega = parse_lambda("(\\0 0)(\\0 0)")
        out = beta_normalize(omega, budget=100)
        assert out.status is LambdaStatus.BUDGET

    def test_normal_order_avoids_discarded_divergence(self):
        t = parse_lambda("(\\\\1)(\\\\1)((\\0 0)(\\0 0))")
        out = beta_normalize(t, budget=1_000)
        assert out.status is LambdaStatus.NORMAL

    def test_church_numerals_are_normal(self):
        for n in range(6):
            c = church_lambda(n)
            out = beta_normalize(c)
            assert out.term == c and out.steps_taken == 0


class TestBracketAbstraction:
    def test_identity_pin(self):
        assert bracket_abstract(parse_lambda("λ0"), SK) == parse("SKK", SK)
        assert bracket_abstract(parse_lambda("λ0"), SF) == parse("S(FF)(FF)", SF)

    def test_atoms(self):
        assert k_term(SK) == K
        assert k_term(SF) == parse("FF", SF)
        assert i_term(SK) == parse("SKK", SK)

    def test_translation_is_closed_and_calculus_legal(self):
        for t in enumerate_closed_lambda(5):
            for calc in (SK, SF):
                image = bracket_abstract(t, calc)
                assert image.closed
                assert image.ops | calc.op_mask == calc.op_mask

    def test_translated_identity_behaves(self):
        image = bracket_abstract(parse_lambda("\\0"), SK)
        probe = parse("S(KK)", SK)
        out = normalize(App(image, probe), SK)
        assert out.term == probe

    def test_translated_k_behaves(self):
        image = bracket_abstract(parse_lambda("\\\\1"), SK)
        out = normalize(app(image, Var("x"), Var("y")), SK)
        assert out.term == Var("x")

    def test_church_numeral_translation_iterates(self):
        image = bracket_abstract(church_lambda(3), SK)
        out = normalize(app(image, Var("f"), Var("x")), SK)
        assert out.term == parse("f(f(f x))", SK)

    def test_translation_matches_catalog_church(self):
        for calc in (SK, SF):
            for n in range(4):
                image = bracket_abstract(church_lambda(n), calc)
                got = normalize(app(image, Var("f"), Var("x")), calc).term
                want = normalize(app(church(n, calc), Var("f"), Var("x")), calc).term
                assert got == want

    def test_open_lambda_terms_are_rejected(self):
        with pytest.raises(ValueError):
            bracket_abstract(Index(0), SK)


class TestCorpus:
    def test_enumeration_is_deterministic_and_sized(self):
        corpus = enumerate_closed_lambda(5)
        assert corpus == enumerate_closed_lambda(5)
        assert all(lam_closed(t) and lam_size(t) <= 5 for t in corpus)
        assert parse_lambda("\\0") in corpus
        assert len(corpus) == 20

    def test_translations_agree_with_beta_on_a_sample(self):
        probes = [parse("S", SK), parse("K", SK), parse("SK", SK)]
        for t in enumerate_closed_lambda(4):
            bnf = beta_normalize(t, budget=1_000)
            if bnf.status is not LambdaStatus.NORMAL:
                continue
            a = bracket_abstract(t, SK)
            b = bracket_abstract(bnf.term, SK)
            assert extensionally_agree(a, b, SK, probes, budget=10_000)
