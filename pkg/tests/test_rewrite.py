"""Rewriting modulo operator identities: instances, matching, normal forms."""

from fractions import Fraction

import pytest

from lsgsb import lyndon, opi, orders, poly, rewrite, words
from lsgsb.words import Alphabet

XYZ = Alphabet(("x", "y", "z"))
X, Y, Z = 0, 1, 2
STRATEGIES = ("leading", "leading-last", "smallest")


@pytest.fixture(scope="module")
def derivation():
    return opi.make_system(opi.derivation(0), XYZ)


@pytest.fixture(scope="module")
def rb():
    return opi.make_system(opi.rb_weight(1), XYZ)


def lie(text, system):
    return poly.parse_lie_poly(text, XYZ, system.order)


def fmt(f, system):
    return poly.format_lie_poly(f, XYZ, system.order)


# ---------------------------------------------------------------------------
# instances


def test_diff_instance_and_lead(derivation):
    inst = derivation.instance(("diff", (X,), (Y,)))
    assert fmt(inst, derivation) == "P((xy)) - (P(x)y) + (P(y)x)"
    assert inst.leading_word(derivation.order) == ((X, Y),)
    assert inst.leading_coeff(derivation.order) == 1


def test_rb_instance_and_lead(rb):
    inst = rb.instance(("rb", (X,), (Y,)))
    assert fmt(inst, rb) == "(P(x)P(y)) - P((P(x)y)) + P((P(y)x)) - P((xy))"
    assert inst.leading_word(rb.order) == ((X,), (Y,))


def test_instance_is_cached(derivation):
    a = derivation.instance(("diff", (X,), (Y,)))
    b = derivation.instance(("diff", (X,), (Y,)))
    assert a is b


def test_wrong_order_raises_shape_error():
    bad_rb = opi.make_system(opi.rb_weight(1), XYZ, orders.get_order("dt", XYZ))
    with pytest.raises(rewrite.OrderShapeError):
        bad_rb.instance(("rb", (X,), (Y,)))
    bad_diff = opi.make_system(opi.derivation(0), XYZ, orders.get_order("dl", XYZ))
    with pytest.raises(rewrite.OrderShapeError):
        bad_diff.instance(("diff", (X,), (Y,)))


def test_validate_lead_shape():
    rewrite.validate_lead_shape(opi.make_system(opi.derivation(1), XYZ))
    with pytest.raises(rewrite.OrderShapeError):
        rewrite.validate_lead_shape(
            opi.make_system(opi.rb_weight(0), XYZ, orders.get_order("dt", XYZ))
        )


# ---------------------------------------------------------------------------
# matching and reducibility


def test_find_matches_root(derivation):
    w = ((X, Y),)
    assert derivation.find_matches(w) == [
        ((words.STAR,), ("diff", (X,), (Y,))),
    ]


def test_find_matches_nested(derivation):
    # P(P(xy)z): the whole word is a lead (u = P(xy), v = z) and the
    # inner P(xy) is one too (u = x, v = y)
    w = (((X, Y), Z),)
    cands = derivation.find_matches(w, all_splits=True)
    contexts = {words.format_word(q, XYZ) for q, _ in cands}
    assert contexts == {"*", "P(*z)"}
    for q, desc in cands:
        assert words.substitute(q, derivation.expected_lead(desc)) == w


def test_reducibility(derivation, rb):
    assert derivation.is_reducible(((X, Y),))
    assert not derivation.is_reducible(((X,),))
    assert not derivation.is_reducible((X, Y))
    assert rb.is_reducible(((X,), (Y,)))
    # the ordered-pair convention: P(y)P(x) has its halves in the wrong
    # order and P(x)P(x) has equal halves; neither is a rule lead
    assert not rb.is_reducible(((Y,), (X,)))
    assert not rb.is_reducible(((X,), (X,)))


def test_rules_enumeration(derivation, rb):
    rules = derivation.rules(3)
    leads = {words.format_word(r.lhs_word, XYZ) for r in rules}
    assert leads == {"P(xy)", "P(xz)", "P(yz)"}
    for r in rules:
        r.validate(derivation.order)
    rb_rules = rb.rules(4)
    rb_leads = {words.format_word(r.lhs_word, XYZ) for r in rb_rules}
    assert rb_leads == {
        "P(x)P(y)", "P(x)P(z)", "P(y)P(z)",
    }


# ---------------------------------------------------------------------------
# normal forms


def test_normal_form_derivation(derivation):
    f = lie("P(x y)", derivation)
    nf = derivation.normal_form(f)
    assert fmt(nf, derivation) == "(P(x)y) - (P(y)x)"
    assert not any(derivation.is_reducible(w) for w in nf.support_words())


def test_normal_form_rb(rb):
    f = lie("P(x) P(y)", rb)
    nf = rb.normal_form(f)
    assert fmt(nf, rb) == "P((P(x)y)) - P((P(y)x)) + P((xy))"


def test_normal_form_idempotent(rb):
    f = lie("P(x) P(y) - 2*P(x y)", rb)
    nf = rb.normal_form(f)
    assert rb.normal_form(nf) == nf


def test_normal_form_linear(rb):
    f = lie("P(x) P(y)", rb)
    g = lie("P(x) P(z)", rb)
    left = rb.normal_form(f + g.scale(Fraction(3)))
    right = rb.normal_form(f) + rb.normal_form(g).scale(Fraction(3))
    assert left == right


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_strategies_agree_on_confluent_system(rb, strategy):
    f = lie("P(x) P(y) P(z)", rb)  # left-normed [[P(x),P(y)],P(z)]
    assert rb.normal_form(f, strategy=strategy) == rb.normal_form(f)


def test_trace_reduces_decreasing_words(rb):
    f = lie("P(x) P(y) P(z)", rb)
    nf, trace = rb.normal_form(f, want_trace=True)
    assert trace, "expected at least one rewriting step"
    for w, q, desc, coeff in trace:
        assert rb.is_reducible(w)
        assert words.substitute(q, rb.expected_lead(desc)) == w
        assert coeff != 0
    assert not any(rb.is_reducible(w) for w in nf.support_words())


def test_step_cap(rb):
    f = lie("P(x) P(y)", rb)
    with pytest.raises(rewrite.StepCapExceeded):
        rb.normal_form(f, step_cap=0)


def test_joinable(derivation):
    f = lie("P(x y)", derivation)
    g = lie("P(x)y - P(y)x", derivation)  # parse as basis combination
    assert derivation.joinable(f, g)
    assert not derivation.joinable(f, lie("x y", derivation))


# ---------------------------------------------------------------------------
# special normal words


def test_snw_lead_and_equal_factor_tail(derivation):
    # context with the rule lead under an operator and a repeated-letter
    # tail: the bracketing of the substituted word has equal adjacent
    # factors, which the factorization must accept
    q = ((words.STAR, X, X),)
    desc = ("diff", (X,), (Y,))
    s = derivation.instance(desc)
    f = derivation.snw(q, desc)
    lead_word = words.substitute(q, s.leading_word(derivation.order))
    assert f.leading_word(derivation.order) == lead_word
    assert f.leading_coeff(derivation.order) == 1


def test_snw_matches_substitution_on_top_level_context(rb):
    desc = ("rb", (X,), (Y,))
    q = (words.STAR, (Z,))
    f = rb.snw(q, desc)
    assert f.leading_word(rb.order) == words.substitute(q, ((X,), (Y,)))


def test_associative_twin(rb):
    assoc = rb.associative()
    f = lie("P(x) P(y)", rb)
    nf_lie = rb.normal_form(f)
    # the commutator expansion of the Lie normal form and the expansion
    # of the original element reduce to the same associative normal form
    a = assoc.normal_form(f.expand())
    b = assoc.normal_form(nf_lie.expand())
    assert a == b
