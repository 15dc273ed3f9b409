"""Bounded Groebner-Shirshov verification and its independent crosschecks."""

import json

import pytest

from conftest import operated_lsbw_counts
from lsgsb import gsb, opi, orders, poly, rewrite, words
from lsgsb.words import Alphabet

XYZ = Alphabet(("x", "y", "z"))
X, Y, Z = 0, 1, 2


@pytest.fixture(scope="module")
def derivation():
    return opi.make_system(opi.derivation(0), XYZ)


@pytest.fixture(scope="module")
def rb():
    return opi.make_system(opi.rb_weight(1), XYZ)


@pytest.fixture(scope="module")
def bad_diff():
    return opi.make_system(opi.diff_family1(2, 0, 0), XYZ)


# ---------------------------------------------------------------------------
# composition enumeration


def test_enumerate_instances(derivation):
    assert gsb.enumerate_instances(derivation, 3) == [
        ("diff", (X,), (Y,)),
        ("diff", (X,), (Z,)),
        ("diff", (Y,), (Z,)),
    ]


def test_diff_compositions_are_including(derivation):
    comps = gsb.enumerate_compositions(derivation, 4)
    assert len(comps) == 2
    for comp in comps:
        assert comp.kind == "including"
        assert comp.w == ((X, Y, Z),)
        # the ambiguity reduces to an element below w
        h = comp.value(derivation)
        assert derivation.order.less(h.leading_word(derivation.order), comp.w)


def test_rb_compositions_start_at_degree_six(rb):
    assert gsb.enumerate_compositions(rb, 5) == []
    comps = gsb.enumerate_compositions(rb, 6)
    assert {c.kind for c in comps} == {"intersection"}
    assert {c.w for c in comps} == {((X,), (Y,), (Z,))}


# ---------------------------------------------------------------------------
# the bounded check


def test_derivation_positive_at_bound_five(derivation):
    report = gsb.check_gsb(derivation, 5)
    assert report.verdict is True
    assert len(report.entries) == 49
    assert all(ok for _, ok, _ in report.entries)
    assert report.counterexamples() == []


def test_negative_certificate_at_bound_four(bad_diff):
    report = gsb.check_gsb(bad_diff, 4)
    assert report.verdict is False
    bad = report.counterexamples()
    assert len(bad) == 2
    formatted = {
        poly.format_lie_poly(res, XYZ, report.order) for _, res in bad
    }
    assert formatted == {
        "2*(P(x)(yz)) - 2*(P(y)(xz)) + 2*(P(z)(xy))",
        "-2*(P(x)(yz)) + 2*(P(y)(xz)) - 2*(P(z)(xy))",
    }


def test_inverse_average_fails_at_bound_six():
    system = opi.make_system(opi.catalog_entry("inverse-average").build(), XYZ)
    assert gsb.check_gsb(system, 5).verdict is True  # vacuous below the overlap
    report = gsb.check_gsb(system, 6)
    assert report.verdict is False
    [(comp, res)] = report.counterexamples()
    assert comp.kind == "intersection"
    assert comp.w == ((X,), (Y,), (Z,))
    assert (
        poly.format_lie_poly(res, XYZ, report.order)
        == "-P((P((P(x)y))z)) + P((P((P(x)z))y)) - P((P((P(y)z))x))"
    )


def test_report_json_is_deterministic_across_threads(derivation):
    one = gsb.check_gsb(derivation, 5, threads=1).to_json_dict()
    four = gsb.check_gsb(derivation, 5, threads=4).to_json_dict()
    assert json.dumps(one, sort_keys=True) == json.dumps(four, sort_keys=True)


def test_report_json_validates_against_schema(derivation, bad_diff):
    jsonschema = pytest.importorskip("jsonschema")
    from importlib import resources

    schema = json.loads(
        resources.files("lsgsb").joinpath("schemas/certificate.schema.json").read_text()
    )
    for system, bound, crosschecks in [
        (derivation, 5, True),
        (bad_diff, 4, False),
    ]:
        report = gsb.check_gsb(system, bound, with_crosschecks=crosschecks)
        jsonschema.validate(report.to_json_dict(), schema)


# ---------------------------------------------------------------------------
# independent crosschecks


def test_forks_joinable_on_confluent_system(derivation):
    ok, witness, checked = gsb.check_forks(derivation, 4)
    assert ok is True and witness is None and checked >= 1


def test_forks_find_witness_on_nonconfluent_system(bad_diff):
    ok, witness, checked = gsb.check_forks(bad_diff, 4)
    assert ok is False and witness is not None


def test_strategy_independence(derivation):
    ok, sampled = gsb.check_strategy_independence(derivation, 4)
    assert ok is True and sampled > 0


def test_random_ideal_members_reduce(derivation, rb):
    for system in (derivation, rb):
        members = gsb.random_ideal_members(system, 4, count=5, seed=11)
        assert len(members) == 5
        for f in members:
            assert not f.is_zero()
            assert system.normal_form(f).is_zero()
    ok, checked = gsb.check_random_ideal_members(derivation, 4, count=5, seed=3)
    assert ok is True and checked == 5


def test_random_ideal_members_are_seeded(derivation):
    a = gsb.random_ideal_members(derivation, 4, count=4, seed=5)
    b = gsb.random_ideal_members(derivation, 4, count=4, seed=5)
    c = gsb.random_ideal_members(derivation, 4, count=4, seed=6)
    assert [f.terms for f in a] == [f.terms for f in b]
    assert [f.terms for f in a] != [f.terms for f in c]


def test_cd_identity_slices(derivation):
    ok, slices = gsb.cd_crosscheck(derivation, 4)
    assert ok is True
    # cumulative counts: words, irreducibles, and matrix pivots must
    # satisfy ls = irr + pivots degree by degree
    witt = operated_lsbw_counts(3, 4)
    running = 0
    for row in slices:
        running += witt[row["degree"]]
        assert row["ls"] == running
        assert row["ls"] == row["irr"] + row["pivots"]
        assert row["ok"] is True


def test_cd_identity_fails_on_nonconfluent_system(bad_diff):
    ok, slices = gsb.cd_crosscheck(bad_diff, 4)
    assert ok is False


def test_associative_twin_agrees(derivation, bad_diff):
    ok, entries = gsb.check_gsb_assoc(derivation, 4)
    assert ok is True and all(flag for _, _, flag in entries)
    bad_ok, bad_entries = gsb.check_gsb_assoc(bad_diff, 4)
    assert bad_ok is False


def test_equivalence_crosschecks_positive(derivation):
    checks = gsb.equivalence_crosschecks(derivation, 4, seed=0, lie_verdict=True)
    assert checks["agree"] is True
    assert checks["compositions_trivial"] is True
    assert checks["forks_joinable"] is True
    assert checks["strategy_independent"] is True
    assert checks["cd_identity"] is True
    assert checks["random_ideal_members_reduce"] is True
    assert checks["associative_verdict"] is True


def test_equivalence_crosschecks_negative(bad_diff):
    checks = gsb.equivalence_crosschecks(bad_diff, 4, seed=0, lie_verdict=False)
    assert checks["agree"] is True  # everything consistently fails
    assert checks["forks_joinable"] is False
    assert checks["associative_verdict"] is False
    assert checks["cd_identity"] is None  # not meaningful without confluence


# ---------------------------------------------------------------------------
# irreducible words


def test_enumerate_irr_rb_bound_three():
    system = opi.make_system(opi.rb_weight(0), Alphabet(("x", "y")))
    trees = gsb.enumerate_irr(system, 3)
    alphabet = Alphabet(("x", "y"))
    got = [words.format_tree(t, alphabet) for t in trees]
    assert got == [
        "x", "y", "(xy)", "P(x)", "P(y)",
        "(x(xy))", "((xy)y)", "(P(x)x)", "(P(x)y)", "(P(y)x)", "(P(y)y)",
        "P((xy))", "P(P(x))", "P(P(y))",
    ]


def test_irr_excludes_exactly_the_reducible_words(derivation):
    trees = gsb.enumerate_irr(derivation, 4)
    irr_words = {words.forget_brackets(t) for t in trees}
    from lsgsb import lyndon

    for d, ws in lyndon.lsbw_by_degree(XYZ, derivation.order, 4).items():
        for w in ws:
            assert (w in irr_words) == (not derivation.is_reducible(w)), w
