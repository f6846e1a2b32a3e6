"""The rewrite kernel: normal forms, confluence, degeneration at q = 1."""

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from dqsp.engine import (AlgebraPresentation, Element, ExchangeRule,
                         GeneratorInfo, PresentationError, check_local_confluence,
                         check_relation, convert, iter_monomials,
                         iter_monomials_box, normal_form, reduce_word,
                         relation_element)
from dqsp.grading import koszul_sign
from dqsp.presentations import (BUILTIN_NAMES, DEFINING_RELATIONS,
                                build_presentation, load_presentation)
from dqsp.scalars import ONE, Q, QINV, QScalar, qpow

DQSP = load_presentation("dqsp")
EXT = load_presentation("dqsp-ext")
OMEGA = load_presentation("dqsp-omega")
OPS = load_presentation("dqsp-ops")


def gen(pres, sym):
    return Element.from_generator(pres, sym)


def test_builtin_shapes():
    assert len(DQSP.generators) == 4
    assert len(DQSP.rules) == 6
    assert sum(1 for g in DQSP.generators if g.nilpotent) == 2
    assert [g.symbol for g in EXT.generators] == ["x", "xinv", "xi", "theta", "z"]
    assert len(load_presentation("manin-sp").generators) == 3
    omega_nil = {g.symbol for g in OMEGA.generators if g.nilpotent}
    assert omega_nil == {"xi", "theta", "dx", "dz"}
    assert len(OPS.generators) == 12
    assert len(OPS.rules) == 66


def test_normal_form_examples():
    assert normal_form(["xi", "x"], DQSP) == QINV * (gen(DQSP, "x") * gen(DQSP, "xi"))
    assert str(normal_form(["xi", "x"], DQSP)) == "q^-1*x*xi"
    assert str(normal_form(["z", "xi"], DQSP)) == "-q*xi*z"
    assert normal_form(["xi", "xi"], DQSP).is_zero()
    assert str(normal_form(["Dxi", "xi"], OPS)) == "1 - xi*Dxi"


def test_element_arithmetic():
    x, xi, theta = gen(DQSP, "x"), gen(DQSP, "xi"), gen(DQSP, "theta")
    # x*xi*x = q^-1 * x^2*xi, by one application of xi*x = q^-1*x*xi
    assert (x * xi) * x == QINV * (x * x * xi)
    e = x * xi + theta
    assert (e + (-1) * e).is_zero()
    assert (xi * theta - theta * xi).is_zero()


def test_presentation_mismatch_rejected():
    with pytest.raises(ValueError):
        gen(DQSP, "x") * gen(OMEGA, "x")


def test_homogeneous_degree():
    x, xi, theta = gen(DQSP, "x"), gen(DQSP, "xi"), gen(DQSP, "theta")
    assert (x * x * xi).degree() == (0, 1)
    assert (xi * theta).degree() == (1, 1)
    assert (x + xi).degree() is None
    assert Element.zero(DQSP).degree() == (0, 0)


def test_check_relation():
    assert check_relation(DQSP, [("1", ("x", "z"))], [("1", ("z", "x"))])
    assert check_relation(DQSP, [("1", ("theta", "z"))],
                          [("-q^-1", ("z", "theta"))])
    assert not check_relation(DQSP, [("1", ("x", "xi"))], [("1", ("xi", "x"))])


def test_defining_relations_normalise_to_zero():
    for name, relations in DEFINING_RELATIONS.items():
        pres = load_presentation(name)
        for parts in relations:
            assert relation_element(pres, parts).is_zero(), (name, parts)


def test_laurent_cancellation():
    assert normal_form(["x", "xinv"], EXT) == Element.one(EXT)
    assert normal_form(["xinv", "xi", "x"], EXT) == Q * gen(EXT, "xi")
    assert str(normal_form(["xinv", "xi", "xinv"], EXT)) == "q*x^-2*xi"


def test_confluence_of_builtins():
    for name in BUILTIN_NAMES:
        report = check_local_confluence(load_presentation(name))
        assert report.ok(), report.render_text()


def _inconsistent_presentation():
    # a nilpotent coordinate with a Weyl-type delta rule of the wrong sign:
    # reducing p*a*a one way hits a^2 = 0, the other way leaves 2a behind
    gens = [
        GeneratorInfo("a", 0, 0, 1, (0, 1), 0, True, "coordinate"),
        GeneratorInfo("p", 1, 1, 1, (0, 1), 0, False, "partial"),
    ]
    rules = [ExchangeRule(1, 0, ONE, ONE)]
    return AlgebraPresentation("inconsistent", gens, rules, 2)


def test_confluence_failure_is_reported():
    report = check_local_confluence(_inconsistent_presentation())
    assert not report.ok()
    bad = [e for e in report.entries if e.status == "fail"]
    assert bad and bad[0].lhs != bad[0].rhs


def test_load_checks_confluence(tmp_path):
    spec = {
        "name": "bad",
        "degree_length": 2,
        "generators": [
            {"symbol": "a", "degree": [0, 1], "nilpotent": True},
            {"symbol": "p", "degree": [0, 1], "kind": "partial"},
        ],
        "rules": [{"hi": "p", "lo": "a", "coeff": "1", "delta": "1"}],
    }
    with pytest.raises(PresentationError):
        build_presentation(spec)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(spec))
    with pytest.raises(PresentationError):
        load_presentation(str(path))


def test_load_errors():
    with pytest.raises(PresentationError):
        load_presentation("no-such-algebra")
    with pytest.raises(PresentationError):
        build_presentation({"name": "x"})


def test_presentation_file_round_trip(tmp_path):
    spec = {
        "name": "qplane",
        "degree_length": 2,
        "generators": [
            {"symbol": "u", "degree": [0, 0]},
            {"symbol": "v", "degree": [0, 0]},
        ],
        "rules": [{"hi": "v", "lo": "u", "coeff": "q^-1"}],
    }
    path = tmp_path / "qplane.json"
    path.write_text(json.dumps(spec))
    pres = load_presentation(str(path))
    assert str(normal_form(["v", "u"], pres)) == "q^-1*u*v"


dqsp_words = st.lists(st.integers(0, 3), max_size=10)
ops_words = st.lists(st.integers(0, 11), max_size=8)


@settings(max_examples=60, deadline=None)
@given(dqsp_words)
def test_normal_form_idempotent(word):
    reduced = Element(DQSP, reduce_word(word, DQSP))
    again = Element.zero(DQSP)
    for mono, coeff in reduced.terms.items():
        again = again + normal_form(DQSP.monomial_letters(mono), DQSP, coeff)
    assert again == reduced


@settings(max_examples=60, deadline=None)
@given(ops_words)
def test_reduction_order_does_not_matter(word):
    assert reduce_word(word, OPS) == reduce_word(word, OPS, rightmost=True)


@settings(max_examples=60, deadline=None)
@given(ops_words)
def test_products_preserve_the_grading(word):
    total = (0,) * OPS.degree_length
    from dqsp.grading import degree_add
    for letter in word:
        total = degree_add(total, OPS.generators[letter].z2_degree)
    reduced = Element(OPS, reduce_word(word, OPS))
    for mono in reduced.terms:
        assert OPS.monomial_degree(mono) == total


def test_multiplication_associative_on_random_triples():
    rng = random.Random(7)
    pool = [m for m in iter_monomials(DQSP, 3)]
    for _ in range(40):
        a, b, c = (Element(DQSP, {rng.choice(pool): qpow(rng.randint(-2, 2))})
                   for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_rule_coefficients_degenerate_to_koszul_signs():
    signs = load_presentation("z22-commutative")
    for (hi, lo), rule in DQSP.rules.items():
        predicted = koszul_sign(DQSP.slot_degree[hi], DQSP.slot_degree[lo])
        assert rule.coeff.evaluate(1) == predicted
        assert signs.rules[(hi, lo)].coeff == QScalar.promote(predicted)
    # the same degeneration holds through forms and partials
    for (hi, lo), rule in OPS.rules.items():
        assert rule.coeff.evaluate(1) == koszul_sign(OPS.slot_degree[hi],
                                                     OPS.slot_degree[lo])


def test_iter_monomials():
    # degree <= 2 over x, xi, theta, z: 1 + 4 + (3 pairs of x,z + xi*theta
    # + 4 squares-with-nilpotency...) -- just pin the count
    assert len(list(iter_monomials(DQSP, 1))) == 5
    assert all(sum(map(abs, m)) <= 2 for m in iter_monomials(DQSP, 2))
    window = [m for m in iter_monomials(EXT, 2, laurent_window=1)]
    assert all(-1 <= m[0] <= 1 for m in window)
    box = list(iter_monomials_box(DQSP, 2))
    assert len(box) == 3 * 2 * 2 * 3


def test_convert_round_trip():
    e = gen(DQSP, "x") * gen(DQSP, "xi") + 2 * gen(DQSP, "z")
    there = convert(e, OMEGA)
    assert convert(there, DQSP) == e
    with pytest.raises(ValueError):
        convert(Element.from_generator(OMEGA, "dx"), DQSP)
