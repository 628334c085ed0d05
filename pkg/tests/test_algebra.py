import itertools

import pytest
from hypothesis import given, strategies as st

from hedgeres.algebra import (
    AlgebraConfig,
    Order,
    TruthTerm,
    apply_hedge,
    canonicalize,
    compare,
    enumerate_terms,
    iff,
    implies,
    join,
    meet,
    negate,
    parse_algebra,
    sign,
)
from hedgeres.errors import ConfigError, ParseError

from helpers import ALG, T, all_terms, interval_embedding

DEPTH2 = all_terms(2)
DEPTH3 = all_terms(3)


def test_canonicalize_examples():
    assert canonicalize(ALG, ["V"], "True") == T("VTrue")
    assert canonicalize(ALG, ["V"], "Top") == ALG.top
    assert canonicalize(ALG, [], "False") == ALG.false
    assert apply_hedge("M", T("Bot")) == ALG.bottom
    with pytest.raises(ConfigError):
        canonicalize(ALG, ["X"], "True")
    with pytest.raises(ConfigError):
        canonicalize(ALG, [], "Maybe")


@pytest.mark.parametrize("text", ["VMTrue", "LFalse", "Top", "Bot", "W", "True", "PPLVFalse"])
def test_term_text_round_trip(text):
    assert str(T(text)) == text


def test_unknown_term_rejected():
    with pytest.raises(ConfigError):
        T("VeryTrue")


@pytest.mark.parametrize("text,expected", [("PTrue", -1), ("VTrue", 1), ("LFalse", 1),
                                           ("MFalse", -1), ("VPTrue", 1), ("LPTrue", -1)])
def test_sign_examples(text, expected):
    assert sign(T(text)) == expected


def test_sign_needs_hedge():
    with pytest.raises(ValueError):
        sign(ALG.true)


@pytest.mark.parametrize("x,y", [("True", "VTrue"), ("PTrue", "True"), ("False", "LFalse"),
                                 ("LPTrue", "MPTrue"), ("LTrue", "PTrue"), ("MTrue", "VTrue"),
                                 ("MTrue", "VMTrue"), ("PFalse", "LFalse"), ("Bot", "VVFalse"),
                                 ("LLFalse", "W"), ("W", "LLTrue"), ("VVTrue", "Top"),
                                 ("VPFalse", "VPLFalse")])
def test_quoted_orderings(x, y):
    assert compare(T(x), T(y)) is Order.LT
    assert compare(T(y), T(x)) is Order.GT


def test_order_matches_interval_embedding():
    pos = interval_embedding(ALG, 3)
    for x, y in itertools.product(DEPTH3, repeat=2):
        expected = (pos[x] > pos[y]) - (pos[x] < pos[y])
        assert compare(x, y) == expected, (x, y)


def test_enumerate_counts():
    assert [str(t) for t in enumerate_terms(ALG, 0)] == ["Bot", "False", "W", "True", "Top"]
    assert len(enumerate_terms(ALG, 1)) == 13
    assert len(enumerate_terms(ALG, 2)) == 45
    assert len(DEPTH3) == 173 == len(set(DEPTH3))
    with pytest.raises(ValueError):
        enumerate_terms(ALG, -1)


def test_enumerate_is_ascending():
    assert all(compare(a, b) is Order.LT for a, b in zip(DEPTH3, DEPTH3[1:]))


def test_sign_consistency():
    for t in DEPTH3:
        if t.hedges:
            suffix = TruthTerm(t.hedges[1:], t.base, ALG)
            assert (compare(t, suffix) is Order.GT) == (sign(t) == 1)


def test_heredity():
    hedge_strings = [()] + [(h,) for h in ALG.hedges] + list(itertools.product(ALG.hedges, repeat=2))
    for x, y in itertools.combinations(DEPTH2, 2):
        if x.is_constant or x.base != y.base:
            continue
        xs, ys = x.hedges[::-1], y.hedges[::-1]
        if xs == ys[: len(xs)] or ys == xs[: len(ys)]:
            continue
        for delta in hedge_strings:
            hx = TruthTerm(delta + x.hedges, x.base, ALG)
            hy = TruthTerm(delta + y.hedges, y.base, ALG)
            assert compare(hx, hy) == compare(x, y)


def test_negation():
    assert negate(T("VTrue")) == T("VFalse")
    assert negate(ALG.middle) == ALG.middle
    assert negate(ALG.top) == ALG.bottom
    assert negate(negate(T("MFalse"))) == T("MFalse")
    for x in DEPTH3:
        assert negate(negate(x)) == x
    for x, y in itertools.product(DEPTH3, repeat=2):
        assert compare(x, y) == -compare(negate(x), negate(y))


def test_connective_examples():
    assert meet(T("MFalse"), T("VTrue")) == T("MFalse")
    assert join(T("MFalse"), T("VTrue")) == T("VTrue")
    assert implies(T("True"), T("False")) == T("False")
    assert implies(T("VTrue"), T("MTrue")) == T("MTrue")
    assert iff(T("True"), T("True")) == T("True")
    assert iff(T("VTrue"), T("MFalse")) == T("MFalse")
    for x in DEPTH2:
        assert meet(x, ALG.top) == x
        assert join(x, ALG.bottom) == x
        assert implies(ALG.bottom, x) == ALG.top
    assert T("LTrue") & T("PTrue") == T("LTrue")
    assert ~T("True") == T("False")


def test_lattice_laws_depth2():
    for x, y in itertools.product(DEPTH2, repeat=2):
        assert meet(x, y) == meet(y, x) and join(x, y) == join(y, x)
        assert negate(meet(x, y)) == join(negate(x), negate(y))
    for x, y, z in itertools.product(DEPTH2, repeat=3):
        assert meet(x, meet(y, z)) == meet(meet(x, y), z)
        assert join(x, join(y, z)) == join(join(x, y), z)
        assert meet(x, join(y, z)) == join(meet(x, y), meet(x, z))
        assert join(x, meet(y, z)) == meet(join(x, y), join(x, z))


@given(st.sampled_from(DEPTH3), st.sampled_from(DEPTH3), st.sampled_from(DEPTH3))
def test_transitivity_sampled(x, y, z):
    if compare(x, y) <= 0 and compare(y, z) <= 0:
        assert compare(x, z) <= 0


def test_mixed_algebras_rejected():
    other = AlgebraConfig("No", "Yes", ("V",), ("L",))
    with pytest.raises(ConfigError):
        compare(other.true, ALG.true)


def test_config_validation():
    with pytest.raises(ConfigError):
        AlgebraConfig(plus_hedges=("M",), minus_hedges=("M",))
    with pytest.raises(ConfigError):
        AlgebraConfig(plus_hedges=(), minus_hedges=("P",))
    with pytest.raises(ConfigError):
        AlgebraConfig(plus_hedges=("Tr",), minus_hedges=("P",))  # prefix of True
    with pytest.raises(ConfigError):
        AlgebraConfig(plus_hedges=("W",), minus_hedges=("P",))
    with pytest.raises(ConfigError):
        # M and V would move terms in different directions after P
        AlgebraConfig(sign_relation={("M", "P"): 1, ("V", "P"): -1})


def test_uniform_sign_matrix_breaks_quoted_ordering():
    # the "H+ always positive" matrix is a valid configuration,
    # but it orders LPTrue above MPTrue
    rel = {(k, h): (1 if k in ("M", "V") else -1) for k in "MVPL" for h in "MVPL"}
    alg = AlgebraConfig(sign_relation=rel)
    assert compare(alg.term("LPTrue"), alg.term("MPTrue")) is Order.GT
    assert compare(alg.term("True"), alg.term("VTrue")) is Order.LT


def test_default_equals_explicit_block():
    text = """
    algebra {
      generators: False, True   # c- first
      positive: M < V
      negative: P < L
      sign { V:+M V:+V M:+M M:+V V:-P V:-L M:-P M:-L
             P:-M P:-V L:-M L:-V P:+P P:+L L:+P L:+L }
    }"""
    assert parse_algebra(text) == ALG
    assert hash(parse_algebra(text)) == hash(ALG)


def test_hal_wildcards_and_overrides():
    alg = parse_algebra("algebra { generators: No, Yes positive: R negative: S "
                        "sign { R:+* S:-* S:+S R:-S } }")
    assert alg.rel("R", "R") == 1 and alg.rel("R", "S") == -1
    assert alg.rel("S", "S") == 1 and alg.rel("S", "R") == -1
    assert str(negate(alg.term("RSYes"))) == "RSNo"


@pytest.mark.parametrize("text", ["algebra { generators: False True positive: M negative: P }",
                                  "algebra { positive: M negative: P }",
                                  "algebra { generators: F, T positive: M negative: P bogus: 1 }"])
def test_hal_errors(text):
    with pytest.raises((ParseError, ConfigError)):
        parse_algebra(text)
