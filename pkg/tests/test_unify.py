import random

from hypothesis import given, strategies as st

from hedgeres.syntax import Atom, Const, Fn, Var, free_vars, parse_atom, parse_clause, parse_term
from hedgeres.unify import (
    IDENTITY,
    Substitution,
    apply,
    compose,
    match_atom,
    mgu,
    mgu_all,
    rename_apart,
    unify_terms,
)

from helpers import random_atom


def test_apply_examples():
    s = Substitution({"x": Const("a")})
    assert str(apply(s, parse_clause("A(?x):MFalse"))) == "A(a):MFalse"
    c = parse_clause("E(a, ?u):True")
    assert apply(IDENTITY, c) == c
    assert str(apply(Substitution({"u": parse_term("f(a)")}), c)) == "E(a, f(a)):True"


def test_simultaneous_application():
    s = Substitution({"x": Var("y"), "y": Var("x")})
    assert apply(s, parse_term("g(?x, ?y)")) == parse_term("g(?y, ?x)")


def test_identity_bindings_dropped():
    assert Substitution({"x": Var("x")}) == IDENTITY
    assert len(Substitution({"x": Var("x"), "y": Const("a")})) == 1


def test_compose_examples():
    s = Substitution({"x": Const("a")})
    assert compose(IDENTITY, s) == s
    assert apply(compose(s, {"y": Const("b")}), parse_term("g(?x, ?y)")) == parse_term("g(a, b)")
    assert apply(compose({"x": Var("y")}, {"y": Const("a")}), Var("x")) == Const("a")


def test_mgu_examples():
    assert mgu(parse_atom("A(?x)"), parse_atom("A(a)")) == Substitution({"x": Const("a")})
    assert str(mgu(parse_atom("E(a, ?u)"), parse_atom("E(a, f(a))"))) == "[f(a)/u]"
    assert mgu(parse_atom("P(?x)"), parse_atom("P(f(?x))")) is None
    assert mgu(parse_atom("P(a)"), parse_atom("P(b)")) is None
    assert mgu(parse_atom("P(a)"), parse_atom("Q(a)")) is None
    assert mgu(parse_atom("P(f(a))"), parse_atom("P(g(a, a))")) is None
    assert mgu(parse_atom("P(a)"), parse_atom("P(a)")) == IDENTITY


def test_mgu_all_and_terms():
    s = mgu_all([parse_atom("P(?x, ?y)"), parse_atom("P(?y, a)"), parse_atom("P(a, ?z)")])
    assert apply(s, parse_atom("P(?x, ?z)")) == parse_atom("P(a, a)")
    assert unify_terms(parse_term("f(?x)"), parse_term("?x")) is None


def test_serialization():
    s = Substitution({"x": Const("a"), "u": parse_term("f(a)")})
    assert s.to_json() == {"x": "a", "u": "f(a)"}
    assert s(Var("u")) == parse_term("f(a)")


def test_rename_apart():
    c = parse_clause("P(?x, ?y1):True")
    renamed, ren = rename_apart(c, {"x", "y"})
    assert not free_vars(renamed) & {"x", "y"}
    assert str(renamed) == "P(?x1, ?y1):True"
    same, ren2 = rename_apart(c, {"z"})
    assert same is c and ren2 == IDENTITY


def _random_pairs(n, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        a1 = random_atom(rng, predicates={"P": 2}, depth=2, variables=["x", "y"],
                         functions={"f": 1, "g": 2}, constants=["a", "b"])
        a2 = random_atom(rng, predicates={"P": 2}, depth=2, variables=["u", "v", "x"],
                         functions={"f": 1, "g": 2}, constants=["a", "b"])
        out.append((a1, a2))
    return out


def test_mgu_soundness_idempotence_generality():
    unified = 0
    for a1, a2 in _random_pairs(2000, 7):
        g = mgu(a1, a2)
        if g is None:
            continue
        unified += 1
        i1 = apply(g, a1)
        assert i1 == apply(g, a2)
        assert apply(g, i1) == i1
        # symmetric call yields the same instance up to renaming
        g2 = mgu(a2, a1)
        s = {}
        assert match_atom(apply(g2, a1), i1, s) and match_atom(i1, apply(g2, a1), {})
    assert unified > 100


def test_mgu_most_general_against_ground_unifiers():
    # every ground unifier factors through the mgu
    rng = random.Random(3)
    ground = [Const("a"), Const("b"), Fn("f", (Const("a"),))]
    checked = 0
    for a1, a2 in _random_pairs(6000, 11):
        names = sorted(free_vars(a1) | free_vars(a2))
        theta = Substitution({v: rng.choice(ground) for v in names})
        if apply(theta, a1) != apply(theta, a2):
            continue
        g = mgu(a1, a2)
        assert g is not None
        inst = apply(g, a1)
        s = {}
        assert match_atom(inst, apply(theta, a1), s)
        checked += 1
    assert checked > 20


@given(st.sampled_from(["a", "b"]), st.sampled_from(["x", "y"]))
def test_compose_law(c, v):
    s1 = Substitution({v: Fn("f", (Var("z"),))})
    s2 = Substitution({"z": Const(c)})
    t = Fn("g", (Var("x"), Var("y")))
    assert apply(compose(s1, s2), t) == apply(s2, apply(s1, t))
