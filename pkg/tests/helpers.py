"""Shared fixtures data and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from hedgeres.algebra import POSITIVE, AlgebraConfig, TruthTerm, enumerate_terms
from hedgeres.syntax import (
    And,
    AnnotatedClause,
    Atom,
    Clause,
    Const,
    Exists,
    Fn,
    ForAll,
    Iff,
    Implies,
    Lit,
    Literal,
    Not,
    Or,
    Var,
    read_problem,
)

ROOT = Path(__file__).resolve().parents[1]
WORKED_EXAMPLE = ROOT / "notebooks" / "problems" / "worked_example.lfol"

ALG = AlgebraConfig.default()


def T(text: str) -> TruthTerm:
    return ALG.term(text)


def worked_clauses() -> list[AnnotatedClause]:
    return read_problem(WORKED_EXAMPLE.read_text()).clauses


# inference scripts for the two refutations of the worked example
TREE_1 = [("resolve", (0, 4), (0, 0)), ("resolve", (7, 5), (0, 0)),
          ("resolve", (8, 1), (0, 0)), ("resolve", (9, 6), (0, 0))]
TREE_2 = [("resolve", (1, 6), (1, 0)), ("resolve", (7, 2), (0, 0)),
          ("resolve", (8, 3), (0, 0))]


def interval_embedding(alg: AlgebraConfig, depth: int) -> dict[TruthTerm, Fraction]:
    """Place every term of hedge depth <= ``depth`` on the rational line.

    Each term owns an interval.  Its one-hedge extensions get sub-intervals:
    hedges that move the term up sit above its own point, the others below,
    and within a side a stronger hedge is placed further away.  This builds
    the order top-down from hedge directions alone, without the common-prefix
    walk used by the library.
    """
    pos = {}
    pos[alg.bottom], pos[alg.middle], pos[alg.top] = Fraction(0), Fraction(1, 2), Fraction(1)

    def place(term, direction, lo, hi, level):
        children = []
        if level < depth:
            for h in alg.hedges:
                s_h = 1 if h in alg.plus_hedges else -1
                if term.hedges:
                    d = alg.rel(h, term.hedges[0]) * direction
                else:
                    d = s_h * (1 if term.base == POSITIVE else -1)
                children.append((h, d))
        below = sorted((c for c in children if c[1] < 0), key=lambda c: -alg.strength(c[0]))
        above = sorted((c for c in children if c[1] > 0), key=lambda c: alg.strength(c[0]))
        slots = below + [None] + above
        width = (hi - lo) / len(slots)
        for n, slot in enumerate(slots):
            a, b = lo + n * width, lo + (n + 1) * width
            if slot is None:
                pos[term] = (a + b) / 2
            else:
                h, d = slot
                child = TruthTerm((h,) + term.hedges, term.base, alg)
                place(child, d, a, b, level + 1)

    place(alg.false, -1, Fraction(0), Fraction(1, 2), 0)
    place(alg.true, 1, Fraction(1, 2), Fraction(1), 0)
    return pos


def ground_atoms(n: int) -> list[Atom]:
    return [Atom(name) for name in "PQR"[:n]]


def random_ground_clause(rng: random.Random, atoms, annotations, max_len=3) -> Clause:
    k = rng.randint(1, max_len)
    return Clause(tuple(Literal(rng.choice(atoms), rng.choice(annotations)) for _ in range(k)))


# random first-order syntax

PREDICATES = {"P": 1, "Q": 2, "R": 0}
FUNCTIONS = {"f": 1, "g": 2}
CONSTANTS = ["a", "b"]
VARIABLES = ["x", "y", "z"]


def random_term(rng, depth=2, variables=VARIABLES, functions=FUNCTIONS, constants=CONSTANTS):
    roll = rng.random()
    if depth <= 0 or roll < 0.4 or not functions:
        return Var(rng.choice(variables)) if variables and rng.random() < 0.6 else Const(rng.choice(constants))
    name = rng.choice(sorted(functions))
    args = tuple(random_term(rng, depth - 1, variables, functions, constants) for _ in range(functions[name]))
    return Fn(name, args)


def random_atom(rng, predicates=PREDICATES, **kw) -> Atom:
    p = rng.choice(sorted(predicates))
    return Atom(p, tuple(random_term(rng, **kw) for _ in range(predicates[p])))


def random_formula(rng, annotations, depth=3, predicates=PREDICATES, bound=(), quantifiers=2, **kw):
    """A random formula; returns (formula, quantifiers left)."""
    if depth <= 0 or rng.random() < 0.25:
        atom = random_atom(rng, predicates, variables=list(bound), **kw) if bound else \
            random_atom(rng, predicates, variables=[], **kw)
        return Lit(Literal(atom, rng.choice(annotations))), quantifiers
    kind = rng.choice(["not", "and", "or", "imp", "iff", "q", "q"])
    if kind == "q" and quantifiers > 0:
        var = VARIABLES[len(bound) % len(VARIABLES)]
        body, left = random_formula(rng, annotations, depth - 1, predicates, bound + (var,), quantifiers - 1, **kw)
        return rng.choice([ForAll, Exists])(var, body), left
    if kind in ("not", "q"):
        body, left = random_formula(rng, annotations, depth - 1, predicates, bound, quantifiers, **kw)
        return Not(body), left
    a, left = random_formula(rng, annotations, depth - 1, predicates, bound, quantifiers, **kw)
    b, left = random_formula(rng, annotations, depth - 1, predicates, bound, left, **kw)
    op = {"and": And, "or": Or, "imp": Implies, "iff": Iff}[kind]
    return op(a, b), left


# acceptance bookkeeping

RESULTS: list[tuple[int, str, bool, str]] = []


@contextmanager
def criterion(number: int, title: str, budget: float | None = None):
    """Record a pass/fail line for an acceptance criterion; enforce its time budget."""
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
    except BaseException as exc:
        RESULTS.append((number, title, False, f"{type(exc).__name__}: {exc}".splitlines()[0]))
        raise
    RESULTS.append((number, title, True, f"{time.perf_counter() - start:.2f}s"))


def all_terms(depth):
    return enumerate_terms(ALG, depth)


def pairs(xs):
    return itertools.product(xs, repeat=2)
