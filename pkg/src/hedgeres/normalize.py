"""Formula to clause-set conversion: NNF, Skolemization and CNF distribution.

Negation is pushed onto literals by negating their annotation:
``~(A:VTrue)`` becomes ``A:VFalse``.  Skolem symbols are named ``sk1, sk2,
...`` and never collide with symbols already in use.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .algebra import TruthTerm, negate
from .syntax import (
    And,
    AnnotatedClause,
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
    Problem,
    Var,
    free_vars,
    signature,
)
from .unify import apply, fresh_name


def to_nnf(f, negated: bool = False):
    """Eliminate ``->``, ``<->`` and ``~``; the result contains only literals, &, | and quantifiers."""
    kind = type(f)
    if kind is Lit:
        if not negated:
            return f
        lit = f.literal
        return Lit(Literal(lit.atom, negate(lit.annotation)))
    if kind is Not:
        return to_nnf(f.body, not negated)
    if kind is And:
        op = Or if negated else And
        return op(to_nnf(f.left, negated), to_nnf(f.right, negated))
    if kind is Or:
        op = And if negated else Or
        return op(to_nnf(f.left, negated), to_nnf(f.right, negated))
    if kind is Implies:
        return to_nnf(Or(Not(f.left), f.right), negated)
    if kind is Iff:
        return to_nnf(And(Or(Not(f.left), f.right), Or(Not(f.right), f.left)), negated)
    if kind is ForAll:
        op = Exists if negated else ForAll
        return op(f.var, to_nnf(f.body, negated))
    if kind is Exists:
        op = ForAll if negated else Exists
        return op(f.var, to_nnf(f.body, negated))
    raise TypeError(f"not a formula: {f!r}")


def substitute(f, s: dict):
    """Replace free variables of a formula; bound names in ``s`` are shadowed."""
    kind = type(f)
    if kind is Lit:
        return Lit(apply(s, f.literal))
    if kind is Not:
        return Not(substitute(f.body, s))
    if kind in (And, Or, Implies, Iff):
        return kind(substitute(f.left, s), substitute(f.right, s))
    inner = {k: v for k, v in s.items() if k != f.var}
    return kind(f.var, substitute(f.body, inner))


def standardize_apart(f, taken: set[str] | None = None):
    """Give every quantifier a distinct bound variable that is not free in ``f``."""
    taken = set(free_vars(f)) if taken is None else taken

    def walk(g):
        kind = type(g)
        if kind is Lit:
            return g
        if kind is Not:
            return Not(walk(g.body))
        if kind in (And, Or, Implies, Iff):
            return kind(walk(g.left), walk(g.right))
        var, body = g.var, g.body
        if var in taken:
            new = fresh_name(var, taken)
            body = substitute(body, {var: Var(new)})
            var = new
        taken.add(var)
        return kind(var, walk(body))

    return walk(f)


class Skolemizer:
    """Hands out fresh Skolem names for one clausification pass."""

    def __init__(self, used: Iterable[str] = ()):
        self.used = set(used)
        self._counter = itertools.count(1)

    def fresh(self) -> str:
        while True:
            name = f"sk{next(self._counter)}"
            if name not in self.used:
                self.used.add(name)
                return name


def skolemize(f, skolemizer: Skolemizer | None = None):
    """Drop universal quantifiers and replace existentials by Skolem terms.

    ``f`` must be in NNF.  Free variables of ``f`` count as outermost
    universals, so Skolem terms depend on them too.
    """
    if skolemizer is None:
        skolemizer = Skolemizer(signature([f])[1])
    f = standardize_apart(f)
    outer = sorted(free_vars(f))

    def walk(g, universals):
        kind = type(g)
        if kind is Lit:
            return g
        if kind in (And, Or):
            return kind(walk(g.left, universals), walk(g.right, universals))
        if kind is ForAll:
            return walk(g.body, universals + [g.var])
        if kind is Exists:
            name = skolemizer.fresh()
            if universals:
                witness = Fn(name, tuple(Var(u) for u in universals))
            else:
                witness = Const(name)
            return walk(substitute(g.body, {g.var: witness}), universals)
        raise TypeError(f"skolemize expects NNF, got {type(g).__name__}")

    return walk(f, outer)


def _cnf(f) -> list[tuple]:
    kind = type(f)
    if kind is Lit:
        return [(f.literal,)]
    if kind is And:
        return _cnf(f.left) + _cnf(f.right)
    if kind is Or:
        return [a + b for a in _cnf(f.left) for b in _cnf(f.right)]
    raise TypeError(f"to_cnf expects a quantifier-free NNF formula, got {kind.__name__}")


def to_cnf(f) -> list[Clause]:
    """Distribute | over & and return the deduplicated clauses."""
    seen = set()
    out = []
    for lits in _cnf(f):
        clause = Clause(lits)
        key = frozenset(clause.literals)
        if key not in seen:
            seen.add(key)
            out.append(clause)
    return out


def clausify(f, reliability: TruthTerm | None = None,
             skolemizer: Skolemizer | None = None) -> list[AnnotatedClause]:
    """Convert a formula to annotated clauses, each carrying ``reliability`` (default Top)."""
    if reliability is None:
        reliability = _algebra_of(f).top
    qf = skolemize(to_nnf(f), skolemizer)
    return [AnnotatedClause(c, reliability) for c in to_cnf(qf)]


def clausify_problem(problem: Problem) -> list[AnnotatedClause]:
    """All input clauses followed by the clauses of every formula, in source order."""
    skolemizer = Skolemizer(signature(problem.statements)[1])
    out = []
    for s in problem.statements:
        if isinstance(s, AnnotatedClause):
            out.append(s)
        else:
            out.extend(clausify(s, problem.algebra.top, skolemizer))
    return out


def _algebra_of(f):
    kind = type(f)
    while kind is not Lit:
        f = f.left if kind in (And, Or, Implies, Iff) else f.body
        kind = type(f)
    return f.literal.annotation.algebra
