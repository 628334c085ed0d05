"""Abstract syntax, reader and printer for linguistic first-order problems.

Surface syntax::

    algebra { generators: False, True  positive: M < V  negative: P < L }
    clause A(?x):MFalse | B(?z):MFalse | C(?x):PTrue.
    clause E(a, ?u):True @ MTrue.
    formula forall ?x . (S(?x):True -> G(?x):MTrue).

Variables are written ``?name``; constants and function symbols start with a
lowercase letter and predicates with an uppercase one.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Union

from ._lexer import Token, TokenStream
from .algebra import MIDDLE, TOP, AlgebraConfig, TruthTerm, parse_algebra_block
from .errors import ArityError, ConfigError, ParseError

SKOLEM_RE = re.compile(r"sk\d+$")

log = logging.getLogger(__name__)


# first-order terms


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return "?" + self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Fn:
    name: str
    args: tuple

    def __str__(self):
        return f"{self.name}({', '.join(map(str, self.args))})"


FOTerm = Union[Var, Const, Fn]


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple = ()

    def __str__(self):
        if not self.args:
            return self.pred
        return f"{self.pred}({', '.join(map(str, self.args))})"


@dataclass(frozen=True)
class Literal:
    """``A^alpha``: the atom ``A`` annotated with the truth term ``alpha``."""

    atom: Atom
    annotation: TruthTerm

    def __str__(self):
        return f"{self.atom}:{self.annotation}"


@dataclass(frozen=True)
class Clause:
    """A disjunction of literals.  Identical literals are merged on construction."""

    literals: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "literals", tuple(dict.fromkeys(self.literals)))

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    def __getitem__(self, i):
        return self.literals[i]

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def __str__(self):
        if not self.literals:
            return "[]"
        return " | ".join(map(str, self.literals))


@dataclass(frozen=True)
class AnnotatedClause:
    """A clause paired with its reliability, printed as ``(C, alpha)``."""

    clause: Clause
    reliability: TruthTerm

    def __post_init__(self):
        if self.reliability.base < MIDDLE:
            raise ValueError(f"reliability must be at least W, got {self.reliability}")

    def __str__(self):
        return f"({self.clause}, {self.reliability})"


# formulas


@dataclass(frozen=True)
class Lit:
    literal: Literal


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Implies:
    left: object
    right: object


@dataclass(frozen=True)
class Iff:
    left: object
    right: object


@dataclass(frozen=True)
class ForAll:
    var: str
    body: object


@dataclass(frozen=True)
class Exists:
    var: str
    body: object


Formula = Union[Lit, Not, And, Or, Implies, Iff, ForAll, Exists]
BINARY = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Lit: 6, ForAll: 0, Exists: 0}


@dataclass
class Problem:
    """Statements of one problem file in source order."""

    algebra: AlgebraConfig
    statements: list = field(default_factory=list)

    @property
    def clauses(self) -> list[AnnotatedClause]:
        return [s for s in self.statements if isinstance(s, AnnotatedClause)]

    @property
    def formulas(self) -> list:
        return [s for s in self.statements if not isinstance(s, AnnotatedClause)]


# printing


def format_formula(f, prec: int = 0) -> str:
    kind = type(f)
    if kind is Lit:
        return str(f.literal)
    if kind is Not:
        out = "~" + format_formula(f.body, 5)
    elif kind in BINARY:
        p = _PREC[kind]
        if kind is Implies:
            left, right = format_formula(f.left, p + 1), format_formula(f.right, p)
        else:
            left, right = format_formula(f.left, p), format_formula(f.right, p + 1)
        out = f"{left} {BINARY[kind]} {right}"
    elif kind in (ForAll, Exists):
        q = "forall" if kind is ForAll else "exists"
        out = f"{q} ?{f.var} . {format_formula(f.body, 0)}"
    else:
        raise TypeError(f"not a formula: {f!r}")
    if _PREC[kind] < prec or (kind in (ForAll, Exists) and prec > 0):
        return f"({out})"
    return out


def format_statement(s) -> str:
    if isinstance(s, AnnotatedClause):
        if s.clause.is_empty:
            raise ValueError("the empty clause cannot be written as a statement")
        rel = "" if s.reliability.base == TOP else f" @ {s.reliability}"
        return f"clause {s.clause}{rel}."
    return f"formula {format_formula(s)}."


def format_algebra(alg: AlgebraConfig) -> str:
    signs = " ".join(f"{k}:{'+' if s > 0 else '-'}{h}" for (k, h), s in alg.sign_relation)
    return (
        "algebra {\n"
        f"  generators: {alg.negative_generator}, {alg.positive_generator}\n"
        f"  positive: {' < '.join(alg.plus_hedges)}\n"
        f"  negative: {' < '.join(alg.minus_hedges)}\n"
        f"  sign {{ {signs} }}\n"
        "}\n"
    )


def format_problem(problem: Problem, with_algebra: bool = False) -> str:
    lines = [format_algebra(problem.algebra)] if with_algebra else []
    lines += [format_statement(s) for s in problem.statements]
    return "\n".join(lines) + "\n"


def to_text(node) -> str:
    """Print any syntax node in the surface syntax accepted by the reader."""
    if isinstance(node, Problem):
        return format_problem(node)
    if isinstance(node, (Lit, Not, And, Or, Implies, Iff, ForAll, Exists)):
        return format_formula(node)
    return str(node)


# free variables


def term_vars(t) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Fn):
        out = set()
        for a in t.args:
            out |= term_vars(a)
        return out
    return set()


def free_vars(node) -> set[str]:
    if isinstance(node, (Var, Const, Fn)):
        return term_vars(node)
    if isinstance(node, Atom):
        return set().union(*map(term_vars, node.args)) if node.args else set()
    if isinstance(node, Literal):
        return free_vars(node.atom)
    if isinstance(node, Clause):
        return set().union(*(free_vars(l) for l in node.literals)) if node.literals else set()
    if isinstance(node, AnnotatedClause):
        return free_vars(node.clause)
    if isinstance(node, Lit):
        return free_vars(node.literal)
    if isinstance(node, Not):
        return free_vars(node.body)
    if isinstance(node, (And, Or, Implies, Iff)):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, (ForAll, Exists)):
        return free_vars(node.body) - {node.var}
    raise TypeError(f"no free variables for {node!r}")


def iter_atoms(node) -> Iterable[Atom]:
    if isinstance(node, Atom):
        yield node
    elif isinstance(node, Literal):
        yield node.atom
    elif isinstance(node, (Clause, AnnotatedClause)):
        clause = node.clause if isinstance(node, AnnotatedClause) else node
        for lit in clause:
            yield lit.atom
    elif isinstance(node, Lit):
        yield node.literal.atom
    elif isinstance(node, Not):
        yield from iter_atoms(node.body)
    elif isinstance(node, (And, Or, Implies, Iff)):
        yield from iter_atoms(node.left)
        yield from iter_atoms(node.right)
    elif isinstance(node, (ForAll, Exists)):
        yield from iter_atoms(node.body)


def iter_subterms(t) -> Iterable:
    yield t
    if isinstance(t, Fn):
        for a in t.args:
            yield from iter_subterms(a)


def signature(nodes: Iterable) -> tuple[dict[str, int], dict[str, int]]:
    """Predicate and function arities (constants have arity 0) used by ``nodes``."""
    preds: dict[str, int] = {}
    funcs: dict[str, int] = {}
    for node in nodes:
        for atom in iter_atoms(node):
            preds.setdefault(atom.pred, len(atom.args))
            for arg in atom.args:
                for t in iter_subterms(arg):
                    if isinstance(t, Const):
                        funcs.setdefault(t.name, 0)
                    elif isinstance(t, Fn):
                        funcs.setdefault(t.name, len(t.args))
    return preds, funcs


# reading


class _Reader:
    def __init__(self, text: str, algebra: AlgebraConfig | None, allow_skolem: bool = False):
        self.s = TokenStream(text)
        self.algebra = algebra
        self.allow_skolem = allow_skolem
        self.preds: dict[str, int] = {}
        self.funcs: dict[str, int] = {}

    def problem(self) -> Problem:
        if self.s.at("algebra"):
            self.algebra = parse_algebra_block(self.s)
        if self.algebra is None:
            self.algebra = AlgebraConfig.default()
        problem = Problem(self.algebra)
        while self.s.peek.kind != "eof":
            problem.statements.append(self.statement())
        return problem

    def statement(self):
        tok = self.s.peek
        if self.s.accept("clause"):
            if self.s.at("."):
                self.s.fail("a clause needs at least one literal")
            lits = [self.literal()]
            while self.s.accept("|"):
                lits.append(self.literal())
            rel = self.algebra.top
            if self.s.accept("@"):
                rel = self.truth_term()
            self.s.expect(".")
            if rel.base < MIDDLE:
                raise ParseError(f"reliability {rel} is below W", tok.line, tok.col)
            return AnnotatedClause(Clause(tuple(lits)), rel)
        if self.s.accept("formula"):
            f = self.expr()
            self.s.expect(".")
            return f
        self.s.fail("expected 'clause' or 'formula'")

    # formulas, lowest precedence first

    def expr(self):
        if self.s.at("forall") or self.s.at("exists"):
            return self.quantified()
        left = self.implication()
        while self.s.accept("<->"):
            left = Iff(left, self.implication())
        return left

    def quantified(self):
        q = self.s.next()
        var = self.s.expect_kind("var", "variable").text[1:]
        self.s.expect(".")
        body = self.expr()
        if var not in free_vars(body):
            log.warning("line %d, column %d: %s ?%s binds nothing", q.line, q.col, q.text, var)
        q = q.text
        return ForAll(var, body) if q == "forall" else Exists(var, body)

    def implication(self):
        left = self.disjunction()
        if self.s.accept("->"):
            right = self.quantified() if self._at_quantifier() else self.implication()
            return Implies(left, right)
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.s.accept("|"):
            left = Or(left, self.conjunction())
        return left

    def conjunction(self):
        left = self.unary()
        while self.s.accept("&"):
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.s.accept("~"):
            return Not(self.unary())
        if self.s.accept("("):
            f = self.expr()
            self.s.expect(")")
            return f
        if self._at_quantifier():
            return self.quantified()
        return Lit(self.literal())

    def _at_quantifier(self) -> bool:
        return (self.s.at("forall") or self.s.at("exists")) and self.s.peek_at(1).kind == "var"

    # literals and terms

    def literal(self) -> Literal:
        atom = self.atom()
        self.s.expect(":")
        return Literal(atom, self.truth_term())

    def truth_term(self) -> TruthTerm:
        tok = self.s.expect_kind("id", "truth term")
        try:
            return self.algebra.term(tok.text)
        except ConfigError as exc:
            raise ParseError(str(exc), tok.line, tok.col) from None

    def atom(self) -> Atom:
        tok = self.s.expect_kind("id", "predicate")
        if not tok.text[0].isupper():
            self.s.fail("predicates start with an uppercase letter", tok)
        args = self.arguments()
        self._arity(self.preds, tok, len(args), "predicate")
        return Atom(tok.text, args)

    def arguments(self) -> tuple:
        if not self.s.accept("("):
            return ()
        args = [self.term()]
        while self.s.accept(","):
            args.append(self.term())
        self.s.expect(")")
        return tuple(args)

    def term(self):
        tok = self.s.next()
        if tok.kind == "var":
            return Var(tok.text[1:])
        if tok.kind != "id" or not tok.text[0].islower():
            self.s.fail("expected a variable, constant or function term", tok)
        if SKOLEM_RE.match(tok.text) and not self.allow_skolem:
            raise ParseError(f"{tok.text!r} is reserved for Skolem symbols", tok.line, tok.col)
        args = self.arguments()
        self._arity(self.funcs, tok, len(args), "function")
        return Fn(tok.text, args) if args else Const(tok.text)

    def _arity(self, table: dict, tok: Token, n: int, what: str):
        seen = table.setdefault(tok.text, n)
        if seen != n:
            raise ArityError(f"{what} {tok.text!r} used with arity {n} and {seen}", tok.line, tok.col)


def read_problem(text: str, algebra: AlgebraConfig | None = None) -> Problem:
    """Parse a problem file.  An inline ``algebra`` block overrides ``algebra``."""
    return _Reader(text, algebra).problem()


def parse_problem(text: str, algebra: AlgebraConfig | None = None):
    """Return ``(clauses, formulas)`` of a problem text."""
    problem = read_problem(text, algebra)
    return problem.clauses, problem.formulas


def parse_formula(text: str, algebra: AlgebraConfig | None = None):
    reader = _Reader(text, algebra or AlgebraConfig.default())
    f = reader.expr()
    if reader.s.peek.kind != "eof":
        reader.s.fail("unexpected trailing input")
    return f


def parse_clause(text: str, algebra: AlgebraConfig | None = None) -> Clause:
    """Parse ``L1 | L2 | ...`` (without the ``clause`` keyword); ``[]`` is the empty clause."""
    reader = _Reader(text, algebra or AlgebraConfig.default())
    if reader.s.accept("[]"):
        lits = []
    else:
        lits = [reader.literal()]
        while reader.s.accept("|"):
            lits.append(reader.literal())
    if reader.s.peek.kind != "eof":
        reader.s.fail("unexpected trailing input")
    return Clause(tuple(lits))


def parse_term(text: str):
    reader = _Reader(text, AlgebraConfig.default(), allow_skolem=True)
    t = reader.term()
    if reader.s.peek.kind != "eof":
        reader.s.fail("unexpected trailing input")
    return t


def parse_atom(text: str) -> Atom:
    reader = _Reader(text, AlgebraConfig.default(), allow_skolem=True)
    a = reader.atom()
    if reader.s.peek.kind != "eof":
        reader.s.fail("unexpected trailing input")
    return a


def parse_term_list(text: str) -> tuple:
    reader = _Reader(text, AlgebraConfig.default(), allow_skolem=True)
    out = [reader.term()]
    while reader.s.accept(","):
        out.append(reader.term())
    if reader.s.peek.kind != "eof":
        reader.s.fail("unexpected trailing input")
    return tuple(out)

