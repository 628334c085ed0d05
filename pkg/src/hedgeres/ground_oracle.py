"""Herbrand universes and brute-force semantics for small problems.

Everything here decides questions by enumeration over a finite sample of
truth values (all terms up to a hedge depth plus Bot, W, Top), which makes it
an independent check on the resolution engine.

Two satisfaction readings are supported: ``strict`` asks every clause to
evaluate above W, ``weak`` accepts W itself.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .algebra import (
    AlgebraConfig,
    TruthTerm,
    compare,
    enumerate_terms,
    implies,
    iff,
    join,
    join_all,
    meet,
    meet_all,
    negate,
)
from .errors import EnumerationLimitExceeded, EvaluationError
from .syntax import (
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
    free_vars,
    iter_atoms,
    parse_atom,
    parse_term,
    parse_term_list,
    signature,
)
from .unify import apply

DEFAULT_CAP = 10**7
MODES = ("strict", "weak")


# Herbrand universe


@dataclass(frozen=True)
class HerbrandLevel:
    level: int
    terms: tuple

    def __contains__(self, t):
        return t in self.terms

    def __len__(self):
        return len(self.terms)


def _term_depth(t) -> int:
    return 1 + max(map(_term_depth, t.args)) if isinstance(t, Fn) else 0


def herbrand_universe(S: Iterable, k: int) -> HerbrandLevel:
    """The level-``k`` constant set: constants of ``S`` (or ``a``) closed ``k`` times under its functions."""
    if k < 0:
        raise ValueError("level must be non-negative")
    _, funcs = signature(S)
    consts = sorted(name for name, n in funcs.items() if n == 0)
    fns = sorted((name, n) for name, n in funcs.items() if n > 0)
    terms = [Const(c) for c in consts] or [Const("a")]
    seen = set(terms)
    for _ in range(k):
        layer = []
        for name, n in fns:
            for args in itertools.product(terms, repeat=n):
                t = Fn(name, args)
                if t not in seen:
                    seen.add(t)
                    layer.append(t)
        terms = terms + layer
    return HerbrandLevel(k, tuple(sorted(terms, key=lambda t: (_term_depth(t), str(t)))))


def herbrand_base(S: Iterable, k: int) -> list[Atom]:
    S = list(S)
    preds, _ = signature(S)
    universe = herbrand_universe(S, k).terms
    out = []
    for pred in sorted(preds):
        for args in itertools.product(universe, repeat=preds[pred]):
            out.append(Atom(pred, args))
    return out


def ground_instances(c, universe: Iterable) -> list:
    """Every instance of ``c`` with its variables replaced by members of ``universe``."""
    universe = list(universe.terms if isinstance(universe, HerbrandLevel) else universe)
    names = sorted(free_vars(c))
    out = []
    seen = set()
    for values in itertools.product(universe, repeat=len(names)):
        inst = apply(dict(zip(names, values)), c)
        if inst not in seen:
            seen.add(inst)
            out.append(inst)
    return out


def ground_clause_set(clauses: Iterable, k: int) -> list:
    clauses = list(clauses)
    universe = herbrand_universe(clauses, k)
    out = []
    for c in clauses:
        out.extend(ground_instances(c, universe))
    return out


# truth values


def eval_literal(atom_value: TruthTerm, annotation: TruthTerm) -> TruthTerm:
    """Truth value of ``A^annotation`` when ``A`` itself has value ``atom_value``."""
    w = atom_value.algebra.middle
    hi1 = compare(atom_value, w) > 0
    hi2 = compare(annotation, w) > 0
    if hi1 and hi2:
        return meet(atom_value, annotation)
    if not hi1 and not hi2:
        return negate(join(atom_value, annotation))
    if hi1:
        return join(negate(atom_value), annotation)
    return join(atom_value, negate(annotation))


def truth_sample(algebra: AlgebraConfig, depth: int) -> list[TruthTerm]:
    """Ascending truth values with at most ``depth`` hedges, plus Bot, W and Top."""
    return enumerate_terms(algebra, depth)


def accepts(value: TruthTerm, mode: str = "strict") -> bool:
    c = compare(value, value.algebra.middle)
    return c > 0 if mode == "strict" else c >= 0


# interpretations


@dataclass
class Interpretation:
    """A finite structure: domain, constant and function tables, atom values.

    Domain elements are ground terms.  A constant that is itself a domain
    element denotes itself unless ``constants`` says otherwise.
    """

    domain: tuple
    functions: dict = field(default_factory=dict)  # name -> {args tuple: element}
    atoms: dict = field(default_factory=dict)  # ground Atom over the domain -> TruthTerm
    constants: dict = field(default_factory=dict)  # name -> element

    def term_value(self, t, env: dict | None = None):
        if isinstance(t, Var):
            if env is None or t.name not in env:
                raise EvaluationError(f"unbound variable ?{t.name}")
            return env[t.name]
        if isinstance(t, Const):
            if t.name in self.constants:
                return self.constants[t.name]
            if t in self.domain:
                return t
            raise EvaluationError(f"constant {t.name!r} is not interpreted")
        args = tuple(self.term_value(a, env) for a in t.args)
        try:
            return self.functions[t.name][args]
        except KeyError:
            shown = ", ".join(map(str, args))
            raise EvaluationError(f"function {t.name}({shown}) is not interpreted") from None

    def atom_value(self, atom: Atom, env: dict | None = None) -> TruthTerm:
        key = Atom(atom.pred, tuple(self.term_value(a, env) for a in atom.args))
        try:
            return self.atoms[key]
        except KeyError:
            raise EvaluationError(f"atom {key} has no truth value") from None

    def to_json(self) -> dict:
        funcs = {}
        for name, table in self.functions.items():
            funcs[name] = {", ".join(map(str, args)): str(v) for args, v in table.items()}
        out = {
            "domain": [str(d) for d in self.domain],
            "functions": funcs,
            "atoms": {str(a): str(v) for a, v in self.atoms.items()},
        }
        if self.constants:
            out["constants"] = {k: str(v) for k, v in self.constants.items()}
        return out

    @classmethod
    def from_json(cls, data: dict | str, algebra: AlgebraConfig) -> Interpretation:
        if isinstance(data, str):
            data = json.loads(data)
        domain = tuple(parse_term(d) for d in data.get("domain", []))
        functions = {}
        for name, table in data.get("functions", {}).items():
            functions[name] = {parse_term_list(k): parse_term(v) for k, v in table.items()}
        atoms = {parse_atom(k): algebra.term(v) for k, v in data.get("atoms", {}).items()}
        constants = {k: parse_term(v) for k, v in data.get("constants", {}).items()}
        return cls(domain, functions, atoms, constants)


def eval_formula(f, interp: Interpretation, env: dict | None = None) -> TruthTerm:
    """Truth value of a formula or clause.

    Free variables (including all clause variables) are read universally
    over the interpretation's domain.
    """
    env = dict(env or {})
    free = sorted(free_vars(f) - set(env))
    if free:
        values = []
        for combo in itertools.product(interp.domain, repeat=len(free)):
            values.append(eval_formula(f, interp, {**env, **dict(zip(free, combo))}))
        return meet_all(values, _algebra(f, interp))
    if isinstance(f, AnnotatedClause):
        f = f.clause
    if isinstance(f, Clause):
        alg = _algebra(f, interp)
        return join_all((_eval_lit(l, interp, env) for l in f), alg)
    kind = type(f)
    if kind is Lit:
        return _eval_lit(f.literal, interp, env)
    if kind is Not:
        return negate(eval_formula(f.body, interp, env))
    if kind in (And, Or, Implies, Iff):
        left, right = eval_formula(f.left, interp, env), eval_formula(f.right, interp, env)
        op = {And: meet, Or: join, Implies: implies, Iff: iff}[kind]
        return op(left, right)
    if kind in (ForAll, Exists):
        values = [eval_formula(f.body, interp, {**env, f.var: d}) for d in interp.domain]
        reduce = meet_all if kind is ForAll else join_all
        return reduce(values, _algebra(f, interp))
    raise TypeError(f"cannot evaluate {f!r}")


def _eval_lit(lit: Literal, interp: Interpretation, env: dict) -> TruthTerm:
    return eval_literal(interp.atom_value(lit.atom, env), lit.annotation)


def _algebra(f, interp: Interpretation) -> AlgebraConfig:
    for atom_value in interp.atoms.values():
        return atom_value.algebra
    for node in _literals(f):
        return node.annotation.algebra
    return AlgebraConfig.default()


def _literals(f):
    if isinstance(f, AnnotatedClause):
        f = f.clause
    if isinstance(f, Clause):
        yield from f
    elif isinstance(f, Lit):
        yield f.literal
    elif isinstance(f, Not):
        yield from _literals(f.body)
    elif isinstance(f, (And, Or, Implies, Iff)):
        yield from _literals(f.left)
        yield from _literals(f.right)
    elif isinstance(f, (ForAll, Exists)):
        yield from _literals(f.body)


# ground satisfiability by ordered exhaustive search


@dataclass
class Satisfiable:
    interpretation: Interpretation
    checked: int = 0
    status: str = field(default="sat", init=False)


@dataclass
class Unsatisfiable:
    checked: int = 0
    status: str = field(default="unsat", init=False)


def _as_clause(c) -> Clause:
    return c.clause if isinstance(c, AnnotatedClause) else c


def _ground_atoms(clauses: Sequence[Clause]) -> list[Atom]:
    atoms = {}
    for c in clauses:
        if free_vars(c):
            raise ValueError(f"clause {c} is not ground")
        for lit in c:
            atoms.setdefault(lit.atom, None)
    return list(atoms)


def _search(constraints, atoms, sample, mode, cap):
    """Ordered depth-first enumeration of atom valuations.

    ``constraints`` is a list of ``(literals, wanted)``; a valuation is
    accepted when every clause whose ``wanted`` flag is True is accepted and
    every clause flagged False is not.  The first accepted valuation in
    lexicographic order (atoms in order, values ascending) is returned,
    which is exactly the first hit of a flat enumeration.
    """
    pos = {a: i for i, a in enumerate(atoms)}
    anns = sorted({lit.annotation for lits, _ in constraints for lit in lits}, key=str)
    ann_idx = {a: i for i, a in enumerate(anns)}
    ok = [[accepts(eval_literal(v, a), mode) for a in anns] for v in sample]
    # constraint k is decided once its last atom has a value
    due: list[list] = [[] for _ in atoms]
    for lits, wanted in constraints:
        if not lits:
            if wanted:
                return None, 0
            continue
        coded = [(pos[l.atom], ann_idx[l.annotation]) for l in lits]
        due[max(p for p, _ in coded)].append((coded, wanted))
    values = [0] * len(atoms)
    checked = 0

    def descend(level):
        nonlocal checked
        if level == len(atoms):
            return True
        for v in range(len(sample)):
            checked += 1
            if checked > cap:
                raise EnumerationLimitExceeded(
                    f"more than {cap} partial interpretations examined"
                )
            values[level] = v
            good = True
            for coded, wanted in due[level]:
                hit = any(ok[values[p]][a] for p, a in coded)
                if hit != wanted:
                    good = False
                    break
            if good and descend(level + 1):
                return True
        return False

    found = descend(0)
    return (list(values) if found else None), checked


def _witness(atoms, values, sample) -> Interpretation:
    terms = {}
    functions: dict = {}
    for atom in atoms:
        for arg in atom.args:
            stack = [arg]
            while stack:
                t = stack.pop()
                terms.setdefault(t, None)
                if isinstance(t, Fn):
                    functions.setdefault(t.name, {})[t.args] = t
                    stack.extend(t.args)
    domain = tuple(sorted(terms, key=lambda t: (_term_depth(t), str(t))))
    return Interpretation(domain, functions, {a: sample[v] for a, v in zip(atoms, values)})


def check_sat(S: Iterable, truth_depth: int = 2, mode: str = "strict",
              cap: int = DEFAULT_CAP, algebra: AlgebraConfig | None = None):
    """Decide satisfiability of a ground clause set over the truth sample.

    Returns :class:`Satisfiable` with the first model in enumeration order,
    or :class:`Unsatisfiable`.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    clauses = [_as_clause(c) for c in S]
    algebra = algebra or _algebra_of_clauses(clauses)
    atoms = _ground_atoms(clauses)
    sample = truth_sample(algebra, truth_depth)
    values, checked = _search([(list(c), True) for c in clauses], atoms, sample, mode, cap)
    if values is None:
        return Unsatisfiable(checked)
    return Satisfiable(_witness(atoms, values, sample), checked)


def entails(premises: Iterable, conclusion, truth_depth: int = 2,
            cap: int = DEFAULT_CAP, algebra: AlgebraConfig | None = None) -> bool:
    """True when every sampled strict model of ``premises`` strictly satisfies ``conclusion``."""
    premises = [_as_clause(c) for c in premises]
    conclusion = _as_clause(conclusion)
    algebra = algebra or _algebra_of_clauses(premises + [conclusion])
    atoms = _ground_atoms(premises + [conclusion])
    sample = truth_sample(algebra, truth_depth)
    constraints = [(list(c), True) for c in premises] + [(list(conclusion), False)]
    values, _ = _search(constraints, atoms, sample, "strict", cap)
    return values is None


def _algebra_of_clauses(clauses) -> AlgebraConfig:
    for c in clauses:
        for lit in c:
            return lit.annotation.algebra
    return AlgebraConfig.default()


# finite-domain model search for formulas


class _VectorEval:
    """Evaluates a formula for every atom valuation at once.

    Truth values are encoded as indices into an ascending list closed under
    negation, so meet/join are elementwise min/max.
    """

    def __init__(self, algebra, sample, annotations):
        values = set(sample) | set(annotations)
        values |= {negate(v) for v in values}
        self.values = sorted(values)
        self.index = {v: i for i, v in enumerate(self.values)}
        self.neg = np.array([self.index[negate(v)] for v in self.values])
        self.middle = self.index[algebra.middle]
        self.top = self.index[algebra.top]
        self.bottom = self.index[algebra.bottom]
        self.sample_idx = np.array([self.index[v] for v in sample])
        self.lit_table = {}
        for a in annotations:
            col = [self.index[eval_literal(v, a)] for v in self.values]
            self.lit_table[a] = np.array(col)

    def run(self, f, interp: Interpretation, atom_cols: dict, env: dict):
        kind = type(f)
        if isinstance(f, AnnotatedClause):
            f = f.clause
            kind = Clause
        if kind is Clause:
            out = None
            for lit in f:
                col = self._lit(lit, interp, atom_cols, env)
                out = col if out is None else np.maximum(out, col)
            return out if out is not None else self.bottom
        if kind is Lit:
            return self._lit(f.literal, interp, atom_cols, env)
        if kind is Not:
            return self.neg[self.run(f.body, interp, atom_cols, env)]
        if kind in (And, Or, Implies, Iff):
            a = self.run(f.left, interp, atom_cols, env)
            b = self.run(f.right, interp, atom_cols, env)
            if kind is And:
                return np.minimum(a, b)
            if kind is Or:
                return np.maximum(a, b)
            ab = np.maximum(self.neg[a], b)
            if kind is Implies:
                return ab
            return np.minimum(ab, np.maximum(self.neg[b], a))
        if kind in (ForAll, Exists):
            parts = [self.run(f.body, interp, atom_cols, {**env, f.var: d}) for d in interp.domain]
            red = np.minimum if kind is ForAll else np.maximum
            out = parts[0]
            for p in parts[1:]:
                out = red(out, p)
            return out
        raise TypeError(f"cannot evaluate {f!r}")

    def _lit(self, lit, interp, atom_cols, env):
        key = Atom(lit.atom.pred, tuple(interp.term_value(a, env) for a in lit.atom.args))
        return self.lit_table[lit.annotation][atom_cols[key]]

    def closed(self, f, interp, atom_cols):
        free = sorted(free_vars(f))
        parts = []
        for combo in itertools.product(interp.domain, repeat=len(free)):
            parts.append(self.run(f, interp, atom_cols, dict(zip(free, combo))))
        out = parts[0]
        for p in parts[1:]:
            out = np.minimum(out, p)
        return out


def _structures(domain, consts, funcs):
    """Every assignment of constants and function tables over ``domain``."""
    const_choices = [[(c, d) for d in domain] for c in consts]
    table_choices = []
    for name, n in funcs:
        arg_tuples = list(itertools.product(domain, repeat=n))
        options = []
        for outputs in itertools.product(domain, repeat=len(arg_tuples)):
            options.append((name, dict(zip(arg_tuples, outputs))))
        table_choices.append(options)
    for cs in itertools.product(*const_choices):
        for ts in itertools.product(*table_choices):
            yield dict(cs), dict(ts)


def find_model(statements: Sequence, domain: int | Sequence = 2, truth_depth: int = 1,
               mode: str = "strict", cap: int = DEFAULT_CAP,
               algebra: AlgebraConfig | None = None, chunk: int = 1 << 16) -> Interpretation | None:
    """Search all interpretations over a finite domain for a model of ``statements``.

    ``domain`` is a size (fresh elements ``d0, d1, ...``; every constant is
    enumerated) or an explicit list of ground terms (constants that are
    listed denote themselves).  Clauses and free variables are read
    universally.  Returns the first model in enumeration order or None.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    statements = list(statements)
    if isinstance(domain, int):
        domain = tuple(Const(f"d{i}") for i in range(domain))
        fixed = set()
    else:
        domain = tuple(domain)
        fixed = {t.name for t in domain if isinstance(t, Const)}
    preds, funcs = signature(statements)
    consts = sorted(c for c, n in funcs.items() if n == 0 and c not in fixed)
    fns = sorted((f, n) for f, n in funcs.items() if n > 0)
    lits = [l for s in statements for l in _literals(s)]
    algebra = algebra or (lits[0].annotation.algebra if lits else AlgebraConfig.default())
    sample = truth_sample(algebra, truth_depth)
    ev = _VectorEval(algebra, sample, {l.annotation for l in lits})
    atoms = [Atom(p, args) for p in sorted(preds) for args in itertools.product(domain, repeat=preds[p])]
    n_rows = len(sample) ** len(atoms)
    n_struct = len(domain) ** len(consts)
    for _, n in fns:
        n_struct *= len(domain) ** (len(domain) ** n)
    if n_rows * n_struct > cap:
        raise EnumerationLimitExceeded(
            f"{n_struct} structures x {n_rows} valuations exceeds the cap of {cap}"
        )
    radix = len(sample)
    for const_map, tables in _structures(domain, consts, fns):
        interp = Interpretation(domain, tables, {}, const_map)
        for start in range(0, n_rows, chunk):
            rows = np.arange(start, min(start + chunk, n_rows))
            digits = {}
            rest = rows.copy()
            for atom in reversed(atoms):
                digits[atom] = rest % radix
                rest //= radix
            atom_cols = {a: ev.sample_idx[digits[a]] for a in atoms}
            good = np.ones(len(rows), dtype=bool)
            for s in statements:
                val = ev.closed(s, interp, atom_cols)
                good &= (val > ev.middle) if mode == "strict" else (val >= ev.middle)
                if not good.any():
                    break
            hits = np.flatnonzero(good)
            if hits.size:
                k = hits[0]
                interp.atoms = {a: ev.values[atom_cols[a][k]] for a in atoms}
                return interp
    return None


def formula_satisfiable(statements: Sequence, domain: int | Sequence = 2, truth_depth: int = 1,
                        mode: str = "strict", **kw) -> bool:
    return find_model(statements, domain, truth_depth, mode, **kw) is not None
