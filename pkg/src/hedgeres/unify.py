"""Substitutions and Robinson unification with occurs check."""

from __future__ import annotations

from typing import Iterable, Mapping

from .syntax import (
    AnnotatedClause,
    Atom,
    Clause,
    Const,
    Fn,
    Literal,
    Var,
    free_vars,
)


class Substitution(Mapping):
    """An immutable finite map from variable names to terms.

    Applying a substitution replaces all bound variables simultaneously;
    annotations and reliabilities are left untouched.
    """

    __slots__ = ("_map",)

    def __init__(self, bindings: Mapping | Iterable = ()):
        m = dict(bindings)
        self._map = {k: v for k, v in m.items() if v != Var(k)}

    def __getitem__(self, name):
        return self._map[name]

    def __iter__(self):
        return iter(self._map)

    def __len__(self):
        return len(self._map)

    def __repr__(self):
        return "Substitution({" + ", ".join(f"{k}: {v}" for k, v in self._map.items()) + "})"

    def __str__(self):
        return "[" + ", ".join(f"{v}/{k}" for k, v in self._map.items()) + "]"

    def __eq__(self, other):
        if isinstance(other, Substitution):
            return self._map == other._map
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def to_json(self) -> dict[str, str]:
        return {k: str(v) for k, v in self._map.items()}

    def __call__(self, x):
        return apply(self, x)


IDENTITY = Substitution()


def apply_term(s: Mapping, t):
    if isinstance(t, Var):
        return s.get(t.name, t)
    if isinstance(t, Fn):
        return Fn(t.name, tuple(apply_term(s, a) for a in t.args))
    return t


def apply(s: Mapping, x):
    """Apply ``s`` to a term, atom, literal, clause or annotated clause."""
    if not s:
        return x
    if isinstance(x, (Var, Const, Fn)):
        return apply_term(s, x)
    if isinstance(x, Atom):
        return Atom(x.pred, tuple(apply_term(s, a) for a in x.args))
    if isinstance(x, Literal):
        return Literal(apply(s, x.atom), x.annotation)
    if isinstance(x, Clause):
        return Clause(tuple(apply(s, l) for l in x.literals))
    if isinstance(x, AnnotatedClause):
        return AnnotatedClause(apply(s, x.clause), x.reliability)
    raise TypeError(f"cannot apply a substitution to {x!r}")


def compose(s1: Mapping, s2: Mapping) -> Substitution:
    """The substitution that applies ``s1`` first and then ``s2``."""
    out = {k: apply_term(s2, v) for k, v in s1.items()}
    for k, v in s2.items():
        out.setdefault(k, v)
    return Substitution(out)


def occurs(name: str, t, s: Mapping) -> bool:
    t = _walk(t, s)
    if isinstance(t, Var):
        return t.name == name
    if isinstance(t, Fn):
        return any(occurs(name, a, s) for a in t.args)
    return False


def _walk(t, s: Mapping):
    while isinstance(t, Var) and t.name in s:
        t = s[t.name]
    return t


def _unify_terms(pairs: list, s: dict) -> bool:
    while pairs:
        a, b = pairs.pop()
        a, b = _walk(a, s), _walk(b, s)
        if a == b:
            continue
        if isinstance(a, Var):
            if occurs(a.name, b, s):
                return False
            s[a.name] = b
        elif isinstance(b, Var):
            if occurs(b.name, a, s):
                return False
            s[b.name] = a
        elif isinstance(a, Fn) and isinstance(b, Fn):
            if a.name != b.name or len(a.args) != len(b.args):
                return False
            pairs.extend(zip(a.args, b.args))
        else:
            return False
    return True


def _resolve(s: dict) -> Substitution:
    """Turn a triangular binding set into an idempotent substitution."""
    def full(t):
        t = _walk(t, s)
        if isinstance(t, Fn):
            return Fn(t.name, tuple(full(a) for a in t.args))
        return t

    return Substitution({k: full(v) for k, v in s.items()})


def mgu(a1: Atom, a2: Atom) -> Substitution | None:
    """Most general unifier of two atoms, or None when they do not unify."""
    return mgu_all([a1, a2])


def mgu_all(atoms: list[Atom]) -> Substitution | None:
    """Most general unifier making every atom in ``atoms`` identical."""
    first = atoms[0]
    s: dict = {}
    for other in atoms[1:]:
        if other.pred != first.pred or len(other.args) != len(first.args):
            return None
        if not _unify_terms(list(zip(first.args, other.args)), s):
            return None
    return _resolve(s)


def unify_terms(t1, t2) -> Substitution | None:
    s: dict = {}
    if not _unify_terms([(t1, t2)], s):
        return None
    return _resolve(s)


def match_term(pattern, target, s: dict) -> bool:
    """Extend ``s`` so that ``pattern`` instantiated by it equals ``target``."""
    if isinstance(pattern, Var):
        bound = s.get(pattern.name)
        if bound is None:
            s[pattern.name] = target
            return True
        return bound == target
    if isinstance(pattern, Const):
        return pattern == target
    if not isinstance(target, Fn) or target.name != pattern.name or len(target.args) != len(pattern.args):
        return False
    return all(match_term(p, t, s) for p, t in zip(pattern.args, target.args))


def match_atom(pattern: Atom, target: Atom, s: dict) -> bool:
    if pattern.pred != target.pred or len(pattern.args) != len(target.args):
        return False
    trial = dict(s)
    if all(match_term(p, t, trial) for p, t in zip(pattern.args, target.args)):
        s.clear()
        s.update(trial)
        return True
    return False


def fresh_name(base: str, taken: set[str]) -> str:
    stem = base.rstrip("0123456789") or base
    n = 1
    while f"{stem}{n}" in taken:
        n += 1
    return f"{stem}{n}"


def rename_apart(c, avoid: set[str]):
    """Rename variables of ``c`` that clash with ``avoid``.

    Returns the renamed object and the renaming used.
    """
    own = free_vars(c)
    clash = own & avoid
    if not clash:
        return c, IDENTITY
    taken = set(avoid) | own
    renaming = {}
    for v in sorted(clash):
        new = fresh_name(v, taken)
        taken.add(new)
        renaming[v] = Var(new)
    s = Substitution(renaming)
    return apply(s, c), s
