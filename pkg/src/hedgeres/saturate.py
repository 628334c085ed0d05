"""Reliability-weighted linguistic resolution.

Two annotated clauses ``(A^a | C1, r1)`` and ``(B^b | C2, r2)`` resolve on
``A^a`` and ``B^b`` when ``A`` and ``B`` unify and the annotations straddle
the middle value: ``a & b < W <= a | b``.  The resolvent keeps the rest of
both clauses and the reliability ``r1 & r2 & ~(a & b) & (a | b)``.

:func:`saturate` runs a FIFO given-clause loop over resolution and
factoring; :func:`replay` re-executes a fixed script of inferences.
"""

from __future__ import annotations

import enum
import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import TruthTerm, compare, join, meet, meet_all, negate
from .errors import ReplayError
from .syntax import AnnotatedClause, Clause, Const, Fn, Literal, Var, free_vars
from .unify import IDENTITY, Substitution, apply, mgu, mgu_all, rename_apart

log = logging.getLogger(__name__)


# single inferences


def combine_reliability(r1: TruthTerm, r2: TruthTerm, a: TruthTerm, b: TruthTerm) -> TruthTerm | None:
    """Reliability of a resolvent, or None when ``a`` and ``b`` cannot be resolved upon."""
    w = a.algebra.middle
    low, high = meet(a, b), join(a, b)
    if not (compare(low, w) < 0 and compare(high, w) >= 0):
        return None
    r3 = meet(meet(r1, r2), meet(negate(low), high))
    assert r3 <= r1 and r3 <= r2 and r3 >= w, (r1, r2, a, b, r3)
    return r3


@dataclass(frozen=True)
class Inference:
    """Outcome of one rule application before it is stored."""

    conclusion: AnnotatedClause
    subst: Substitution
    renaming: Substitution = IDENTITY


def resolve_step(c1: AnnotatedClause, c2: AnnotatedClause, i: int, j: int) -> Inference | None:
    """Resolve literal ``i`` of ``c1`` with literal ``j`` of ``c2``.

    ``c2`` is renamed apart from ``c1`` first when they share variables.
    """
    c2r, renaming = rename_apart(c2, free_vars(c1))
    l1, l2 = c1.clause[i], c2r.clause[j]
    r3 = combine_reliability(c1.reliability, c2r.reliability, l1.annotation, l2.annotation)
    if r3 is None:
        return None
    gamma = mgu(l1.atom, l2.atom)
    if gamma is None:
        return None
    rest = [l for k, l in enumerate(c1.clause) if k != i]
    rest += [l for k, l in enumerate(c2r.clause) if k != j]
    clause = apply(gamma, Clause(tuple(rest)))
    return Inference(AnnotatedClause(clause, r3), gamma, renaming)


def resolve(c1: AnnotatedClause, c2: AnnotatedClause, i: int, j: int) -> AnnotatedClause | None:
    inf = resolve_step(c1, c2, i, j)
    return inf.conclusion if inf else None


def factor_step(c: AnnotatedClause, subset: Sequence[int]) -> Inference | None:
    if len(set(subset)) < 2:
        raise ValueError("factoring needs at least two literal indices")
    lits = [c.clause[k] for k in subset]
    if len({l.annotation for l in lits}) != 1:
        return None
    sigma = mgu_all([l.atom for l in lits])
    if sigma is None:
        return None
    return Inference(AnnotatedClause(apply(sigma, c.clause), c.reliability), sigma)


def factor(c: AnnotatedClause, subset: Sequence[int]) -> AnnotatedClause | None:
    """Instantiate ``c`` by an mgu of the literals at ``subset``; they must share one annotation."""
    inf = factor_step(c, subset)
    return inf.conclusion if inf else None


def all_factors(c: AnnotatedClause) -> list[AnnotatedClause]:
    """Closure of ``c`` under factoring, ``c`` itself included."""
    seen = [c]
    queue = [c]
    while queue:
        cur = queue.pop(0)
        for i, j in itertools.combinations(range(len(cur.clause)), 2):
            f = factor(cur, (i, j))
            if f is not None and not any(is_variant(f, g) and f.reliability == g.reliability for g in seen):
                seen.append(f)
                queue.append(f)
    return seen


# variants


def _skeleton(t):
    if isinstance(t, Var):
        return "?"
    if isinstance(t, Fn):
        return (t.name,) + tuple(_skeleton(a) for a in t.args)
    return t.name


def variant_key(c) -> tuple:
    """Renaming- and order-invariant key; variants always share it."""
    clause = c.clause if isinstance(c, AnnotatedClause) else c
    entries = [(l.atom.pred, str(l.annotation), tuple(_skeleton(a) for a in l.atom.args)) for l in clause]
    return tuple(sorted(entries, key=repr))


def _match_vars(t1, t2, fwd: dict, back: dict) -> bool:
    if isinstance(t1, Var):
        if not isinstance(t2, Var):
            return False
        if t1.name in fwd:
            return fwd[t1.name] == t2.name
        if t2.name in back:
            return False
        fwd[t1.name] = t2.name
        back[t2.name] = t1.name
        return True
    if isinstance(t1, Const):
        return t1 == t2
    if not isinstance(t2, Fn) or t1.name != t2.name or len(t1.args) != len(t2.args):
        return False
    return all(_match_vars(a, b, fwd, back) for a, b in zip(t1.args, t2.args))


def _variant_lits(lits1: list, lits2: list, fwd: dict, back: dict) -> bool:
    if not lits1:
        return True
    first, rest = lits1[0], lits1[1:]
    for k, cand in enumerate(lits2):
        if cand.annotation != first.annotation or cand.atom.pred != first.atom.pred:
            continue
        f2, b2 = dict(fwd), dict(back)
        if all(_match_vars(a, b, f2, b2) for a, b in zip(first.atom.args, cand.atom.args)):
            if _variant_lits(rest, lits2[:k] + lits2[k + 1:], f2, b2):
                return True
    return False


def is_variant(c1, c2) -> bool:
    """True when the clauses coincide up to a bijective renaming of variables.

    Annotations must match exactly; reliabilities are ignored.
    """
    a = c1.clause if isinstance(c1, AnnotatedClause) else c1
    b = c2.clause if isinstance(c2, AnnotatedClause) else c2
    if len(a) != len(b):
        return False
    return _variant_lits(list(a), list(b), {}, {})


def set_reliability(clauses: Iterable[AnnotatedClause]) -> TruthTerm:
    clauses = list(clauses)
    if not clauses:
        raise ValueError("the reliability of an empty clause set is undefined")
    return meet_all((c.reliability for c in clauses), clauses[0].reliability.algebra)


# proofs


@dataclass(frozen=True)
class ProofNode:
    id: int
    clause: AnnotatedClause
    rule: str  # "input", "factor" or "resolve"
    premises: tuple = ()
    subst: Substitution = IDENTITY
    resolved: tuple | None = None  # literal indices: (i, j) for resolve, the subset for factor
    depth: int = 0

    def to_json(self) -> dict:
        out = {"id": self.id, "rule": self.rule, "clause": str(self.clause.clause),
               "rel": str(self.clause.reliability)}
        if self.rule != "input":
            out["premises"] = list(self.premises)
            out["subst"] = self.subst.to_json()
            out["resolved"] = list(self.resolved)
        return out


@dataclass
class ProofTree:
    nodes: dict[int, ProofNode]
    root: int

    @property
    def conclusion(self) -> AnnotatedClause:
        return self.nodes[self.root].clause

    @property
    def reliability(self) -> TruthTerm:
        return self.conclusion.reliability

    def steps(self) -> list[ProofNode]:
        """Inference nodes in an order where premises come first."""
        return [n for n in self.topological() if n.rule != "input"]

    def topological(self) -> list[ProofNode]:
        out, seen = [], set()

        def visit(nid):
            if nid in seen:
                return
            seen.add(nid)
            for p in self.nodes[nid].premises:
                visit(p)
            out.append(self.nodes[nid])

        visit(self.root)
        return out

    def to_json(self, result: str = "unsat") -> dict:
        return {
            "result": result,
            "reliability": str(self.reliability),
            "nodes": [n.to_json() for n in self.topological()],
            "root": self.root,
        }

    def render(self) -> str:
        lines = []
        shown = set()

        def walk(nid, indent):
            n = self.nodes[nid]
            pad = "  " * indent
            if n.rule == "input":
                lines.append(f"{pad}[{nid}] {n.clause}  input")
                return
            if nid in shown:
                lines.append(f"{pad}[{nid}] {n.clause}  (shown above)")
                return
            shown.add(nid)
            if n.rule == "resolve":
                (p1, p2), (i, j) = n.premises, n.resolved
                how = f"resolve [{p1}].{i} with [{p2}].{j}"
            else:
                how = f"factor [{n.premises[0]}] on {list(n.resolved)}"
            sub = f" {n.subst}" if n.subst else ""
            lines.append(f"{pad}[{nid}] {n.clause}  {how}{sub}")
            for p in n.premises:
                walk(p, indent + 1)

        walk(self.root, 0)
        return "\n".join(lines)


def _subtree(nodes: dict[int, ProofNode], root: int) -> ProofTree:
    keep = {}
    stack = [root]
    while stack:
        nid = stack.pop()
        if nid in keep:
            continue
        keep[nid] = nodes[nid]
        stack.extend(nodes[nid].premises)
    return ProofTree(dict(sorted(keep.items())), root)


# search


class Strategy(str, enum.Enum):
    FIRST = "first"
    BEST = "best"


@dataclass(frozen=True)
class SearchBudget:
    max_clauses: int = 10000
    max_depth: int = 100
    strategy: Strategy = Strategy.FIRST
    max_term_depth: int = 64  # nesting bound for function terms in derived clauses

    def __post_init__(self):
        if self.max_clauses < 1 or self.max_depth < 1 or self.max_term_depth < 1:
            raise ValueError("budgets must be positive")
        object.__setattr__(self, "strategy", Strategy(self.strategy))


@dataclass
class Refuted:
    proof: ProofTree
    generated: int = 0
    status: str = field(default="unsat", init=False)

    @property
    def reliability(self) -> TruthTerm:
        return self.proof.reliability


@dataclass
class Saturated:
    generated: int = 0
    status: str = field(default="sat", init=False)


@dataclass
class BudgetExhausted:
    generated: int = 0
    status: str = field(default="unknown", init=False)


def _clause_term_depth(ac: AnnotatedClause) -> int:
    deepest = 0
    for lit in ac.clause:
        stack = [(a, 1) for a in lit.atom.args]
        while stack:
            t, d = stack.pop()
            deepest = max(deepest, d)
            if isinstance(t, Fn):
                stack.extend((a, d + 1) for a in t.args)
    return deepest


class _Stop(Exception):
    pass


class _Engine:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes: dict[int, ProofNode] = {}
        self.passive: deque[int] = deque()
        self.partners: dict[str, list[tuple[int, int]]] = {}
        self.index: dict[tuple, list[int]] = {}
        self.superseded: set[int] = set()
        self.generated = 0
        self.pruned = False
        self.best: int | None = None
        self.ceiling: TruthTerm | None = None

    def add(self, ac: AnnotatedClause, rule="input", premises=(), subst=IDENTITY, resolved=None, depth=0):
        if depth > self.budget.max_depth or _clause_term_depth(ac) > self.budget.max_term_depth:
            self.pruned = True
            return None
        key = variant_key(ac)
        bucket = self.index.setdefault(key, [])
        worse = []
        for rid in bucket:
            old = self.nodes[rid].clause
            if is_variant(old, ac):
                if compare(old.reliability, ac.reliability) >= 0:
                    return None
                worse.append(rid)
        if rule != "input":
            self.generated += 1
            if self.generated > self.budget.max_clauses:
                raise _Stop
        if ac.reliability == ac.reliability.algebra.middle:
            log.warning("derived %s with reliability exactly W", ac.clause)
        nid = len(self.nodes)
        self.nodes[nid] = ProofNode(nid, ac, rule, tuple(premises), subst, resolved, depth)
        self.superseded.update(worse)
        bucket.append(nid)
        self.passive.append(nid)
        if ac.clause.is_empty:
            self.found(nid)
        return nid

    def found(self, nid: int):
        rel = self.nodes[nid].clause.reliability
        if self.best is None or compare(rel, self.nodes[self.best].clause.reliability) > 0:
            self.best = nid
        if self.budget.strategy is Strategy.FIRST or compare(rel, self.ceiling) >= 0:
            raise _Stop

    def process(self, gid: int):
        node = self.nodes[gid]
        given = node.clause
        if given.clause.is_empty:
            return
        for i, j in itertools.combinations(range(len(given.clause)), 2):
            inf = factor_step(given, (i, j))
            if inf is not None:
                self.add(inf.conclusion, "factor", (gid,), inf.subst, (i, j), node.depth)
        # activate before generating so self-resolution is included
        for j, lit in enumerate(given.clause):
            self.partners.setdefault(lit.atom.pred, []).append((gid, j))
        for i, lit in enumerate(given.clause):
            for pid, j in list(self.partners.get(lit.atom.pred, ())):
                if pid in self.superseded or (pid == gid and j == i):
                    continue
                other = self.nodes[pid]
                inf = resolve_step(given, other.clause, i, j)
                if inf is None:
                    continue
                depth = max(node.depth, other.depth) + 1
                self.add(inf.conclusion, "resolve", (gid, pid), inf.subst, (i, j), depth)

    def run(self, clauses: Sequence[AnnotatedClause]):
        self.ceiling = set_reliability(clauses)
        try:
            for c in clauses:
                self.add(c)
            while self.passive:
                gid = self.passive.popleft()
                if gid in self.superseded:
                    continue
                self.process(gid)
        except _Stop:
            if self.best is not None:
                return Refuted(_subtree(self.nodes, self.best), self.generated)
            return BudgetExhausted(self.generated)
        if self.best is not None:
            return Refuted(_subtree(self.nodes, self.best), self.generated)
        if self.pruned:
            return BudgetExhausted(self.generated)
        return Saturated(self.generated)


def saturate(clauses: Sequence[AnnotatedClause], budget: SearchBudget | None = None):
    """Search for a refutation of ``clauses``.

    Returns :class:`Refuted`, :class:`Saturated` or :class:`BudgetExhausted`.
    With ``Strategy.BEST`` the search keeps going after the first empty
    clause and returns the most reliable refutation found within budget.
    """
    if not clauses:
        return Saturated(0)
    return _Engine(budget or SearchBudget()).run(list(clauses))


def replay(clauses: Sequence[AnnotatedClause], script: Iterable) -> ProofTree:
    """Execute a fixed list of inferences and return the proof of the last one.

    Input clauses get ids ``0 .. n-1`` and each step the next free id.  A
    step is ``("resolve", (p1, p2), (i, j))`` or ``("factor", (p,), indices)``.
    """
    nodes = {k: ProofNode(k, c, "input") for k, c in enumerate(clauses)}
    last = None
    for n, (rule, premises, indices) in enumerate(script):
        nid = len(nodes)
        try:
            prem = [nodes[p] for p in premises]
        except KeyError as exc:
            raise ReplayError(f"step {n}: unknown premise id {exc.args[0]}") from None
        try:
            if rule == "resolve":
                (c1, c2), (i, j) = prem, indices
                inf = resolve_step(c1.clause, c2.clause, i, j)
                depth = max(c1.depth, c2.depth) + 1
            elif rule == "factor":
                (c,) = prem
                inf = factor_step(c.clause, indices)
                depth = c.depth
            else:
                raise ReplayError(f"step {n}: unknown rule {rule!r}")
        except (IndexError, ValueError) as exc:
            raise ReplayError(f"step {n}: {exc}") from None
        if inf is None:
            raise ReplayError(f"step {n}: {rule} on {list(premises)} at {list(indices)} is not applicable")
        nodes[nid] = ProofNode(nid, inf.conclusion, rule, tuple(premises), inf.subst, tuple(indices), depth)
        last = nid
    if last is None:
        raise ReplayError("empty script")
    return _subtree(nodes, last)
