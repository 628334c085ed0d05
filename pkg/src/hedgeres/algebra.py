"""Linguistic truth values of a linear symmetrical hedge algebra.

A truth value is either one of the limit constants ``Bot < W < Top`` or a
hedge string applied to one of the two generators, e.g. ``VMTrue`` is
Very(More(True)).  The algebra is treated as free, so two hedge strings
denote the same value only when they are identical.

Values are ordered by comparing hedge strings from the generator outward.
The direction each hedge moves a value is its *sign*, computed from the
sign relation between consecutive hedges.

>>> alg = AlgebraConfig.default()
>>> alg.term("True") < alg.term("VTrue")
True
>>> str(alg.term("LTrue") & alg.term("PTrue"))
'LTrue'
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from ._lexer import TokenStream
from .errors import ConfigError

BOTTOM, NEGATIVE, MIDDLE, POSITIVE, TOP = range(5)

CONSTANT_NAMES = {BOTTOM: "Bot", MIDDLE: "W", TOP: "Top"}
_CONSTANTS_BY_NAME = {v: k for k, v in CONSTANT_NAMES.items()}


class Order(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    @property
    def symbol(self) -> str:
        return {-1: "<", 0: "=", 1: ">"}[self.value]


@dataclass(frozen=True)
class TruthTerm:
    """A canonical truth value.

    ``hedges`` lists hedge names outermost first and is empty for bare
    generators and for the constants.  ``base`` is one of BOTTOM, NEGATIVE,
    MIDDLE, POSITIVE, TOP.
    """

    hedges: tuple[str, ...]
    base: int
    algebra: AlgebraConfig = field(compare=False, repr=False)

    @property
    def is_constant(self) -> bool:
        return self.base in CONSTANT_NAMES

    def __str__(self) -> str:
        if self.is_constant:
            return CONSTANT_NAMES[self.base]
        gen = self.algebra.positive_generator if self.base == POSITIVE else self.algebra.negative_generator
        return "".join(self.hedges) + gen

    def __repr__(self) -> str:
        return f"TruthTerm({self})"

    def __lt__(self, other: TruthTerm) -> bool:
        return compare(self, other) < 0

    def __le__(self, other: TruthTerm) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: TruthTerm) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: TruthTerm) -> bool:
        return compare(self, other) >= 0

    def __invert__(self) -> TruthTerm:
        return negate(self)

    def __and__(self, other: TruthTerm) -> TruthTerm:
        return meet(self, other)

    def __or__(self, other: TruthTerm) -> TruthTerm:
        return join(self, other)


@dataclass(frozen=True)
class AlgebraConfig:
    """Generators, ordered hedge sets and the hedge sign relation.

    ``plus_hedges`` and ``minus_hedges`` are listed by ascending strength.
    ``sign_relation`` maps ``(k, h)`` to +1 when hedge ``k`` is positive
    w.r.t. ``h`` and -1 when negative.  Missing pairs default to
    ``s(k) * s(h)`` with ``s`` = +1 on H+ and -1 on H-, so H+ hedges always
    move a term away from W and H- hedges towards it.
    """

    negative_generator: str = "False"
    positive_generator: str = "True"
    plus_hedges: tuple[str, ...] = ("M", "V")
    minus_hedges: tuple[str, ...] = ("P", "L")
    sign_relation: tuple[tuple[tuple[str, str], int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "plus_hedges", tuple(self.plus_hedges))
        object.__setattr__(self, "minus_hedges", tuple(self.minus_hedges))
        if isinstance(self.sign_relation, Mapping):
            object.__setattr__(self, "sign_relation", tuple(sorted(self.sign_relation.items())))
        self._validate()
        rel = {}
        for k in self.hedges:
            for h in self.hedges:
                rel[k, h] = (1 if k in self.plus_hedges else -1) * (1 if h in self.plus_hedges else -1)
        for (k, h), s in self.sign_relation:
            rel[k, h] = s
        # fully expanded relation so equal configs compare and hash equal
        object.__setattr__(self, "sign_relation", tuple(sorted(rel.items())))
        object.__setattr__(self, "_rel", rel)
        object.__setattr__(self, "_strength", {
            **{h: i + 1 for i, h in enumerate(self.plus_hedges)},
            **{h: i + 1 for i, h in enumerate(self.minus_hedges)},
        })
        object.__setattr__(self, "_hash", hash((
            self.negative_generator, self.positive_generator,
            self.plus_hedges, self.minus_hedges, self.sign_relation,
        )))
        self._check_converse()

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def default(cls) -> AlgebraConfig:
        """The algebra of the worked example: H+ = {M < V}, H- = {P < L}."""
        return _DEFAULT

    @property
    def hedges(self) -> tuple[str, ...]:
        return self.plus_hedges + self.minus_hedges

    def rel(self, k: str, h: str) -> int:
        return self._rel[k, h]

    def _validate(self):
        if not self.plus_hedges or not self.minus_hedges:
            raise ConfigError("both hedge sets must be non-empty")
        for group in (self.plus_hedges, self.minus_hedges):
            if len(set(group)) != len(group):
                raise ConfigError(f"repeated hedge in {' < '.join(group)}")
        if set(self.plus_hedges) & set(self.minus_hedges):
            raise ConfigError("positive and negative hedge sets overlap")
        if self.negative_generator == self.positive_generator:
            raise ConfigError("generators must be distinct")
        names = list(self.hedges) + [self.negative_generator, self.positive_generator]
        for name in names:
            if name in _CONSTANTS_BY_NAME:
                raise ConfigError(f"{name!r} is reserved for a constant")
            if not name.isidentifier() or not name[0].isalpha():
                raise ConfigError(f"invalid name {name!r}")
        for a, b in itertools.permutations(names, 2):
            if b.startswith(a):
                raise ConfigError(f"ambiguous names: {a!r} is a prefix of {b!r}")
        known = set(self.hedges)
        for (k, h), s in self.sign_relation:
            if k not in known or h not in known:
                raise ConfigError(f"sign relation mentions unknown hedge in ({k}, {h})")
            if s not in (1, -1):
                raise ConfigError(f"sign of ({k}, {h}) must be +1 or -1")

    def _check_converse(self):
        # hedges of opposite sets must move every term in opposite directions
        for h in self.hedges:
            plus = {self._rel[k, h] for k in self.plus_hedges}
            minus = {self._rel[k, h] for k in self.minus_hedges}
            if len(plus) != 1 or len(minus) != 1 or plus == minus:
                raise ConfigError(
                    f"sign relation w.r.t. {h!r} must be uniform on each hedge set "
                    "and opposite between them"
                )

    # construction helpers

    @property
    def top(self) -> TruthTerm:
        return TruthTerm((), TOP, self)

    @property
    def bottom(self) -> TruthTerm:
        return TruthTerm((), BOTTOM, self)

    @property
    def middle(self) -> TruthTerm:
        return TruthTerm((), MIDDLE, self)

    @property
    def true(self) -> TruthTerm:
        return TruthTerm((), POSITIVE, self)

    @property
    def false(self) -> TruthTerm:
        return TruthTerm((), NEGATIVE, self)

    def term(self, text: str) -> TruthTerm:
        """Parse surface syntax such as ``VMTrue``, ``LFalse`` or ``Top``."""
        return _parse_term(self, text)

    def strength(self, hedge: str) -> int:
        return self._strength[hedge]


_DEFAULT = AlgebraConfig()


def canonicalize(algebra: AlgebraConfig, hedges: Sequence[str], base: str | int) -> TruthTerm:
    """Build a term from hedge names (outermost first) and a generator or constant.

    Hedges applied to a constant leave it unchanged.
    """
    for h in hedges:
        if h not in algebra._strength:
            raise ConfigError(f"unknown hedge {h!r}")
    if isinstance(base, str):
        if base == algebra.positive_generator:
            base = POSITIVE
        elif base == algebra.negative_generator:
            base = NEGATIVE
        elif base in _CONSTANTS_BY_NAME:
            base = _CONSTANTS_BY_NAME[base]
        else:
            raise ConfigError(f"unknown generator {base!r}")
    if base not in range(5):
        raise ConfigError(f"invalid base {base!r}")
    if base in CONSTANT_NAMES:
        return TruthTerm((), base, algebra)
    return TruthTerm(tuple(hedges), base, algebra)


def apply_hedge(hedge: str, t: TruthTerm) -> TruthTerm:
    return canonicalize(t.algebra, (hedge,) + t.hedges, t.base)


def _parse_term(algebra: AlgebraConfig, text: str) -> TruthTerm:
    if text in _CONSTANTS_BY_NAME:
        return TruthTerm((), _CONSTANTS_BY_NAME[text], algebra)
    hedges = []
    rest = text
    while rest:
        if rest == algebra.positive_generator or rest == algebra.negative_generator:
            return canonicalize(algebra, hedges, rest)
        # names are prefix-free, so at most one hedge can match here
        for h in algebra.hedges:
            if rest.startswith(h):
                hedges.append(h)
                rest = rest[len(h):]
                break
        else:
            break
    raise ConfigError(f"unknown truth term {text!r}")


def _check_same(x: TruthTerm, y: TruthTerm):
    if x.algebra is not y.algebra and x.algebra != y.algebra:
        raise ConfigError(f"cannot combine {x} and {y}: they belong to different algebras")


@lru_cache(maxsize=None)
def _signs(algebra: AlgebraConfig, inner_first: tuple[str, ...], base: int) -> tuple[int, ...]:
    """Sign of every prefix: entry i is sign(h_i ... h_1 c), innermost first."""
    out = []
    s = 0
    for i, h in enumerate(inner_first):
        if i == 0:
            s = (1 if h in algebra.plus_hedges else -1) * (1 if base == POSITIVE else -1)
        else:
            s = algebra.rel(h, inner_first[i - 1]) * s
        out.append(s)
    return tuple(out)


def sign(t: TruthTerm) -> int:
    """+1 if the outermost hedge of ``t`` raised it above its suffix, else -1."""
    if t.is_constant or not t.hedges:
        raise ValueError(f"sign is only defined for hedged terms, got {t}")
    return _signs(t.algebra, tuple(reversed(t.hedges)), t.base)[-1]



@lru_cache(maxsize=1 << 16)
def _compare_lin(algebra: AlgebraConfig, xs: tuple[str, ...], ys: tuple[str, ...], base: int) -> int:
    # xs, ys are innermost first
    p = 0
    while p < len(xs) and p < len(ys) and xs[p] == ys[p]:
        p += 1
    if p == len(xs) and p == len(ys):
        return 0
    if p == len(xs):
        # y extends x: y lies on the side its first extra hedge moves towards
        return -_signs(algebra, ys[: p + 1], base)[-1]
    if p == len(ys):
        return _signs(algebra, xs[: p + 1], base)[-1]
    sx = _signs(algebra, xs[: p + 1], base)[-1]
    sy = _signs(algebra, ys[: p + 1], base)[-1]
    if sx != sy:
        return 1 if sx > sy else -1
    # same side of the common suffix, hence same hedge set: stronger goes further
    dx, dy = algebra.strength(xs[p]), algebra.strength(ys[p])
    return (1 if dx > dy else -1) * sx


def compare(x: TruthTerm, y: TruthTerm) -> Order:
    _check_same(x, y)
    if x.base != y.base:
        return Order.LT if x.base < y.base else Order.GT
    if x.is_constant:
        return Order.EQ
    return Order(_compare_lin(x.algebra, x.hedges[::-1], y.hedges[::-1], x.base))


def negate(x: TruthTerm) -> TruthTerm:
    """The contradictory element: same hedges over the opposite generator."""
    return TruthTerm(x.hedges, 4 - x.base, x.algebra)


def meet(x: TruthTerm, y: TruthTerm) -> TruthTerm:
    return x if compare(x, y) <= 0 else y


def join(x: TruthTerm, y: TruthTerm) -> TruthTerm:
    return x if compare(x, y) >= 0 else y


def meet_all(values: Iterable[TruthTerm], algebra: AlgebraConfig) -> TruthTerm:
    out = algebra.top
    for v in values:
        out = meet(out, v)
    return out


def join_all(values: Iterable[TruthTerm], algebra: AlgebraConfig) -> TruthTerm:
    out = algebra.bottom
    for v in values:
        out = join(out, v)
    return out


def implies(x: TruthTerm, y: TruthTerm) -> TruthTerm:
    return join(negate(x), y)


def iff(x: TruthTerm, y: TruthTerm) -> TruthTerm:
    return meet(implies(x, y), implies(y, x))


def enumerate_terms(algebra: AlgebraConfig, max_depth: int) -> list[TruthTerm]:
    """All terms with at most ``max_depth`` hedges plus the three constants, ascending."""
    if max_depth < 0:
        raise ValueError("max_depth must be non-negative")
    out = [algebra.bottom, algebra.middle, algebra.top]
    for depth in range(max_depth + 1):
        for hs in itertools.product(algebra.hedges, repeat=depth):
            out.append(TruthTerm(hs, POSITIVE, algebra))
            out.append(TruthTerm(hs, NEGATIVE, algebra))
    return sorted(out)


# .hal reader


def parse_algebra(text: str) -> AlgebraConfig:
    """Read an ``algebra { ... }`` block."""
    stream = TokenStream(text)
    config = parse_algebra_block(stream)
    if stream.peek.kind != "eof":
        stream.fail("expected end of algebra file")
    return config


def parse_algebra_block(stream: TokenStream) -> AlgebraConfig:
    stream.expect("algebra")
    stream.expect("{")
    gens = plus = minus = None
    signs: dict[tuple[str, str], int] = {}
    wildcard: dict[str, int] = {}
    while not stream.accept("}"):
        key = stream.expect_kind("id", "algebra entry")
        if key.text == "generators":
            stream.expect(":")
            neg = stream.expect_kind("id", "generator name").text
            stream.expect(",")
            pos = stream.expect_kind("id", "generator name").text
            gens = (neg, pos)
        elif key.text in ("positive", "negative"):
            stream.expect(":")
            chain = [stream.expect_kind("id", "hedge name").text]
            while stream.accept("<"):
                chain.append(stream.expect_kind("id", "hedge name").text)
            if key.text == "positive":
                plus = tuple(chain)
            else:
                minus = tuple(chain)
        elif key.text == "sign":
            stream.expect("{")
            while not stream.accept("}"):
                k = stream.expect_kind("id", "hedge name").text
                stream.expect(":")
                tok = stream.next()
                if tok.text not in ("+", "-"):
                    stream.fail("expected '+' or '-'", tok)
                s = 1 if tok.text == "+" else -1
                if stream.accept("*"):
                    wildcard[k] = s
                else:
                    signs[k, stream.expect_kind("id", "hedge name").text] = s
        else:
            stream.fail("unknown algebra entry", key)
    if gens is None or plus is None or minus is None:
        raise ConfigError("algebra block needs generators, positive and negative entries")
    relation = {}
    for k, s in wildcard.items():
        for h in plus + minus:
            relation[k, h] = s
    relation.update(signs)
    try:
        return AlgebraConfig(gens[0], gens[1], plus, minus, relation)
    except ConfigError as exc:
        raise ConfigError(f"{exc} (algebra block at line {key.line})") from None
