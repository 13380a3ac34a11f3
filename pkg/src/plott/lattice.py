"""The lattice of Plott functions: joins, meets, basements and constructors."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Literal, Sequence

from .core import (
    CapacityError,
    ChoiceFunction,
    GroundSet,
    SimpleWord,
    ValidationError,
    all_words,
    bits,
    is_path_independent,
    linear_table,
    submasks,
)

BRUTE_CAP = 3
GEOMETRY_CAP = 5


@dataclass(frozen=True)
class WordSet:
    """A set of simple words kept in canonical (length, index) order."""

    ground: GroundSet
    words: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        words = tuple(sorted({tuple(w) for w in self.words}, key=lambda w: (len(w), w)))
        for w in words:
            SimpleWord(self.ground, w)
        object.__setattr__(self, "words", words)

    @classmethod
    def of(cls, ground: GroundSet, words: Iterable[SimpleWord | Sequence[int] | str]) -> WordSet:
        out = []
        for w in words:
            if isinstance(w, str):
                w = ground.word(w)
            if isinstance(w, SimpleWord):
                if w.ground != ground:
                    raise ValidationError("word lives on a different ground set")
                w = w.letters
            out.append(tuple(w))
        return cls(ground, tuple(out))

    @cached_property
    def _set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[SimpleWord]:
        return (SimpleWord(self.ground, w) for w in self.words)

    def __contains__(self, w: object) -> bool:
        if isinstance(w, SimpleWord):
            return w.ground == self.ground and w.letters in self._set
        if isinstance(w, str):
            return self.ground.word(w).letters in self._set
        return tuple(w) in self._set

    def _other(self, other: WordSet) -> frozenset[tuple[int, ...]]:
        if other.ground != self.ground:
            raise ValidationError("word sets live on different ground sets")
        return other._set

    def __and__(self, other: WordSet) -> WordSet:
        return WordSet(self.ground, tuple(self._set & self._other(other)))

    def __or__(self, other: WordSet) -> WordSet:
        return WordSet(self.ground, tuple(self._set | self._other(other)))

    def __sub__(self, other: WordSet) -> WordSet:
        return WordSet(self.ground, tuple(self._set - self._other(other)))

    def __le__(self, other: WordSet) -> bool:
        return self._set <= self._other(other)

    def strings(self) -> list[str]:
        return [str(w) for w in self]


@dataclass(frozen=True)
class PartialOrder:
    """``dominates[x]`` is the mask of elements ``y`` with ``y <= x``."""

    ground: GroundSet
    dominates: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.dominates)
        object.__setattr__(self, "dominates", rows)
        g = self.ground
        if len(rows) != g.size:
            raise ValidationError("relation needs one row per ground element")
        for x, row in enumerate(rows):
            g.check(row)
            if not row >> x & 1:
                raise ValidationError(f"relation is not reflexive at {g.symbols[x]}")
            for y in bits(row):
                if rows[y] & ~row:
                    raise ValidationError(
                        f"relation is not transitive at {g.symbols[x]} >= {g.symbols[y]}"
                    )
                if y != x and rows[y] >> x & 1:
                    raise ValidationError(
                        f"relation is not antisymmetric on {g.symbols[x]}, {g.symbols[y]}"
                    )

    @classmethod
    def from_covers(cls, ground: GroundSet, pairs: Iterable[tuple[str, str]]) -> PartialOrder:
        """Reflexive-transitive closure of ``upper > lower`` pairs."""
        rows = [1 << i for i in range(ground.size)]
        for upper, lower in pairs:
            rows[ground.index(upper)] |= 1 << ground.index(lower)
        changed = True
        while changed:
            changed = False
            for x in range(ground.size):
                new = rows[x]
                for y in bits(rows[x]):
                    new |= rows[y]
                if new != rows[x]:
                    rows[x] = new
                    changed = True
        return cls(ground, tuple(rows))

    @classmethod
    def chain(cls, w: SimpleWord) -> PartialOrder:
        pairs = [(w.ground.symbols[a], w.ground.symbols[b]) for a, b in zip(w.letters, w.letters[1:])]
        return cls.from_covers(w.ground, pairs)

    @classmethod
    def antichain(cls, ground: GroundSet) -> PartialOrder:
        return cls(ground, tuple(1 << i for i in range(ground.size)))

    def leq(self, y: int, x: int) -> bool:
        return bool(self.dominates[x] >> y & 1)

    def maximal(self, a: int) -> int:
        """Elements of ``a`` not strictly dominated inside ``a``."""
        out = 0
        for x in bits(a):
            if not any(x != y and self.dominates[y] >> x & 1 for y in bits(a)):
                out |= 1 << x
        return out

    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(upper, lower)`` in canonical order."""
        strict = [row & ~(1 << x) for x, row in enumerate(self.dominates)]
        out = []
        for x, below in enumerate(strict):
            skip = 0
            for y in bits(below):
                skip |= strict[y]
            out.extend((x, y) for y in bits(below & ~skip))
        return out


def _check_pair(f: ChoiceFunction, g: ChoiceFunction, trusted: bool) -> None:
    f.same_ground(g)
    if not trusted:
        f.require_plott("first argument")
        g.require_plott("second argument")


def join(f: ChoiceFunction, g: ChoiceFunction, *, trusted: bool = False) -> ChoiceFunction:
    """Pointwise union; the least upper bound of two Plott functions."""
    _check_pair(f, g, trusted)
    return f | g


def _extends(f: ChoiceFunction, used: int, x: int) -> bool:
    # l_{wx} <= f given l_w <= f: x must be chosen from every menu that
    # contains x and avoids the letters of w
    bit = 1 << x
    free = f.ground.full & ~used & ~bit
    table = f.table
    return all(table[a | bit] & bit for a in submasks(free))


def _basement_words(f: ChoiceFunction) -> list[tuple[int, ...]]:
    n = f.ground.size
    out: list[tuple[int, ...]] = []
    stack: list[tuple[tuple[int, ...], int]] = [((), 0)]
    while stack:
        w, used = stack.pop()
        out.append(w)
        for x in range(n):
            if not used >> x & 1 and _extends(f, used, x):
                stack.append((w + (x,), used | 1 << x))
    return out


def basement(f: ChoiceFunction) -> WordSet:
    """All simple words ``w`` with ``l_w <= f``.

    The set is prefix-closed, so a depth-first extension of prefixes finds all
    of it without visiting words outside.
    """
    return WordSet(f.ground, tuple(_basement_words(f)))


def socle(f: ChoiceFunction) -> WordSet:
    """Prefix-maximal words of the basement."""
    bas = basement(f)
    prefixes = {w[:-1] for w in bas.words if w}
    return WordSet(f.ground, tuple(w for w in bas.words if w not in prefixes))


def join_of_words(words: WordSet | Iterable[SimpleWord], ground: GroundSet | None = None) -> ChoiceFunction:
    if isinstance(words, WordSet):
        ground = words.ground
        letters = list(words.words)
    else:
        words = list(words)
        if ground is None:
            if not words:
                raise ValidationError("ground set required for an empty collection of words")
            ground = words[0].ground
        letters = [w.letters for w in words]
    table = [0] * (1 << ground.size)
    for w in letters:
        for a, v in enumerate(linear_table(ground, w)):
            table[a] |= v
    return ChoiceFunction(ground, tuple(table))


def plottize(f: ChoiceFunction) -> ChoiceFunction:
    """The largest Plott function below ``f``."""
    return join_of_words(basement(f))


def meet(f: ChoiceFunction, g: ChoiceFunction, *, trusted: bool = False) -> ChoiceFunction:
    """Greatest Plott lower bound, via the intersection of basements."""
    _check_pair(f, g, trusted)
    return join_of_words(basement(f) & basement(g))


def max_choice(order: PartialOrder) -> ChoiceFunction:
    """``A -> Max(R|A)`` for a partial order ``R``."""
    return ChoiceFunction.from_callable(order.ground, order.maximal)


def top_k_choice(order: SimpleWord, k: int) -> ChoiceFunction:
    """Choose the ``k`` best elements of each menu."""
    if len(order) != order.ground.size:
        raise ValidationError("top-k choice needs a complete order word")
    if k < 0:
        raise ValidationError("k must be non-negative")

    def choose(a: int) -> int:
        out = 0
        for i in order.letters:
            if out.bit_count() == k:
                break
            if a >> i & 1:
                out |= 1 << i
        return out

    return ChoiceFunction.from_callable(order.ground, choose)


def identity_on(ground: GroundSet, s: int) -> ChoiceFunction:
    """``1_S``: ``A -> A ∩ S``."""
    ground.check(s)
    return ChoiceFunction.from_callable(ground, lambda a: a & s)


def all_choice_functions(ground: GroundSet) -> Iterator[ChoiceFunction]:
    """Every contraction table on ``ground``: ``Π_A 2^|A|`` of them."""
    if ground.size > BRUTE_CAP:
        raise CapacityError(f"brute-force enumeration is capped at n={BRUTE_CAP}")
    options = [list(submasks(a))[::-1] for a in ground.subsets()]
    for table in itertools.product(*options):
        yield ChoiceFunction(ground, table)


def _pack(table: Sequence[int], width: int) -> int:
    out = 0
    for a, v in enumerate(table):
        out |= v << (a * width)
    return out


def _unpack(packed: int, width: int, length: int) -> tuple[int, ...]:
    mask = (1 << width) - 1
    return tuple((packed >> (a * width)) & mask for a in range(length))


def _plott_by_chain_joins(ground: GroundSet) -> list[tuple[int, ...]]:
    # every convex geometry is the join of its maximal chains, so closing the
    # chain geometries (linear functions) under join reaches all of PF(X);
    # tables are packed into one int so the join is a single OR
    n = ground.size
    width = max(n, 1)
    length = 1 << n
    gens = [_pack(linear_table(ground, w.letters), width) for w in all_words(ground)[1:]]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = f | g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return [_unpack(p, width, length) for p in seen]


def enumerate_plott(
    ground: GroundSet, strategy: Literal["auto", "brute", "geometry"] = "auto"
) -> Iterator[ChoiceFunction]:
    """Every Plott function on ``ground`` exactly once, sorted by table."""
    n = ground.size
    if strategy == "auto":
        strategy = "brute" if n <= BRUTE_CAP else "geometry"
    if strategy == "brute":
        found = [f for f in all_choice_functions(ground) if is_path_independent(f)]
        tables = [f.table for f in found]
    elif strategy == "geometry":
        if n > GEOMETRY_CAP:
            raise CapacityError(f"geometry enumeration is capped at n={GEOMETRY_CAP}")
        tables = _plott_by_chain_joins(ground)
    else:
        raise ValidationError(f"unknown strategy {strategy!r}")
    for table in sorted(tables):
        yield ChoiceFunction(ground, table)
