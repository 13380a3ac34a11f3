"""Ground sets, bitmask subsets, choice-function tables and simple words.

Subsets are plain ``int`` bitmasks: bit ``i`` set means the ``i``-th symbol of
the ground set is a member. A choice function is stored as a dense table with
one entry per subset, indexed by the subset's mask.
"""
from __future__ import annotations

import enum
import os
from dataclasses import InitVar, dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

DEFAULT_CAP = 16
# ops that quantify over pairs of subsets are O(4^n)
EXHAUSTIVE_CAP = 12


class PlottError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PlottError, ValueError):
    pass


class NotLinearError(ValidationError):
    pass


class CapacityError(PlottError):
    pass


def size_cap() -> int:
    """Ground-set size cap, overridable through ``PLOTT_CAP``."""
    raw = os.environ.get("PLOTT_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"PLOTT_CAP must be an integer, got {raw!r}") from None


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class GroundSet:
    """An ordered finite alphabet; symbol ``i`` owns bit ``i``."""

    symbols: tuple[str, ...]
    cap: InitVar[int | None] = None

    def __post_init__(self, cap: int | None) -> None:
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        limit = size_cap() if cap is None else cap
        if len(symbols) > limit:
            raise CapacityError(f"ground set of size {len(symbols)} exceeds cap {limit}")
        for s in symbols:
            if not isinstance(s, str) or not s:
                raise ValidationError(f"symbols must be non-empty strings, got {s!r}")
        if len(set(symbols)) != len(symbols):
            raise ValidationError(f"duplicate symbols in {list(symbols)}")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValidationError(f"unknown symbol {symbol!r}") from None

    def check(self, mask: int) -> int:
        if not isinstance(mask, (int, np.integer)) or mask < 0 or mask > self.full:
            raise ValidationError(f"mask {mask!r} is not a subset of a {self.size}-element ground set")
        return int(mask)

    def subset(self, symbols: Iterable[str] | str = ()) -> int:
        """Mask of the given symbols. A plain string is split into characters
        when every symbol is a single character."""
        if isinstance(symbols, str):
            symbols = self._split(symbols)
        mask = 0
        for s in symbols:
            mask |= 1 << self.index(s)
        return mask

    def members(self, mask: int) -> tuple[str, ...]:
        return tuple(self.symbols[i] for i in bits(self.check(mask)))

    def key(self, mask: int) -> str:
        """Canonical comma-joined rendering; ``""`` for the empty set."""
        return ",".join(self.members(mask))

    def parse_key(self, key: str) -> int:
        if key == "":
            return 0
        return self.subset(key.split(","))

    def render(self, mask: int) -> str:
        sep = "" if self.single_char else ","
        return "{" + sep.join(self.members(mask)) + "}"

    def subsets(self) -> range:
        return range(1 << self.size)

    def word(self, letters: Sequence[str] | str = ()) -> SimpleWord:
        if isinstance(letters, str):
            letters = self._split(letters)
        return SimpleWord(self, tuple(self.index(s) for s in letters))

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def _split(self, text: str) -> list[str]:
        if text in ("", "∅"):
            return []
        if self.single_char:
            return list(text)
        return text.split()


@dataclass(frozen=True)
class ChoiceFunction:
    """A total table ``subset mask -> chosen subset mask`` with ``f(A) ⊆ A``.

    Path independence is not required at construction; use :attr:`plott`.
    """

    ground: GroundSet
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != 1 << self.ground.size:
            raise ValidationError(
                f"table has {len(table)} entries, expected {1 << self.ground.size}"
            )
        for a, chosen in enumerate(table):
            if chosen & ~a:
                raise ValidationError(
                    f"f({self.ground.render(a)}) = {self.ground.render(chosen & self.ground.full)}"
                    " is not a subset of its argument"
                )

    @classmethod
    def from_callable(cls, ground: GroundSet, fn: Callable[[int], int]) -> ChoiceFunction:
        return cls(ground, tuple(fn(a) for a in ground.subsets()))

    @classmethod
    def zero(cls, ground: GroundSet) -> ChoiceFunction:
        return cls(ground, (0,) * (1 << ground.size))

    @classmethod
    def identity(cls, ground: GroundSet) -> ChoiceFunction:
        return cls(ground, tuple(ground.subsets()))

    def __call__(self, a: int) -> int:
        return self.table[self.ground.check(a)]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def plott(self) -> bool:
        return path_independence_witness(self) is None

    def require_plott(self, what: str = "choice function") -> None:
        if not self.plott:
            a, b = path_independence_witness(self)
            raise ValidationError(
                f"{what} is not path independent "
                f"(witness A={self.ground.render(a)}, B={self.ground.render(b)})"
            )

    def same_ground(self, other: ChoiceFunction) -> None:
        if self.ground != other.ground:
            raise ValidationError("choice functions live on different ground sets")

    def __le__(self, other: ChoiceFunction) -> bool:
        self.same_ground(other)
        return all(x & ~y == 0 for x, y in zip(self.table, other.table))

    def __or__(self, other: ChoiceFunction) -> ChoiceFunction:
        self.same_ground(other)
        return ChoiceFunction(self.ground, tuple(x | y for x, y in zip(self.table, other.table)))

    def __and__(self, other: ChoiceFunction) -> ChoiceFunction:
        self.same_ground(other)
        return ChoiceFunction(self.ground, tuple(x & y for x, y in zip(self.table, other.table)))

    def describe(self) -> str:
        g = self.ground
        return "\n".join(f"{g.render(a)} -> {g.render(self.table[a])}" for a in g.subsets())


@dataclass(frozen=True)
class SimpleWord:
    """A repetition-free sequence of ground indices; the best letter comes first."""

    ground: GroundSet
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(int(i) for i in self.letters)
        object.__setattr__(self, "letters", letters)
        for i in letters:
            if not 0 <= i < self.ground.size:
                raise ValidationError(f"letter index {i} outside the ground set")
        if len(set(letters)) != len(letters):
            raise ValidationError(f"word {self.symbols()} repeats a letter")

    @property
    def support(self) -> int:
        mask = 0
        for i in self.letters:
            mask |= 1 << i
        return mask

    def symbols(self) -> list[str]:
        return [self.ground.symbols[i] for i in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "∅"
        sep = "" if self.ground.single_char else " "
        return sep.join(self.symbols())

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.letters), self.letters)

    def prefixes(self) -> list[SimpleWord]:
        return [SimpleWord(self.ground, self.letters[:k]) for k in range(len(self.letters) + 1)]


@dataclass(frozen=True)
class SetMap:
    """A total map between two ground sets, stored as target indices."""

    source: GroundSet
    target: GroundSet
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.source.size:
            raise ValidationError(
                f"map defines {len(images)} images for a source of size {self.source.size}"
            )
        for i in images:
            if not 0 <= i < self.target.size:
                raise ValidationError(f"image index {i} outside the target ground set")

    @classmethod
    def from_dict(cls, source: GroundSet, target: GroundSet, mapping: dict[str, str]) -> SetMap:
        missing = [s for s in source.symbols if s not in mapping]
        if missing:
            raise ValidationError(f"map is not total: no image for {missing}")
        extra = [s for s in mapping if s not in source]
        if extra:
            raise ValidationError(f"map mentions unknown source symbols {extra}")
        return cls(source, target, tuple(target.index(mapping[s]) for s in source.symbols))

    @classmethod
    def identity(cls, ground: GroundSet) -> SetMap:
        return cls(ground, ground, tuple(range(ground.size)))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def as_dict(self) -> dict[str, str]:
        return {s: self.target.symbols[j] for s, j in zip(self.source.symbols, self.images)}

    def image(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << self.images[i]
        return out

    def preimage(self, mask: int) -> int:
        out = 0
        for i, j in enumerate(self.images):
            if mask >> j & 1:
                out |= 1 << i
        return out

    @property
    def injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    @property
    def surjective(self) -> bool:
        return len(set(self.images)) == self.target.size

    def then(self, other: SetMap) -> SetMap:
        """``other ∘ self``."""
        if self.target != other.source:
            raise ValidationError("cannot compose maps: target and source differ")
        return SetMap(self.source, other.target, tuple(other.images[j] for j in self.images))


class Comparison(str, enum.Enum):
    LESS_EQUAL = "less-equal"
    GREATER_EQUAL = "greater-equal"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def evaluate(f: ChoiceFunction, a: int) -> int:
    return f(a)


def path_independence_witness(f: ChoiceFunction) -> tuple[int, int] | None:
    """First pair ``(A, B)`` with ``f(A ∪ B) != f(f(A) ∪ B)``, or None."""
    n = f.ground.size
    if n > EXHAUSTIVE_CAP:
        raise CapacityError(f"path independence check is capped at n={EXHAUSTIVE_CAP}")
    t = f.array
    idx = np.arange(1 << n, dtype=np.int64)
    rows = max(1, (1 << 18) >> n)
    for start in range(0, 1 << n, rows):
        a = idx[start:start + rows, None]
        lhs = t[a | idx[None, :]]
        rhs = t[t[a] | idx[None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            r, b = bad[0]
            return int(start + r), int(b)
    return None


def is_path_independent(f: ChoiceFunction) -> bool:
    return f.plott


def support(f: ChoiceFunction) -> int:
    """``{x : f({x}) = {x}}``."""
    out = 0
    for i in range(f.ground.size):
        if f.table[1 << i]:
            out |= 1 << i
    return out


def linear_table(ground: GroundSet, letters: Sequence[int]) -> tuple[int, ...]:
    idx = np.arange(1 << ground.size, dtype=np.int64)
    t = np.zeros_like(idx)
    for i in reversed(letters):
        bit = 1 << i
        t = np.where(idx & bit, bit, t)
    return tuple(t.tolist())


def linear_from_word(w: SimpleWord) -> ChoiceFunction:
    """``l_w``: pick the first letter of ``w`` present in the menu."""
    return ChoiceFunction(w.ground, linear_table(w.ground, w.letters))


def word_from_linear(f: ChoiceFunction, *, trusted: bool = False) -> SimpleWord:
    for a, chosen in enumerate(f.table):
        if chosen.bit_count() > 1:
            raise NotLinearError(
                f"f({f.ground.render(a)}) = {f.ground.render(chosen)} has more than one element"
            )
    if not trusted:
        f.require_plott()
    letters = []
    rest = support(f)
    while rest:
        chosen = f.table[rest]
        if not chosen:
            raise ValidationError("linear function chooses nothing from part of its support")
        i = chosen.bit_length() - 1
        letters.append(i)
        rest &= ~chosen
    w = SimpleWord(f.ground, tuple(letters))
    if linear_from_word(w) != f:
        raise ValidationError("function is not the linear function of any word")
    return w


def compare(f: ChoiceFunction, g: ChoiceFunction) -> Comparison:
    le, ge = f <= g, g <= f
    if le and ge:
        return Comparison.EQUAL
    if le:
        return Comparison.LESS_EQUAL
    if ge:
        return Comparison.GREATER_EQUAL
    return Comparison.INCOMPARABLE


def word_prefix_order(v: SimpleWord, w: SimpleWord) -> bool:
    """True iff ``v`` is a prefix of ``w``."""
    if v.ground != w.ground:
        raise ValidationError("words live on different ground sets")
    return w.letters[:len(v.letters)] == v.letters


def all_words(ground: GroundSet) -> list[SimpleWord]:
    """Every simple word over ``ground`` in canonical (length, index) order."""
    out = [()]
    frontier = [()]
    for _ in range(ground.size):
        frontier = [w + (i,) for w in frontier for i in range(ground.size) if i not in w]
        out.extend(sorted(frontier))
    return [SimpleWord(ground, w) for w in out]
