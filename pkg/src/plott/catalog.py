"""Small hand-built instances with known answers."""
from __future__ import annotations

from .core import ChoiceFunction, GroundSet, SetMap, linear_from_word
from .geometry import ConvexFamily, from_geometry
from .lattice import PartialOrder, join

ABC = GroundSet(("a", "b", "c"))
ABCD = GroundSet(("a", "b", "c", "d"))


def linear(ground: GroundSet, word: str) -> ChoiceFunction:
    return linear_from_word(ground.word(word))


def two_extremes() -> ChoiceFunction:
    """``l_abc ∨ l_cba``: each menu yields its best and its worst element."""
    return join(linear(ABC, "abc"), linear(ABC, "cba"))


def two_chains() -> tuple[PartialOrder, SetMap]:
    """Two disjoint 3-chains ``a′>b′>c′`` and ``c″>b″>a″`` over ``{a,b,c}``."""
    y = GroundSet(("a′", "b′", "c′", "a″", "b″", "c″"))
    order = PartialOrder.from_covers(y, [("a′", "b′"), ("b′", "c′"), ("c″", "b″"), ("b″", "a″")])
    return order, SetMap.from_dict(y, ABC, {s: s[0] for s in y.symbols})


def two_short_chains() -> tuple[PartialOrder, SetMap]:
    """The 4-element poset ``a′>b′``, ``c′>b″`` over ``{a,b,c}``."""
    y = GroundSet(("a′", "b′", "c′", "b″"))
    order = PartialOrder.from_covers(y, [("a′", "b′"), ("c′", "b″")])
    return order, SetMap.from_dict(y, ABC, {s: s[0] for s in y.symbols})


FIVE_PIECE_MEMBERS = ("", "d", "cd", "ad", "bd", "bcd", "acd", "abcd")


def five_piece_geometry() -> ConvexFamily:
    return ConvexFamily.of(ABCD, FIVE_PIECE_MEMBERS)


def five_piece_function() -> ChoiceFunction:
    """``d`` survives only alone; ``{a,b}`` is chosen from both ``X`` and ``X∖d``;
    otherwise ``A -> A∖d``."""
    return from_geometry(five_piece_geometry())


def five_piece_weaker() -> tuple[PartialOrder, SetMap]:
    """A non-canonical rationalization of :func:`five_piece_function`:
    ``b′>c′>d′``, ``a′>d′``, ``a′>c″``."""
    y = GroundSet(("a′", "b′", "c′", "c″", "d′"))
    order = PartialOrder.from_covers(
        y, [("b′", "c′"), ("c′", "d′"), ("a′", "d′"), ("a′", "c″")]
    )
    return order, SetMap.from_dict(y, ABCD, {s: s[0] for s in y.symbols})


def clone_map() -> SetMap:
    """Clones ``a′,a″,b′,c′,c″,c‴`` collapsed onto ``{a,b,c,d}``."""
    x = GroundSet(("a′", "a″", "b′", "c′", "c″", "c‴"))
    return SetMap.from_dict(x, ABCD, {s: s[0] for s in x.symbols})
