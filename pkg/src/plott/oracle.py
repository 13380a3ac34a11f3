"""Definitional brute-force references for the test suite.

Nothing here calls the optimized algorithms: only the core constructors,
``evaluate`` and the path-independence test are used, and every set-level
operation is spelled out from its definition.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .core import (
    CapacityError,
    ChoiceFunction,
    GroundSet,
    SetMap,
    SimpleWord,
    ValidationError,
    evaluate,
    is_path_independent,
)
from .lattice import WordSet

ORACLE_CAP = 3
WORD_ORACLE_CAP = 4


def _check_cap(ground: GroundSet, cap: int = ORACLE_CAP) -> None:
    if ground.size > cap:
        raise CapacityError(f"oracle is capped at n={cap}")


def _subsets_of(a: int) -> list[int]:
    return [b for b in range(a + 1) if b & ~a == 0]


@lru_cache(maxsize=None)
def all_plott(ground: GroundSet) -> tuple[ChoiceFunction, ...]:
    """Every path-independent contraction table, by exhaustive search."""
    _check_cap(ground)
    options = [_subsets_of(a) for a in range(1 << ground.size)]
    found = []
    for table in itertools.product(*options):
        f = ChoiceFunction(ground, table)
        if is_path_independent(f):
            found.append(f)
    return tuple(found)


def _below(f: ChoiceFunction, g: ChoiceFunction) -> bool:
    return all(evaluate(f, a) & ~evaluate(g, a) == 0 for a in f.ground.subsets())


def _union(ground: GroundSet, fs) -> ChoiceFunction:
    table = [0] * (1 << ground.size)
    for f in fs:
        for a in ground.subsets():
            table[a] |= evaluate(f, a)
    return ChoiceFunction(ground, tuple(table))


def oracle_plottize(f: ChoiceFunction) -> ChoiceFunction:
    """Union of every Plott function below ``f``."""
    _check_cap(f.ground)
    return _union(f.ground, [h for h in all_plott(f.ground) if _below(h, f)])


def oracle_meet(f: ChoiceFunction, g: ChoiceFunction) -> ChoiceFunction:
    if f.ground != g.ground:
        raise ValidationError("choice functions live on different ground sets")
    _check_cap(f.ground)
    both = ChoiceFunction(
        f.ground, tuple(evaluate(f, a) & evaluate(g, a) for a in f.ground.subsets())
    )
    return oracle_plottize(both)


def _push(phi: SetMap, f: ChoiceFunction) -> ChoiceFunction:
    table = []
    for b in range(1 << phi.target.size):
        pre = sum(1 << i for i, j in enumerate(phi.images) if b >> j & 1)
        chosen = evaluate(f, pre)
        image = 0
        for i in range(phi.source.size):
            if chosen >> i & 1:
                image |= 1 << phi.images[i]
        table.append(image)
    return ChoiceFunction(phi.target, tuple(table))


def oracle_inverse_image(phi: SetMap, g: ChoiceFunction) -> ChoiceFunction:
    """Union of all Plott ``f`` on the source with ``phi_*(f) <= g``."""
    if phi.target != g.ground:
        raise ValidationError("map target differs from the choice function's ground set")
    _check_cap(phi.source)
    keep = [f for f in all_plott(phi.source) if _below(_push(phi, f), g)]
    return oracle_plottize(_union(phi.source, keep))


def _tagged_shuffles(left, right):
    if not left:
        yield list(right)
        return
    if not right:
        yield list(left)
        return
    for tail in _tagged_shuffles(left[1:], right):
        yield [left[0]] + tail
    for tail in _tagged_shuffles(left, right[1:]):
        yield [right[0]] + tail


def oracle_segment(w: SimpleWord, v: SimpleWord) -> WordSet:
    """All prefixes of all collapsed shuffles of tagged copies of ``w`` and ``v``."""
    if w.ground != v.ground:
        raise ValidationError("words live on different ground sets")
    _check_cap(w.ground, WORD_ORACLE_CAP)
    left = [(x, 0) for x in w.letters]
    right = [(x, 1) for x in v.letters]
    out = set()
    for merged in _tagged_shuffles(left, right):
        simple: list[int] = []
        for x, _tag in merged:
            if x not in simple:
                simple.append(x)
        for k in range(len(simple) + 1):
            out.add(tuple(simple[:k]))
    return WordSet(w.ground, tuple(out))
