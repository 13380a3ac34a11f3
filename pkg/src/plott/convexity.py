"""Shuffles, melanges and the convex structure on simple words."""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .core import SimpleWord, ValidationError
from .geometry import ConvexFamily
from .lattice import WordSet, basement, join_of_words


def _interleavings(words: Sequence[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Simplified interleavings of ``words``: each merged sequence keeps only
    the first occurrence of every letter.

    The letters emitted so far are determined by the read positions, so the
    suffix sets are memoized on positions alone.
    """
    k = len(words)

    @lru_cache(maxsize=None)
    def rest(pos: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
        seen = set()
        for w, p in zip(words, pos):
            seen.update(w[:p])
        out: set[tuple[int, ...]] = set()
        for i in range(k):
            if pos[i] == len(words[i]):
                continue
            letter = words[i][pos[i]]
            nxt = pos[:i] + (pos[i] + 1,) + pos[i + 1:]
            tails = rest(nxt)
            if letter in seen:
                out |= tails
            else:
                out |= {(letter,) + t for t in tails}
        return frozenset(out) if out else frozenset({()})

    return set(rest((0,) * k))


def _same_ground(words: Sequence[SimpleWord]):
    ground = words[0].ground
    if any(w.ground != ground for w in words):
        raise ValidationError("words live on different ground sets")
    return ground


def shuffle(w: SimpleWord, v: SimpleWord) -> WordSet:
    """All interleavings of two words over disjoint letters."""
    ground = _same_ground([w, v])
    if w.support & v.support:
        raise ValidationError(f"shuffle needs disjoint letters: {w} and {v} overlap")
    return WordSet(ground, tuple(_interleavings([w.letters, v.letters])))


def melange(w: SimpleWord, v: SimpleWord) -> WordSet:
    """Shuffles of disjoint copies of ``w`` and ``v``, collapsed back to one alphabet."""
    return melange_family([w, v])


def melange_family(words: Sequence[SimpleWord]) -> WordSet:
    if not words:
        raise ValidationError("melange of an empty family is undefined")
    ground = _same_ground(words)
    return WordSet(ground, tuple(_interleavings([w.letters for w in words])))


def segment(w: SimpleWord, v: SimpleWord) -> WordSet:
    """``co(w, v)``: the basement of ``l_w ∨ l_v``."""
    ground = _same_ground([w, v])
    return basement(join_of_words([w, v], ground))


def is_convex(c: WordSet) -> bool:
    """Non-empty and containing the segment between any two of its words."""
    if not c.words:
        return False
    words = list(c)
    for i, w in enumerate(words):
        for v in words[i:]:
            if not segment(w, v) <= c:
                return False
    return True


def convex_hull(c: WordSet) -> WordSet:
    return basement(join_of_words(c))


def geometry_from_convex_set(c: WordSet) -> ConvexFamily:
    """Complements of the supports of the words in a convex set."""
    if not is_convex(c):
        raise ValidationError("word set is not convex")
    full = c.ground.full
    return ConvexFamily(c.ground, tuple(full & ~w.support for w in c))
