"""Base change for choice functions: direct and inverse images, sums, products."""
from __future__ import annotations

from typing import NamedTuple

from .core import (
    CapacityError,
    ChoiceFunction,
    GroundSet,
    SetMap,
    SimpleWord,
    ValidationError,
    size_cap,
)
from .lattice import WordSet, basement, join_of_words, meet


def direct_image(phi: SetMap, f: ChoiceFunction) -> ChoiceFunction:
    """``B -> phi(f(phi^-1 B))``."""
    if phi.source != f.ground:
        raise ValidationError("map source differs from the choice function's ground set")
    table = f.table
    return ChoiceFunction.from_callable(
        phi.target, lambda b: phi.image(table[phi.preimage(b)])
    )


def word_image(phi: SetMap, w: SimpleWord) -> SimpleWord:
    """Map each letter through ``phi`` and keep first occurrences only."""
    if w.ground != phi.source:
        raise ValidationError("word lives outside the map's source")
    out: list[int] = []
    for i in w.letters:
        j = phi.images[i]
        if j not in out:
            out.append(j)
    return SimpleWord(phi.target, tuple(out))


def full_image(phi: SetMap, a: int) -> int:
    """``{y : phi^-1(y) ⊆ A}``; targets with an empty fiber always qualify."""
    phi.source.check(a)
    missed = 0
    for i, j in enumerate(phi.images):
        if not a >> i & 1:
            missed |= 1 << j
    return phi.target.full & ~missed


def trivial_extension(f: ChoiceFunction, target: GroundSet, embed: SetMap) -> ChoiceFunction:
    """``f_Y(B) = f(B ∩ X)`` along an injective embedding ``X -> Y``."""
    if embed.target != target:
        raise ValidationError("embedding does not land in the requested ground set")
    if not embed.injective:
        raise ValidationError("embedding is not injective")
    return direct_image(embed, f)


def _disjoint_union(x: GroundSet, y: GroundSet) -> GroundSet:
    clash = set(x.symbols) & set(y.symbols)
    if clash:
        raise ValidationError(f"ground sets share symbols {sorted(clash)}")
    return GroundSet(x.symbols + y.symbols)


def direct_sum(f: ChoiceFunction, g: ChoiceFunction) -> ChoiceFunction:
    """``(f ⨿ g)(A ⨿ B) = f(A) ⨿ g(B)`` on the concatenated ground set."""
    ground = _disjoint_union(f.ground, g.ground)
    n = f.ground.size
    low = f.ground.full
    return ChoiceFunction.from_callable(
        ground, lambda a: f.table[a & low] | g.table[a >> n] << n
    )


def inverse_basement(phi: SetMap, g: ChoiceFunction) -> WordSet:
    """Words over the source whose word image lies in ``basement(g)``.

    The preimage of a prefix-closed set is prefix-closed, so the search only
    extends words that already qualify.
    """
    if phi.target != g.ground:
        raise ValidationError("map target differs from the choice function's ground set")
    target = basement(g)
    allowed = set(target.words)
    n = phi.source.size
    out: list[tuple[int, ...]] = []
    stack: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), ())]
    while stack:
        w, img = stack.pop()
        out.append(w)
        for x in range(n):
            if x in w:
                continue
            y = phi.images[x]
            nimg = img if y in img else img + (y,)
            if nimg in allowed:
                stack.append((w + (x,), nimg))
    return WordSet(phi.source, tuple(out))


def inverse_image(phi: SetMap, g: ChoiceFunction) -> ChoiceFunction:
    """The largest Plott function on the source whose direct image is ``<= g``."""
    return join_of_words(inverse_basement(phi, g))


class Product(NamedTuple):
    ground: GroundSet
    first: SetMap
    second: SetMap


def product_ground(
    x: GroundSet, y: GroundSet, cap: int | None = None, sep: str = ","
) -> Product:
    """``X × Y`` with symbols ``(x,y)`` in x-major order, plus both projections.

    ``sep`` joins the two coordinates; JSON documents need a comma-free one.
    """
    limit = size_cap() if cap is None else cap
    if x.size * y.size > limit:
        raise CapacityError(f"product of sizes {x.size}×{y.size} exceeds cap {limit}")
    pairs = [(i, j) for i in range(x.size) for j in range(y.size)]
    ground = GroundSet(tuple(f"({x.symbols[i]}{sep}{y.symbols[j]})" for i, j in pairs), cap=limit)
    return Product(
        ground,
        SetMap(ground, x, tuple(i for i, _ in pairs)),
        SetMap(ground, y, tuple(j for _, j in pairs)),
    )


def direct_product(
    f: ChoiceFunction, g: ChoiceFunction, cap: int | None = None, sep: str = ","
) -> ChoiceFunction:
    """``alpha^*(f) ∧ beta^*(g)`` on ``X × Y``."""
    prod = product_ground(f.ground, g.ground, cap, sep)
    return meet(inverse_image(prod.first, f), inverse_image(prod.second, g), trusted=True)


def pairing(phi: SetMap, psi: SetMap, cap: int | None = None) -> tuple[SetMap, Product]:
    """``pi(z) = (phi(z), psi(z))`` into ``X × Y``, with the product's projections."""
    if phi.source != psi.source:
        raise ValidationError("correspondence maps need a common source")
    prod = product_ground(phi.target, psi.target, cap)
    ny = psi.target.size
    pi = SetMap(phi.source, prod.ground, tuple(i * ny + j for i, j in zip(phi.images, psi.images)))
    return pi, prod


def apply_correspondence(
    h: ChoiceFunction, phi: SetMap, psi: SetMap, f: ChoiceFunction
) -> ChoiceFunction:
    """``psi_*(h ∧ phi^*(f))`` for a correspondence ``X <- Z -> Y``."""
    if phi.source != h.ground or psi.source != h.ground:
        raise ValidationError("correspondence maps must start at the ground of h")
    if phi.target != f.ground:
        raise ValidationError("first map must land on the ground of f")
    h.require_plott("correspondence function")
    return direct_image(psi, meet(h, inverse_image(phi, f), trusted=True))
