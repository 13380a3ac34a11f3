"""Convex geometries of Plott functions, pieces and superset rationalization."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .core import ChoiceFunction, GroundSet, SetMap, ValidationError, bits, submasks, support
from .functorial import direct_image, full_image
from .lattice import PartialOrder, max_choice

PRIMES = ("′", "″", "‴", "⁗")


@dataclass(frozen=True)
class ConvexFamily:
    """An intersection-closed family of subsets containing the full set."""

    ground: GroundSet
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted({self.ground.check(m) for m in self.members}))
        object.__setattr__(self, "members", members)
        if self.ground.full not in members:
            raise ValidationError("family must contain the full ground set")
        present = set(members)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if a & b not in present:
                    raise ValidationError(
                        f"family is not closed under intersection: "
                        f"{self.ground.render(a)} ∩ {self.ground.render(b)}"
                    )

    @classmethod
    def of(cls, ground: GroundSet, members: Iterable[int | str]) -> ConvexFamily:
        return cls(ground, tuple(ground.subset(m) if isinstance(m, str) else m for m in members))

    @classmethod
    def power_set(cls, ground: GroundSet) -> ConvexFamily:
        return cls(ground, tuple(ground.subsets()))

    def __contains__(self, mask: object) -> bool:
        return mask in self._present

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def _present(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def closures(self) -> tuple[int, ...]:
        """``closures[B]``: the smallest member containing ``B``."""
        full = self.ground.full
        cl = [full] * (1 << self.ground.size)
        for m in self.members:
            for b in submasks(m):
                cl[b] &= m
        return tuple(cl)

    def closure(self, b: int) -> int:
        return self.closures[self.ground.check(b)]

    @property
    def minimum(self) -> int:
        return self.closures[0]

    def strings(self) -> list[str]:
        return [self.ground.render(m) for m in self.members]


class PieceStructure(NamedTuple):
    ground: GroundSet
    pieces: tuple[tuple[int, int], ...]
    order: PartialOrder

    def owner_map(self, target: GroundSet) -> SetMap:
        return SetMap(self.ground, target, tuple(owner for _, owner in self.pieces))


class Rationalization(NamedTuple):
    ground: GroundSet
    order: PartialOrder
    map: SetMap


def closure(f: ChoiceFunction, a: int, *, trusted: bool = False) -> int:
    """``{x : f(A ∪ x) = f(A)}``."""
    if not trusted:
        f.require_plott()
    f.ground.check(a)
    fa = f.table[a]
    out = 0
    for x in range(f.ground.size):
        if f.table[a | 1 << x] == fa:
            out |= 1 << x
    return out


def to_geometry(f: ChoiceFunction, *, trusted: bool = False) -> ConvexFamily:
    if not trusted:
        f.require_plott()
    return ConvexFamily(
        f.ground, tuple(a for a in f.ground.subsets() if closure(f, a, trusted=True) == a)
    )


def extreme_points(family: ConvexFamily, a: int) -> int:
    """``{x ∈ A : x ∉ cl(A \\ x)}``."""
    cl = family.closures
    out = 0
    for x in bits(family.ground.check(a)):
        if not cl[a & ~(1 << x)] >> x & 1:
            out |= 1 << x
    return out


def is_convex_geometry(family: ConvexFamily) -> bool:
    """Full set present, closed under intersection, and ``cl(A) = cl(ext A)`` for all A."""
    g = family.ground
    present = set(family.members)
    if g.full not in present:
        return False
    if any(a & b not in present for a in family.members for b in family.members):
        return False
    cl = family.closures
    return all(cl[a] == cl[extreme_points(family, a)] for a in g.subsets())


def from_geometry(family: ConvexFamily) -> ChoiceFunction:
    if not is_convex_geometry(family):
        raise ValidationError("family fails the Minkowski-Krein-Milman property")
    return ChoiceFunction.from_callable(family.ground, lambda a: extreme_points(family, a))


def _lower_covers(family: ConvexFamily, c: int) -> list[int]:
    below = [m for m in family.members if m != c and m & ~c == 0]
    return [m for m in below if not any(m != o and m & ~o == 0 for o in below)]


def maximal_chains(family: ConvexFamily) -> list[tuple[int, ...]]:
    """All ⊆-maximal chains from the full set down to the minimal member."""
    bottom = family.minimum
    out: list[tuple[int, ...]] = []

    def walk(chain: tuple[int, ...]) -> None:
        c = chain[-1]
        if c == bottom:
            out.append(chain)
            return
        for m in sorted(_lower_covers(family, c), reverse=True):
            walk(chain + (m,))

    walk((family.ground.full,))
    return out


def chain_word(chain: tuple[int, ...]) -> tuple[int, ...]:
    """Letters removed along a chain, in order (one per step)."""
    out = []
    for big, small in zip(chain, chain[1:]):
        diff = big & ~small
        if diff.bit_count() != 1:
            raise ValidationError("consecutive chain members differ by more than one element")
        out.append(diff.bit_length() - 1)
    return tuple(out)


def piece_names(ground: GroundSet, pieces: Iterable[tuple[int, int]]) -> tuple[str, ...]:
    counts: dict[int, int] = {}
    names = []
    for _, owner in pieces:
        k = counts.get(owner, 0)
        counts[owner] = k + 1
        suffix = PRIMES[k] if k < len(PRIMES) else "′" * (k + 1)
        names.append(ground.symbols[owner] + suffix)
    return tuple(names)


def pieces(f: ChoiceFunction, *, trusted: bool = False) -> PieceStructure:
    """Maximal convex sets avoiding each element, with their inclusion order.

    Pieces are listed by owner index, then ascending mask; primes follow the
    same order.
    """
    family = to_geometry(f, trusted=trusted)
    found: list[tuple[int, int]] = []
    for x in bits(support(f)):
        avoiding = [m for m in family.members if not m >> x & 1]
        for p in avoiding:
            if not any(p != q and p & ~q == 0 for q in avoiding):
                found.append((p, x))
    owners = {}
    for p, x in found:
        if owners.setdefault(p, x) != x:
            raise ValidationError("a piece belongs to two elements; family is not a geometry")
    found.sort(key=lambda t: (t[1], t[0]))
    ground = GroundSet(piece_names(f.ground, found), cap=max(len(found), f.ground.size))
    rows = tuple(
        sum(1 << j for j, (q, _) in enumerate(found) if q & ~p == 0) for p, _ in found
    )
    return PieceStructure(ground, tuple(found), PartialOrder(ground, rows))


def canonical_rationalization(f: ChoiceFunction, *, trusted: bool = False) -> Rationalization:
    """Pieces ordered by inclusion, each mapped to its owner."""
    ps = pieces(f, trusted=trusted)
    return Rationalization(ps.ground, ps.order, ps.owner_map(f.ground))


def verify_ss_rationalization(order: PartialOrder, psi: SetMap, f: ChoiceFunction) -> bool:
    if psi.source != order.ground or psi.target != f.ground:
        raise ValidationError("rationalization map does not connect the order to the function")
    return direct_image(psi, max_choice(order)) == f


def antifilter(order: PartialOrder, y: int) -> int:
    """Elements not dominating ``y``: the complement of its principal filter."""
    out = 0
    for z, row in enumerate(order.dominates):
        if not row >> y & 1:
            out |= 1 << z
    return out


def rationalization_alpha(order: PartialOrder, psi: SetMap, f: ChoiceFunction) -> SetMap:
    """Map each ``y`` to the first piece of ``psi(y)`` containing ``psi_+(AF(y))``."""
    if not verify_ss_rationalization(order, psi, f):
        raise ValidationError("input is not an SS-rationalization of the function")
    ps = pieces(f, trusted=True)
    images = []
    for y in range(order.ground.size):
        owner = psi.images[y]
        target = full_image(psi, antifilter(order, y))
        for k, (p, x) in enumerate(ps.pieces):
            if x == owner and target & ~p == 0:
                images.append(k)
                break
        else:
            raise ValidationError(
                f"no piece of {f.ground.symbols[owner]} contains the image of "
                f"{order.ground.symbols[y]}'s antifilter"
            )
    return SetMap(order.ground, ps.ground, tuple(images))
