"""Graphviz DOT text for Hasse diagrams."""
from __future__ import annotations

from typing import Callable, Sequence

from .core import CapacityError, ChoiceFunction
from .geometry import ConvexFamily
from .lattice import PartialOrder, WordSet, socle

MAX_NODES = 2000


def hasse_covers(n: int, below: Callable[[int, int], bool]) -> list[tuple[int, int]]:
    """Covering pairs ``(upper, lower)`` of the order ``below(i, j): i < j``."""
    strict = [sum(1 << i for i in range(n) if i != j and below(i, j)) for j in range(n)]
    out = []
    for j, down in enumerate(strict):
        skip = 0
        rest = down
        while rest:
            i = (rest & -rest).bit_length() - 1
            skip |= strict[i]
            rest &= rest - 1
        covered = down & ~skip
        out.extend((j, i) for i in range(n) if covered >> i & 1)
    return out


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render(name: str, labels: Sequence[str], edges: Sequence[tuple[int, int]]) -> str:
    if len(labels) > MAX_NODES:
        raise CapacityError(f"DOT export is capped at {MAX_NODES} nodes")
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f"  n{i} [label={_quote(s)}];" for i, s in enumerate(labels)]
    lines += [f"  n{lo} -> n{hi};" for hi, lo in sorted(edges, key=lambda e: (e[1], e[0]))]
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(structure) -> str:
    """Hasse diagram of a poset, a convex family, a word set under the prefix
    order, or a list of choice functions under the pointwise order."""
    if isinstance(structure, PartialOrder):
        labels = list(structure.ground.symbols)
        return render("poset", labels, structure.covers())
    if isinstance(structure, ConvexFamily):
        g = structure.ground
        ms = structure.members
        labels = [g.render(m) if m else "∅" for m in ms]
        edges = hasse_covers(len(ms), lambda i, j: ms[i] & ~ms[j] == 0 and ms[i] != ms[j])
        return render("family", labels, edges)
    if isinstance(structure, WordSet):
        ws = structure.words
        labels = [str(w) for w in structure]
        edges = hasse_covers(len(ws), lambda i, j: len(ws[i]) < len(ws[j]) and ws[j][:len(ws[i])] == ws[i])
        return render("words", labels, edges)
    fs = list(structure)
    if fs and all(isinstance(f, ChoiceFunction) for f in fs):
        if len(fs) > MAX_NODES:
            raise CapacityError(f"DOT export is capped at {MAX_NODES} nodes")
        labels = [";".join(str(w) for w in socle(f) if len(w)) or "0" for f in fs]
        edges = hasse_covers(len(fs), lambda i, j: i != j and fs[i] <= fs[j])
        return render("lattice", labels, edges)
    raise TypeError(f"cannot export {type(structure).__name__} as DOT")

