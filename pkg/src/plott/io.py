"""JSON interchange documents.

The document kind is recognized from its payload key:

* choice: ``{"ground": [...], "choice": {"a,b": "a", ...}}``
* map:    ``{"source": [...], "target": [...], "map": {"a'": "a", ...}}``
* words:  ``{"ground": [...], "words": [["a", "b"], ...]}``
* order:  ``{"ground": [...], "covers": [["upper", "lower"], ...]}``
* family: ``{"ground": [...], "members": ["a,b", "", ...]}``

A bare ``{"ground": [...]}`` loads as a ground set.
"""
from __future__ import annotations

import json
from typing import Any, Union

from .core import ChoiceFunction, GroundSet, SetMap, SimpleWord, ValidationError
from .geometry import ConvexFamily
from .lattice import PartialOrder, WordSet

Document = Union[ChoiceFunction, SetMap, WordSet, PartialOrder, ConvexFamily, GroundSet]

FORBIDDEN = (",", '"', "'")


def load_ground(raw: Any, cap: int | None = None) -> GroundSet:
    if not isinstance(raw, list):
        raise ValidationError("ground must be a list of symbols")
    for s in raw:
        if not isinstance(s, str):
            raise ValidationError(f"symbol {s!r} is not a string")
        if any(c in s for c in FORBIDDEN):
            raise ValidationError(f"symbol {s!r} contains a comma or quote")
    return GroundSet(tuple(raw), cap=cap)


def _load_choice(ground: GroundSet, raw: Any) -> ChoiceFunction:
    if not isinstance(raw, dict):
        raise ValidationError("choice must be an object of subset keys")
    table: list[int | None] = [None] * (1 << ground.size)
    table[0] = 0
    for key, value in raw.items():
        if not isinstance(value, str):
            raise ValidationError(f"choice value for {key!r} must be a subset key string")
        a = ground.parse_key(key)
        if a == 0:
            if value != "":
                raise ValidationError("the empty menu must choose the empty set")
            continue
        if table[a] is not None:
            raise ValidationError(f"subset {key!r} listed twice")
        table[a] = ground.parse_key(value)
    missing = [ground.key(a) for a, v in enumerate(table) if v is None]
    if missing:
        raise ValidationError(f"choice table misses subsets {missing}")
    return ChoiceFunction(ground, tuple(table))


def _load_words(ground: GroundSet, raw: Any) -> WordSet:
    if not isinstance(raw, list) or not all(isinstance(w, list) for w in raw):
        raise ValidationError("words must be a list of symbol lists")
    return WordSet.of(ground, [ground.word(w) for w in raw])


def _load_order(ground: GroundSet, raw: Any) -> PartialOrder:
    if not isinstance(raw, list) or not all(isinstance(p, list) and len(p) == 2 for p in raw):
        raise ValidationError("covers must be a list of [upper, lower] pairs")
    return PartialOrder.from_covers(ground, [tuple(p) for p in raw])


def _load_family(ground: GroundSet, raw: Any) -> ConvexFamily:
    if not isinstance(raw, list) or not all(isinstance(m, str) for m in raw):
        raise ValidationError("members must be a list of subset keys")
    return ConvexFamily(ground, tuple(ground.parse_key(m) for m in raw))


_LOADERS = {
    "choice": _load_choice,
    "words": _load_words,
    "covers": _load_order,
    "members": _load_family,
}


def from_document(doc: Any, cap: int | None = None) -> Document:
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    if "map" in doc:
        source = load_ground(doc.get("source"), cap)
        target = load_ground(doc.get("target"), cap)
        mapping = doc["map"]
        if not isinstance(mapping, dict):
            raise ValidationError("map must be an object from source to target symbols")
        return SetMap.from_dict(source, target, mapping)
    if "ground" not in doc:
        raise ValidationError("document has neither a ground set nor a map")
    ground = load_ground(doc["ground"], cap)
    kinds = [k for k in _LOADERS if k in doc]
    if len(kinds) > 1:
        raise ValidationError(f"document mixes payloads {kinds}")
    if not kinds:
        return ground
    return _LOADERS[kinds[0]](ground, doc[kinds[0]])


def to_document(obj: Document | SimpleWord) -> dict[str, Any]:
    if isinstance(obj, ChoiceFunction):
        g = obj.ground
        return {
            "ground": list(g.symbols),
            "choice": {g.key(a): g.key(obj.table[a]) for a in g.subsets() if a},
        }
    if isinstance(obj, SetMap):
        return {
            "source": list(obj.source.symbols),
            "target": list(obj.target.symbols),
            "map": obj.as_dict(),
        }
    if isinstance(obj, SimpleWord):
        obj = WordSet.of(obj.ground, [obj])
    if isinstance(obj, WordSet):
        return {"ground": list(obj.ground.symbols), "words": [w.symbols() for w in obj]}
    if isinstance(obj, PartialOrder):
        s = obj.ground.symbols
        return {"ground": list(s), "covers": [[s[x], s[y]] for x, y in obj.covers()]}
    if isinstance(obj, ConvexFamily):
        g = obj.ground
        return {"ground": list(g.symbols), "members": [g.key(m) for m in obj.members]}
    if isinstance(obj, GroundSet):
        return {"ground": list(obj.symbols)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def loads(text: str, cap: int | None = None) -> Document:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None
    return from_document(doc, cap)


def dumps(obj: Any) -> str:
    if not isinstance(obj, dict):
        obj = to_document(obj)
    return json.dumps(obj, ensure_ascii=False)


def load(path: str, cap: int | None = None) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read(), cap)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
