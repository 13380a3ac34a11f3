"""``plott`` command line: JSON documents in, JSON or DOT out.

Exit status: 0 success, 1 invalid input, 2 checked property violated,
3 capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import convexity, core, functorial, geometry, io, lattice
from .core import CapacityError, ChoiceFunction, GroundSet, PlottError, SetMap, ValidationError
from .dot import export_dot
from .geometry import ConvexFamily
from .lattice import PartialOrder, WordSet

EXIT_OK, EXIT_INVALID, EXIT_VIOLATED, EXIT_CAPACITY = 0, 1, 2, 3


class Violated(Exception):
    """A checked property does not hold; carries the result document."""

    def __init__(self, doc: dict[str, Any]):
        super().__init__("property violated")
        self.doc = doc


def _read(path: str, cap: int | None) -> io.Document:
    if path == "-":
        return io.loads(sys.stdin.read(), cap)
    return io.load(path, cap)


def _expect(obj: Any, kind: type, path: str) -> Any:
    if not isinstance(obj, kind):
        names = {
            ChoiceFunction: "choice", SetMap: "map", WordSet: "words",
            PartialOrder: "order", ConvexFamily: "family", GroundSet: "ground",
        }
        raise ValidationError(f"{path}: expected a {names[kind]} document")
    return obj


def _choice(args, path):
    return _expect(_read(path, args.cap), ChoiceFunction, path)


def _map(args, path):
    if path is None:
        raise ValidationError("--map is required")
    return _expect(_read(path, args.cap), SetMap, path)


def _words(args, paths) -> list:
    out = []
    for p in paths:
        out.extend(_expect(_read(p, args.cap), WordSet, p))
    return out


def _pair(words, what):
    if len(words) != 2:
        raise ValidationError(f"{what} needs exactly two words, got {len(words)}")
    return words


def cmd_check_pi(args):
    f = _choice(args, args.file)
    witness = core.path_independence_witness(f)
    if witness is None:
        return {"path_independent": True}
    g = f.ground
    raise Violated({"path_independent": False, "witness": [g.key(witness[0]), g.key(witness[1])]})


def cmd_plottize(args):
    return lattice.plottize(_choice(args, args.file))


def cmd_join(args):
    return lattice.join(_choice(args, args.first), _choice(args, args.second))


def cmd_meet(args):
    return lattice.meet(_choice(args, args.first), _choice(args, args.second))


def cmd_support(args):
    f = _choice(args, args.file)
    return {"ground": list(f.ground.symbols), "subset": f.ground.key(core.support(f))}


def cmd_basement(args):
    return lattice.basement(_choice(args, args.file))


def cmd_socle(args):
    return lattice.socle(_choice(args, args.file))


def cmd_geometry(args):
    return geometry.to_geometry(_choice(args, args.file))


def cmd_from_geometry(args):
    return geometry.from_geometry(_expect(_read(args.file, args.cap), ConvexFamily, args.file))


def cmd_pieces(args):
    f = _choice(args, args.file)
    ps = geometry.pieces(f)
    doc = io.to_document(ps.order)
    doc["pieces"] = {s: f.ground.key(p) for s, (p, _) in zip(ps.ground.symbols, ps.pieces)}
    return doc


def cmd_rationalize(args):
    rat = geometry.canonical_rationalization(_choice(args, args.file))
    return {"order": io.to_document(rat.order), "map": io.to_document(rat.map)}


def cmd_verify_rat(args):
    order = _expect(_read(args.order, args.cap), PartialOrder, args.order)
    ok = geometry.verify_ss_rationalization(order, _map(args, args.map), _choice(args, args.file))
    if not ok:
        raise Violated({"rationalization": False})
    return {"rationalization": True}


def cmd_image(args):
    phi = _map(args, args.map)
    obj = _read(args.file, args.cap)
    if isinstance(obj, WordSet):
        return WordSet.of(phi.target, [functorial.word_image(phi, w) for w in obj])
    return functorial.direct_image(phi, _expect(obj, ChoiceFunction, args.file))


def cmd_preimage(args):
    return functorial.inverse_image(_map(args, args.map), _choice(args, args.file))


def cmd_extend(args):
    embed = _map(args, args.map)
    return functorial.trivial_extension(_choice(args, args.file), embed.target, embed)


def cmd_sum(args):
    return functorial.direct_sum(_choice(args, args.first), _choice(args, args.second))


def cmd_product(args):
    # pair symbols are written "(x;y)": commas would break subset keys
    return functorial.direct_product(
        _choice(args, args.first), _choice(args, args.second), args.cap, sep=";"
    )


def cmd_correspond(args):
    h = _choice(args, args.h)
    phi = _map(args, args.phi)
    psi = _map(args, args.psi)
    return functorial.apply_correspondence(h, phi, psi, _choice(args, args.f))


def cmd_shuffle(args):
    w, v = _pair(_words(args, args.files), "shuffle")
    return convexity.shuffle(w, v)


def cmd_melange(args):
    words = _words(args, args.files)
    if not words:
        raise ValidationError("melange needs at least one word")
    return convexity.melange_family(words)


def cmd_segment(args):
    w, v = _pair(_words(args, args.files), "segment")
    return convexity.segment(w, v)


def cmd_hull(args):
    return convexity.convex_hull(_expect(_read(args.file, args.cap), WordSet, args.file))


def cmd_is_convex(args):
    if not convexity.is_convex(_expect(_read(args.file, args.cap), WordSet, args.file)):
        raise Violated({"convex": False})
    return {"convex": True}


def cmd_enumerate(args):
    if args.ground is None:
        raise ValidationError("--ground is required")
    ground = _expect(_read(args.ground, args.cap), GroundSet, args.ground)
    return [io.to_document(f) for f in lattice.enumerate_plott(ground, args.strategy)]


def cmd_dot(args):
    if args.file is None:
        if args.ground is None:
            raise ValidationError("dot needs a document or --ground")
        ground = _expect(_read(args.ground, args.cap), GroundSet, args.ground)
        return export_dot(list(lattice.enumerate_plott(ground)))
    return export_dot(_read(args.file, args.cap))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plott", description=__doc__.splitlines()[0])
    parser.add_argument("--cap", type=int, default=None, help="ground-set size cap")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, nargs=None, map_flag=False):
        p = sub.add_parser(name)
        for arg in positional:
            p.add_argument(arg, nargs=nargs)
        if map_flag:
            p.add_argument("--map", default=None)
        p.set_defaults(func=func)
        return p

    add("check-pi", cmd_check_pi, "file")
    add("plottize", cmd_plottize, "file")
    add("join", cmd_join, "first", "second")
    add("meet", cmd_meet, "first", "second")
    add("support", cmd_support, "file")
    add("basement", cmd_basement, "file")
    add("socle", cmd_socle, "file")
    add("geometry", cmd_geometry, "file")
    add("from-geometry", cmd_from_geometry, "file")
    add("pieces", cmd_pieces, "file")
    add("rationalize", cmd_rationalize, "file")
    add("verify-rat", cmd_verify_rat, "order", "file", map_flag=True)
    add("image", cmd_image, "file", map_flag=True)
    add("preimage", cmd_preimage, "file", map_flag=True)
    add("extend", cmd_extend, "file", map_flag=True)
    add("sum", cmd_sum, "first", "second")
    add("product", cmd_product, "first", "second")
    add("correspond", cmd_correspond, "h", "phi", "psi", "f")
    add("shuffle", cmd_shuffle, "files", nargs="+")
    add("melange", cmd_melange, "files", nargs="+")
    add("segment", cmd_segment, "files", nargs="+")
    add("hull", cmd_hull, "file")
    add("is-convex", cmd_is_convex, "file")
    p = add("enumerate", cmd_enumerate)
    p.add_argument("--ground", default=None)
    p.add_argument("--strategy", choices=["auto", "brute", "geometry"], default="auto")
    p = add("dot", cmd_dot, "file", nargs="?")
    p.add_argument("--ground", default=None)
    return parser


def _emit(result: Any) -> None:
    if isinstance(result, str):
        sys.stdout.write(result)
    elif isinstance(result, list):
        for doc in result:
            sys.stdout.write(io.dumps(doc) + "\n")
    else:
        sys.stdout.write(io.dumps(result) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; 2 is reserved for violated checks
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    try:
        _emit(args.func(args))
    except Violated as exc:
        _emit(exc.doc)
        return EXIT_VIOLATED
    except CapacityError as exc:
        print(f"plott: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (PlottError, json.JSONDecodeError) as exc:
        print(f"plott: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
