"""Print the worked examples: basements, socles, meets, pieces, images,
melanges, segments and the 2x2 direct product."""
from plott import GroundSet, SimpleWord, basement, linear_from_word, meet, socle, support
from plott.catalog import ABC, clone_map, five_piece_function, five_piece_weaker, linear, two_extremes
from plott.convexity import melange
from plott.functorial import direct_product, word_image
from plott.geometry import canonical_rationalization, pieces, to_geometry, verify_ss_rationalization
from plott.oracle import oracle_segment


def show_pieces(f) -> None:
    ps = pieces(f)
    names = ps.ground.symbols
    for name, (mask, _) in zip(names, ps.pieces):
        print(f"  piece {name} = {f.ground.render(mask)}")
    for u, l in ps.order.covers():
        print(f"  {names[u]} > {names[l]}")


def main() -> None:
    f = two_extremes()
    print("l_abc ∨ l_cba")
    print("  basement:", " ".join(basement(f).strings()))
    print("  socle:   ", " ".join(socle(f).strings()))
    show_pieces(f)

    print("meets of words")
    print("  abc ∧ bac support:", ABC.render(support(meet(linear(ABC, "abc"), linear(ABC, "bac")))))
    print("  abc ∧ acb support:", ABC.render(support(meet(linear(ABC, "abc"), linear(ABC, "acb")))))

    g = five_piece_function()
    print("five-piece function")
    print("  geometry:", " ".join(s for s in to_geometry(g).strings()))
    show_pieces(g)
    order, psi = five_piece_weaker()
    print("  weaker poset verifies:", verify_ss_rationalization(order, psi, g))
    rat = canonical_rationalization(g)
    print("  canonical poset verifies:", verify_ss_rationalization(rat.order, rat.map, g))

    phi = clone_map()
    w = phi.source.word(["c″", "b′", "c′", "a″", "a′"])
    print("clone word image:", word_image(phi, w))

    xyz = GroundSet(tuple("xyzabcd"))
    m = melange(xyz.word("xyzab"), xyz.word("zacyd"))
    print("zaxycdb is a melange of xyzab, zacyd:", xyz.word("zaxycdb") in m)
    print("bca is a melange of bac, cba:", ABC.word("bca") in melange(ABC.word("bac"), ABC.word("cba")))

    x3 = GroundSet(tuple("xyz"))
    print("segment(xzy, zxy):", " ".join(oracle_segment(x3.word("xzy"), x3.word("zxy")).strings()))

    px, py = GroundSet(("x", "x′")), GroundSet(("y", "y′"))
    p = direct_product(linear_from_word(SimpleWord(px, (0, 1))), linear_from_word(SimpleWord(py, (0, 1))))
    print("direct product l_xx′ × l_yy′")
    for z in p.ground.subsets():
        print(f"  {p.ground.render(z):<32} -> {p.ground.render(p(z))}")


if __name__ == "__main__":
    main()
