import pytest
from hypothesis import given
from hypothesis import strategies as st

from plott import (
    ChoiceFunction,
    GroundSet,
    SetMap,
    SimpleWord,
    ValidationError,
    basement,
    identity_on,
    is_path_independent,
    join,
    linear_from_word,
    meet,
    plottize,
    socle,
    support,
)
from plott.catalog import ABC, ABCD, clone_map, linear
from plott.convexity import shuffle
from plott.core import CapacityError
from plott.functorial import (
    apply_correspondence,
    direct_image,
    direct_product,
    direct_sum,
    full_image,
    inverse_basement,
    inverse_image,
    pairing,
    product_ground,
    trivial_extension,
    word_image,
)
from plott.geometry import to_geometry
from plott.lattice import WordSet

from conftest import choice_functions, ground_of, plott_functions, plott_list, set_maps, words

XY = GroundSet(("x", "y"))


@st.composite
def map_and_functions(draw, n_source, n_target):
    source, target = ground_of(n_source), GroundSet(tuple("pqrs"[:n_target]))
    phi = draw(set_maps(source, target))
    f = draw(st.sampled_from(plott_list(n_source)))
    g = draw(plott_functions(target))
    return phi, f, g


sizes = st.tuples(st.integers(1, 3), st.integers(1, 3))


class TestDirectImage:
    def test_identity_map(self, abc):
        phi = SetMap.identity(abc)
        for f in plott_list(3):
            assert direct_image(phi, f) == f

    def test_identity_on_subset(self):
        phi = clone_map()
        s = phi.source.subset(["a′", "c″"])
        assert direct_image(phi, identity_on(phi.source, s)) == identity_on(ABCD, ABCD.subset("ac"))

    def test_ground_mismatch(self, abc):
        with pytest.raises(ValidationError):
            direct_image(SetMap.identity(abc), ChoiceFunction.zero(ground_of(2)))

    @given(st.data(), sizes)
    def test_preserves_plott_and_support(self, data, nm):
        phi, f, _ = data.draw(map_and_functions(*nm))
        h = direct_image(phi, f)
        assert is_path_independent(h)
        assert support(h) == phi.image(support(f))

    @given(st.data())
    def test_composition(self, data):
        a, b, c = ground_of(3), GroundSet(tuple("pqr")), GroundSet(("u", "v"))
        phi = data.draw(set_maps(a, b))
        psi = data.draw(set_maps(b, c))
        f = data.draw(st.sampled_from(plott_list(3)))
        assert direct_image(phi.then(psi), f) == direct_image(psi, direct_image(phi, f))

    @given(st.data(), sizes)
    def test_commutes_with_join(self, data, nm):
        phi, f, _ = data.draw(map_and_functions(*nm))
        f2 = data.draw(st.sampled_from(plott_list(nm[0])))
        assert direct_image(phi, join(f, f2)) == join(direct_image(phi, f), direct_image(phi, f2))

    @given(st.data(), sizes)
    def test_monotone(self, data, nm):
        phi, f, _ = data.draw(map_and_functions(*nm))
        f2 = data.draw(st.sampled_from(plott_list(nm[0])))
        if f <= f2:
            assert direct_image(phi, f) <= direct_image(phi, f2)


class TestWordImage:
    def test_clone_word(self):
        phi = clone_map()
        w = phi.source.word(["c″", "b′", "c′", "a″", "a′"])
        assert str(word_image(phi, w)) == "cba"

    def test_injective_keeps_length(self, abc):
        phi = SetMap.from_dict(abc, ABCD, {"a": "d", "b": "a", "c": "c"})
        assert str(word_image(phi, abc.word("abc"))) == "dac"

    @given(st.data(), sizes)
    def test_linear_functions_map_to_linear(self, data, nm):
        phi, _, _ = data.draw(map_and_functions(*nm))
        w = data.draw(words(phi.source))
        assert direct_image(phi, linear_from_word(w)) == linear_from_word(word_image(phi, w))

    @pytest.mark.parametrize("n_target", [1, 2, 3])
    def test_basement_of_image(self, n_target):
        # basement commutes with the word image, for every Plott f and a few maps
        source, target = ground_of(3), GroundSet(tuple("pqr"[:n_target]))
        maps = [SetMap(source, target, (i % n_target, (i + 1) % n_target, 0)) for i in range(3)]
        for phi in maps:
            for f in plott_list(3):
                expected = WordSet.of(target, {word_image(phi, w) for w in basement(f)})
                assert basement(direct_image(phi, f)) == expected


class TestFullImage:
    def test_full_set(self):
        phi = clone_map()
        assert full_image(phi, phi.source.full) == ABCD.full

    def test_empty_fibers_included(self):
        phi = clone_map()
        assert full_image(phi, 0) == ABCD.subset("d")
        assert full_image(phi, phi.source.subset(["a′", "a″", "c′"])) == ABCD.subset("ad")

    def test_identity(self, abc):
        phi = SetMap.identity(abc)
        assert all(full_image(phi, a) == a for a in abc.subsets())

    @given(st.data(), sizes)
    def test_intersections(self, data, nm):
        phi, _, _ = data.draw(map_and_functions(*nm))
        a = data.draw(st.integers(0, phi.source.full))
        b = data.draw(st.integers(0, phi.source.full))
        assert full_image(phi, a & b) == full_image(phi, a) & full_image(phi, b)

    @pytest.mark.parametrize("n_target", [1, 2, 3, 4])
    def test_geometry_of_image(self, n_target):
        source, target = ground_of(3), GroundSet(tuple("pqrs"[:n_target]))
        phi = SetMap(source, target, tuple(i % n_target for i in range(3)))
        for f in plott_list(3):
            fam = to_geometry(direct_image(phi, f))
            assert set(fam.members) == {full_image(phi, m) for m in to_geometry(f).members}


class TestTrivialExtension:
    def test_same_ground(self, abc):
        f = linear(abc, "bca")
        assert trivial_extension(f, abc, SetMap.identity(abc)) == f

    def test_restricts_to_source(self, abc):
        embed = SetMap.from_dict(abc, ABCD, {s: s for s in "abc"})
        fy = trivial_extension(linear(abc, "abc"), ABCD, embed)
        assert fy(ABCD.subset("bd")) == ABCD.subset("b")
        assert support(fy) == ABCD.subset("abc")

    def test_rejects_collapsing(self, abc):
        phi = SetMap.from_dict(abc, XY, {"a": "x", "b": "x", "c": "y"})
        with pytest.raises(ValidationError):
            trivial_extension(ChoiceFunction.zero(abc), XY, phi)

    def test_rejects_wrong_target(self, abc):
        embed = SetMap.from_dict(abc, ABCD, {s: s for s in "abc"})
        with pytest.raises(ValidationError):
            trivial_extension(ChoiceFunction.zero(abc), abc, embed)


class TestDirectSum:
    def test_zero(self, abc):
        s = direct_sum(ChoiceFunction.zero(XY), ChoiceFunction.zero(GroundSet(("p", "q"))))
        assert s == ChoiceFunction.zero(s.ground)

    def test_componentwise(self):
        ab = GroundSet(("a", "b"))
        s = direct_sum(linear_from_word(XY.word("xy")), linear_from_word(ab.word("ab")))
        assert s.ground.symbols == ("x", "y", "a", "b")
        assert s(s.ground.subset(["y", "a", "b"])) == s.ground.subset(["y", "a"])

    def test_clash(self, abc):
        with pytest.raises(ValidationError):
            direct_sum(ChoiceFunction.zero(abc), ChoiceFunction.zero(abc))

    def test_socle_is_shuffles(self):
        ab = GroundSet(("a", "b"))
        s = direct_sum(linear_from_word(XY.word("xy")), linear_from_word(ab.word("ab")))
        g = s.ground
        expected = shuffle(g.word(["x", "y"]), g.word(["a", "b"]))
        assert socle(s) == expected
        assert len(expected) == 6

    @given(plott_functions(ground_of(2)), plott_functions(GroundSet(("p", "q"))))
    def test_plott(self, f, g):
        assert is_path_independent(direct_sum(f, g))


class TestInverseImage:
    def test_subset_with_bad_first_letter(self, abc):
        bc = GroundSet(("b", "c"))
        embed = SetMap.from_dict(bc, abc, {"b": "b", "c": "c"})
        assert inverse_image(embed, linear(abc, "abc")) == ChoiceFunction.zero(bc)

    def test_identity_on_preimage(self):
        phi = clone_map()
        t = ABCD.subset("ac")
        expected = identity_on(phi.source, phi.preimage(t))
        assert inverse_image(phi, identity_on(ABCD, t)) == expected

    def test_identity_map_is_plottization(self, abc):
        phi = SetMap.identity(abc)
        for f in plott_list(3):
            assert inverse_image(phi, f) == f

    @given(choice_functions(ground_of(3)))
    def test_identity_map_plottizes_anything(self, g):
        assert inverse_image(SetMap.identity(g.ground), plottize(g)) == plottize(g)

    @given(st.data(), sizes)
    def test_adjunction(self, data, nm):
        phi, f, g = data.draw(map_and_functions(*nm))
        assert (direct_image(phi, f) <= g) == (f <= inverse_image(phi, g))

    @given(st.data(), sizes)
    def test_basement_is_preimage(self, data, nm):
        phi, _, g = data.draw(map_and_functions(*nm))
        bas = inverse_basement(phi, g)
        assert basement(inverse_image(phi, g)) == bas
        target = basement(g)
        assert all(word_image(phi, w) in target for w in bas)

    @given(st.data(), sizes)
    def test_projection_formula(self, data, nm):
        phi, f, g = data.draw(map_and_functions(*nm))
        left = direct_image(phi, meet(f, inverse_image(phi, g)))
        assert left == meet(direct_image(phi, f), g)

    @given(st.data(), sizes)
    def test_image_of_preimage(self, data, nm):
        phi, _, g = data.draw(map_and_functions(*nm))
        pushed = direct_image(phi, inverse_image(phi, g))
        assert pushed == meet(identity_on(phi.target, phi.image(phi.source.full)), g)
        if phi.surjective:
            assert pushed == g

    @given(st.data(), sizes)
    def test_commutes_with_meet(self, data, nm):
        phi, _, g = data.draw(map_and_functions(*nm))
        g2 = data.draw(plott_functions(phi.target))
        assert inverse_image(phi, meet(g, g2)) == meet(inverse_image(phi, g), inverse_image(phi, g2))

    @given(st.data())
    def test_contravariant(self, data):
        a, b, c = ground_of(3), GroundSet(tuple("pqr")), GroundSet(("u", "v"))
        phi = data.draw(set_maps(a, b))
        psi = data.draw(set_maps(b, c))
        g = data.draw(plott_functions(c))
        assert inverse_image(phi.then(psi), g) == inverse_image(phi, inverse_image(psi, g))

    def test_ground_mismatch(self, abc):
        with pytest.raises(ValidationError):
            inverse_image(SetMap.identity(abc), ChoiceFunction.zero(XY))


class TestProduct:
    @pytest.fixture
    def primes(self):
        x = GroundSet(("x", "x′"))
        y = GroundSet(("y", "y′"))
        return x, y

    def test_case_split(self, primes):
        x, y = primes
        p = direct_product(linear_from_word(x.word(["x", "x′"])), linear_from_word(y.word(["y", "y′"])))
        g = p.ground
        corner = g.subset(["(x,y)"])
        for z in g.subsets():
            assert p(z) == (corner if z & corner else z)
        assert all(w.letters[0] == g.index("(x,y)") for w in socle(p))

    def test_tops(self, primes):
        x, y = primes
        p = direct_product(ChoiceFunction.identity(x), ChoiceFunction.identity(y))
        assert p == ChoiceFunction.identity(p.ground)

    def test_zero(self, primes):
        x, y = primes
        p = direct_product(ChoiceFunction.zero(x), ChoiceFunction.identity(y))
        assert p == ChoiceFunction.zero(p.ground)

    def test_ground_order(self, primes):
        x, y = primes
        prod = product_ground(x, y)
        assert prod.ground.symbols == ("(x,y)", "(x,y′)", "(x′,y)", "(x′,y′)")
        assert prod.first.images == (0, 0, 1, 1)
        assert prod.second.images == (0, 1, 0, 1)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            product_ground(ground_of(4), ground_of(5))
        with pytest.raises(CapacityError):
            product_ground(ground_of(2), ground_of(3), cap=5)


class TestCorrespondence:
    def test_identity_correspondence(self, abc):
        phi = SetMap.identity(abc)
        h = ChoiceFunction.identity(abc)
        for f in plott_list(3):
            assert apply_correspondence(h, phi, phi, f) == f

    def test_subset_of_product(self):
        x, y = XY, GroundSet(("p", "q"))
        prod = product_ground(x, y)
        z = GroundSet(("(x,p)", "(y,p)", "(y,q)"))
        embed = SetMap.from_dict(z, prod.ground, {s: s for s in z.symbols})
        phi, psi = embed.then(prod.first), embed.then(prod.second)
        out = apply_correspondence(ChoiceFunction.identity(z), phi, psi, ChoiceFunction.identity(x))
        assert out == identity_on(y, psi.image(z.full))

    def test_requires_plott_h(self):
        from test_core import broken_pair
        h = broken_pair()
        phi = SetMap.identity(h.ground)
        with pytest.raises(ValidationError):
            apply_correspondence(h, phi, phi, ChoiceFunction.zero(h.ground))

    def test_ground_mismatch(self, abc):
        phi = SetMap.identity(abc)
        with pytest.raises(ValidationError):
            apply_correspondence(ChoiceFunction.zero(abc), phi, phi, ChoiceFunction.zero(XY))

    @given(st.data())
    def test_reduces_to_product(self, data):
        z, x, y = ground_of(3), XY, GroundSet(("p", "q"))
        phi = data.draw(set_maps(z, x))
        psi = data.draw(set_maps(z, y))
        h = data.draw(st.sampled_from(plott_list(3)))
        f = data.draw(plott_functions(x))
        pi, prod = pairing(phi, psi)
        assert pi.then(prod.first) == phi and pi.then(prod.second) == psi
        reduced = apply_correspondence(direct_image(pi, h), prod.first, prod.second, f)
        assert apply_correspondence(h, phi, psi, f) == reduced


def test_sum_of_words_is_plott():
    x = GroundSet(("x", "y", "z"))
    w = SimpleWord(x, (2, 0))
    s = direct_sum(linear_from_word(w), ChoiceFunction.identity(GroundSet(("u",))))
    assert is_path_independent(s)
