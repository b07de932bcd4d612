import itertools
import random

import pytest

from invmcg.partial import compose, tau_of_word
from invmcg.sphere import FLAVORS, MarkovNormalForm, identity_form
from invmcg.tower import (
    Abelianization,
    PartialMCElement,
    abelian_modulus,
    abelian_order_from_relations,
    abelianize,
    commutes_with_generators,
    delta_shift_check,
    elements,
    embed,
    empty_element,
    eps_block_words,
    eps_element,
    equality_engine,
    factorize,
    identity_element,
    in_center,
    inverse_elt,
    is_brunnian,
    is_makanin,
    multiply,
    normalize,
    random_element,
    strand_delete,
    tau_homomorphism_holds,
)
from invmcg.words import GeneratorWord, WordError, parse_word, random_word, relations


def W(rank, *signed):
    return GeneratorWord.from_signed(rank, signed)


def test_strand_delete_examples():
    assert strand_delete(W(2, 1), {1}) == GeneratorWord(1, ())
    assert strand_delete(W(3, 2, 2), {1}) == W(2, 1, 1)
    assert strand_delete(W(3, 1, 2), set()) == W(3, 1, 2)
    with pytest.raises(WordError):
        strand_delete(parse_word("e1", 2), {1})
    with pytest.raises(WordError):
        strand_delete(W(2, 1), {3})


def test_normalize_examples():
    e = normalize(parse_word("e1 s1", 2), "disc")
    assert (e.domain, e.image, e.k) == ((2,), (1,), 1)
    e = normalize(parse_word("s1 e1 s2", 3), "disc")
    assert (e.domain, e.image) == ((1, 3), (2, 3))
    assert e.core == MarkovNormalForm(2, "disc", (1,), ((2,),), 0)
    assert str(e) == "k=2 dom=(1,3) img=(2,3) core=cosets=(1) layers=[q1,2]"
    with pytest.raises(WordError):
        normalize(W(2), "torus")


def test_embed_examples():
    assert embed(empty_element(2, "disc")) == parse_word("e1 e2 e1 e2", 2)
    assert embed(identity_element(3, "sphere-mcg")) == GeneratorWord(3, ())


@pytest.mark.parametrize("flavor", FLAVORS)
def test_embed_round_trip(flavor):
    rng = random.Random(len(flavor))
    for _ in range(150):
        n = rng.randint(0, 5)
        e = random_element(n, flavor, rng)
        assert normalize(embed(e), flavor) == e


def test_identity_and_empty():
    for flavor in FLAVORS:
        one = identity_element(3, flavor)
        zero = empty_element(3, flavor)
        rng = random.Random(0)
        for _ in range(20):
            e = random_element(3, flavor, rng)
            assert multiply(one, e) == e == multiply(e, one)
            assert multiply(zero, e) == zero == multiply(e, zero)


def test_multiply_matches_concatenation():
    rng = random.Random(4)
    for _ in range(150):
        n = rng.randint(1, 5)
        flavor = rng.choice(FLAVORS)
        u = random_word(n, 8, rng, eps_rate=0.2)
        v = random_word(n, 8, rng, eps_rate=0.2)
        assert multiply(normalize(u, flavor), normalize(v, flavor)) == normalize(u + v, flavor)


def test_multiply_mismatch():
    with pytest.raises(WordError):
        multiply(identity_element(2, "disc"), identity_element(3, "disc"))
    with pytest.raises(WordError):
        multiply(identity_element(2, "disc"), identity_element(2, "sphere-mcg"))


def test_inverse_examples():
    e = normalize(parse_word("s1 e1 s2", 3), "disc")
    inv = inverse_elt(e)
    assert (inv.domain, inv.image) == ((2, 3), (1, 3))
    assert inv.core == MarkovNormalForm(2, "disc", (1,), ((),), 0)
    assert inverse_elt(inv) == e


@pytest.mark.parametrize("flavor", FLAVORS)
def test_inverse_axioms_and_idempotents(flavor):
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(0, 4)
        a = random_element(n, flavor, rng)
        ai = inverse_elt(a)
        assert multiply(multiply(a, ai), a) == a
        assert multiply(multiply(ai, a), ai) == ai
        p = multiply(a, ai)
        assert p.is_idempotent() and multiply(p, p) == p


def test_tau_homomorphism():
    rng = random.Random(6)
    for _ in range(150):
        n = rng.randint(1, 5)
        flavor = rng.choice(FLAVORS)
        a, b = random_element(n, flavor, rng), random_element(n, flavor, rng)
        assert tau_homomorphism_holds(a, b)
        w = random_word(n, 8, rng, eps_rate=0.2)
        assert normalize(w, flavor).tau() == tau_of_word(w)


def test_factorize_examples():
    e = normalize(parse_word("s1 e1 s2", 3), "disc")
    idem, g = factorize(e)
    assert idem.is_idempotent() and idem.domain == (1, 3)
    assert g.k == 3
    assert multiply(idem, g) == e


@pytest.mark.parametrize("flavor", FLAVORS)
def test_factorize_random(flavor):
    rng = random.Random(21)
    for _ in range(80):
        e = random_element(rng.randint(0, 5), flavor, rng)
        idem, g = factorize(e)
        assert idem.is_idempotent()
        assert g.k == e.rank
        assert multiply(idem, g) == e


def test_brunnian_examples():
    e = normalize(W(3, 1, 1), "disc")
    assert is_brunnian(e, 1) and is_brunnian(e, 2)
    assert not is_brunnian(e, 3)
    assert not is_makanin(e)
    assert is_makanin(identity_element(4, "disc"))
    # the commutator of two pushes is trivial once any one of the three points is filled
    w = parse_word("q1,2 q2,3 q1,2^-1 q2,3^-1", 3)
    assert is_makanin(normalize(w, "disc"))
    assert not normalize(w, "disc").is_idempotent()
    with pytest.raises(WordError):
        is_brunnian(e, 4)


def test_abelianize_examples():
    assert abelianize(W(5, 1, 1, 1, 1)) == Abelianization(False, 0, 4)
    assert str(abelianize(parse_word("e1", 3))) == "(eps, 0 mod 2)"
    assert str(abelianize(W(4, 1, 2))) == "(1, 2 mod 6)"
    assert [abelian_modulus(n) for n in range(0, 7)] == [1, 1, 2, 2, 6, 4, 10]


@pytest.mark.parametrize("n", range(2, 8))
def test_abelian_modulus_matches_relators(n):
    assert abelian_order_from_relations(n) == abelian_modulus(n)


def test_abelianize_additive_and_respects_relations():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randint(2, 6)
        u = random_word(n, 7, rng, eps_rate=0.1)
        v = random_word(n, 7, rng, eps_rate=0.1)
        assert abelianize(u + v) == abelianize(u) + abelianize(v)
    for n in range(2, 6):
        for rel in relations("sphere-inverse-mcg", n):
            assert abelianize(rel.lhs) == abelianize(rel.rhs), rel.label


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_center_exhaustive(n):
    central = []
    for e in elements(n, "sphere-mcg"):
        assert in_center(e) == commutes_with_generators(e), str(e)
        if in_center(e):
            central.append(e)
    if n >= 2:
        assert set(central) == {identity_element(n, "sphere-mcg"), empty_element(n, "sphere-mcg")}


def test_center_random_four_points():
    rng = random.Random(2)
    for _ in range(80):
        e = random_element(4, "sphere-mcg", rng, max_layer=2)
        assert in_center(e) == commutes_with_generators(e)
    assert in_center(identity_element(4, "sphere-mcg"))
    assert in_center(empty_element(4, "sphere-mcg"))
    assert not in_center(eps_element(4, 2, "sphere-mcg"))
    with pytest.raises(WordError):
        in_center(identity_element(3, "disc"))


def test_delta_shift():
    for n in range(1, 7):
        for i in range(1, n + 1):
            assert delta_shift_check(n, i)
    with pytest.raises(WordError):
        delta_shift_check(3, 4)


@pytest.mark.parametrize("flavor", FLAVORS)
def test_eps_block_spellings_agree(flavor):
    for n in range(1, 7):
        for k in range(n):
            plain, single = eps_block_words(k, n)
            assert normalize(plain, flavor) == normalize(single, flavor), (k, n)


def test_element_counts():
    # C(n,k)^2 |M_0,k| summed over k, and likewise for the sphere braid groups
    assert [sum(1 for _ in elements(n, "sphere-mcg")) for n in range(4)] == [1, 2, 7, 34]
    assert [sum(1 for _ in elements(n, "sphere-braid")) for n in range(4)] == [1, 2, 7, 40]
    with pytest.raises(WordError):
        next(elements(2, "disc"))


def test_element_validation():
    with pytest.raises(ValueError):
        PartialMCElement(3, "disc", (1, 2), (1,), identity_form(2, "disc"))
    with pytest.raises(ValueError):
        PartialMCElement(3, "disc", (2, 1), (1, 2), identity_form(2, "disc"))
    with pytest.raises(ValueError):
        PartialMCElement(3, "disc", (1, 2), (1, 2), identity_form(2, "sphere-mcg"))


def test_equality_engines():
    assert equality_engine("disc-braid")(W(3, 1, 2, 1), W(3, 2, 1, 2))
    assert equality_engine("symmetric-inverse")(W(2, 1, 1), W(2))
    assert not equality_engine("sphere-inverse-braid")(W(3, 1, 1), W(3))
    assert equality_engine("sphere-inverse-mcg")(W(3, 1, 1), W(3))
    with pytest.raises(WordError):
        equality_engine("torus")


def test_tau_of_product_is_composition_exhaustive():
    els = list(elements(2, "sphere-braid"))
    for a, b in itertools.product(els, repeat=2):
        assert multiply(a, b).tau() == compose(a.tau(), b.tau())
