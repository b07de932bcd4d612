"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -v tests/test_acceptance.py -s`` to see the report lines.
"""

import itertools
import random
import time

import pytest

from invmcg.free_rep import ib_equal_disc, iout_equal_verifier, sphere_action_of_word
from invmcg.partial import PartialInjection, compose
from invmcg.small_cases import (
    IDENTITY,
    delta_fourth,
    enumerate_im0n,
    iso_check,
    random_im11,
    rho,
    symmetric_inverse_table,
)
from invmcg.sphere import FLAVORS, enumerate_sphere, equal_sphere, normal_form
from invmcg.tables import MultiplicationTable
from invmcg.tower import (
    abelian_modulus,
    abelianize,
    delta_shift_check,
    elements,
    embed,
    eps_block_words,
    equality_engine,
    factorize,
    inverse_elt,
    multiply,
    normalize,
    random_element,
)
from invmcg.words import RELATION_FLAVORS, GeneratorWord, garside, perturb, random_word, relations


def report(n, ok, detail):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
    return ok


def test_criterion_01_tower_tables_match_symmetric_inverse_monoids():
    start = time.perf_counter()
    tables = {n: enumerate_im0n(n) for n in range(4)}
    counts = [len(tables[n]) for n in range(4)]
    iso2 = iso_check(tables[2], symmetric_inverse_table(2))[0]
    iso3 = iso_check(tables[3], symmetric_inverse_table(3))[0]
    elapsed = time.perf_counter() - start
    ok = counts == [1, 2, 7, 34] and iso2 and iso3 and elapsed < 5
    assert report(1, ok, f"counts={counts} iso2={iso2} iso3={iso3} {elapsed:.2f}s")


def _sigma3() -> MultiplicationTable:
    perms = [PartialInjection.from_mapping(3, dict(zip((1, 2, 3), p))) for p in itertools.permutations((1, 2, 3))]
    return MultiplicationTable.build(perms, compose)


def test_criterion_02_sphere_enumeration():
    start = time.perf_counter()
    braid = enumerate_sphere(3, "sphere-braid")
    table = braid.table
    d2 = braid.elements.index(normal_form(garside(3) ** 2, "sphere-braid"))
    central = table.is_central(d2)
    order = table.order(d2)
    mcg = enumerate_sphere(3, "sphere-mcg")
    iso = iso_check(mcg.table, _sigma3())[0]
    elapsed = time.perf_counter() - start
    ok = (braid.count == 12 and table.is_associative() and central and order == 2
          and mcg.count == 6 and iso and elapsed < 5)
    assert report(2, ok, f"|Br3(S2)|={braid.count} d2 central={central} order={order} "
                         f"|M03|={mcg.count} iso(S3)={iso} {elapsed:.2f}s")


def test_criterion_03_relation_certification():
    start = time.perf_counter()
    checked, failures = 0, []
    for flavor in RELATION_FLAVORS:
        eq = equality_engine(flavor)
        for n in range(2, 6):
            for rel in relations(flavor, n):
                checked += 1
                if not eq(rel.lhs, rel.rhs):
                    failures.append((flavor, n, rel.label))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30
    assert report(3, ok, f"{checked} relations over {len(RELATION_FLAVORS)} sets, failures={failures} {elapsed:.2f}s")


def test_criterion_04_disc_tower_agrees_with_free_action():
    rng = random.Random(4)
    rel_cache = {n: relations("disc-inverse", n) for n in range(2, 6)}
    pairs, equal, bad = 10_000, 0, []
    for _ in range(pairs):
        n = rng.randint(1, 5)
        w1 = random_word(n, rng.randint(0, 8), rng, eps_rate=0.15)
        if n >= 2 and rng.random() < 0.5:
            w2 = perturb(w1, rel_cache[n], rng, steps=2)
        else:
            w2 = random_word(n, rng.randint(0, 8), rng, eps_rate=0.15)
        a = ib_equal_disc(w1, w2)
        b = normalize(w1, "disc") == normalize(w2, "disc")
        equal += a
        if a != b:
            bad.append((str(w1), str(w2)))
    ok = not bad
    assert report(4, ok, f"{pairs} pairs ({equal} equal), discrepancies={len(bad)}")


def test_criterion_05_normal_form_round_trip_and_associativity():
    exhaustive = 0
    for n in (2, 3):
        for e in elements(n, "sphere-mcg"):
            exhaustive += 1
            assert normalize(embed(e), "sphere-mcg") == e, str(e)
    rng = random.Random(5)
    sampled = 0
    for n in (4, 5):
        for i in range(1000):
            flavor = FLAVORS[i % len(FLAVORS)]
            e = random_element(n, flavor, rng)
            assert normalize(embed(e), flavor) == e, str(e)
            sampled += 1
    triples = 0
    for i in range(1000):
        n = rng.randint(1, 5)
        flavor = FLAVORS[i % len(FLAVORS)]
        a, b, c = (random_element(n, flavor, rng, max_layer=2) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        triples += 1
    assert report(5, True, f"{exhaustive} exhaustive round trips, {sampled} random, {triples} associative triples")


def test_criterion_06_inverse_monoid_axioms():
    rng = random.Random(6)
    per_flavor = 1000
    for flavor in FLAVORS:
        for _ in range(per_flavor):
            a = random_element(rng.randint(0, 5), flavor, rng, max_layer=2)
            ai = inverse_elt(a)
            assert multiply(multiply(a, ai), a) == a, str(a)
            assert multiply(multiply(ai, a), ai) == ai, str(a)
    assert report(6, True, f"{per_flavor} elements per flavor over {', '.join(FLAVORS)}")


def test_criterion_07_factorisability():
    count = 0
    for e in elements(3, "sphere-mcg"):
        idem, g = factorize(e)
        assert idem.is_idempotent() and g.k == 3
        assert multiply(idem, g) == e, str(e)
        count += 1
    assert report(7, count == 34, f"{count} elements of IM_0,3 factor exactly")


def test_criterion_08_delta_shift():
    cases = [(n, i) for n in range(1, 7) for i in range(1, n + 1)]
    bad = [c for c in cases if not delta_shift_check(n=c[0], i=c[1])]
    assert report(8, not bad, f"{len(cases)} (n, i) pairs in {len(FLAVORS)} flavors, failures={bad}")


def test_criterion_09_eps_block_coherence():
    bad, checked = [], 0
    for flavor in FLAVORS:
        for n in range(1, 7):
            for k in range(n):
                plain, single = eps_block_words(k, n)
                checked += 1
                if normalize(plain, flavor) != normalize(single, flavor):
                    bad.append((flavor, k, n))
    assert report(9, not bad, f"{checked} (flavor, k, n) cases, failures={bad}")


def _additive_order(n):
    step = abelianize(GeneratorWord.from_signed(n, (1,)))
    acc, j = step, 1
    while acc.residue != 0:
        acc, j = acc + step, j + 1
    return j


def test_criterion_10_abelianization():
    bad = []
    for n in range(2, 7):
        for rel in relations("sphere-inverse-mcg", n):
            if abelianize(rel.lhs) != abelianize(rel.rhs):
                bad.append((n, rel.label))
    orders = {n: _additive_order(n) for n in (3, 4, 5)}
    ok = not bad and orders == {3: 2, 4: 6, 5: 4} and all(abelian_modulus(n) == m for n, m in orders.items())
    assert report(10, ok, f"relation failures={bad} orders={orders}")


def test_criterion_11_torus_example():
    d4 = rho(delta_fourth()) == IDENTITY
    braid = rho(GeneratorWord.from_signed(3, (1, 2, 1))) == rho(GeneratorWord.from_signed(3, (2, 1, 2)))
    rng = random.Random(11)
    triples = 1000
    tags = set()
    for _ in range(triples):
        a, b, c = random_im11(rng), random_im11(rng), random_im11(rng)
        tags.add((a.tag, b.tag, c.tag))
        assert (a * b) * c == a * (b * c)
    ok = d4 and braid and len(tags) == 8
    assert report(11, ok, f"rho(D^4)=I {d4}, braid relation {braid}, {triples} triples over {len(tags)} tag patterns")


def test_criterion_12_markov_form_agrees_with_outer_action():
    rng = random.Random(12)
    rels = relations("sphere-mcg", 3)
    verdicts = {"equal": 0, "distinct": 0, "inconclusive": 0}
    contradictions = []
    for _ in range(1000):
        w1 = random_word(3, rng.randint(0, 8), rng)
        if rng.random() < 0.5:
            w2 = perturb(w1, rels, rng, steps=3)
        else:
            w2 = random_word(3, rng.randint(0, 8), rng)
        verdict = iout_equal_verifier(sphere_action_of_word(w1), sphere_action_of_word(w2), 6)
        verdicts[verdict] += 1
        if verdict != "inconclusive" and (verdict == "equal") != equal_sphere(w1, w2, "sphere-mcg"):
            contradictions.append((str(w1), str(w2)))
    ok = not contradictions and verdicts["equal"] > 0 and verdicts["distinct"] > 0
    assert report(12, ok, f"verdicts={verdicts} contradictions={len(contradictions)}")


@pytest.mark.parametrize("n", [3])
def test_cross_engine_includes_eps(n):
    # not a numbered criterion: the same agreement with epsilons in play
    rng = random.Random(120)
    for _ in range(300):
        w1 = random_word(n, 6, rng, eps_rate=0.2)
        w2 = random_word(n, 6, rng, eps_rate=0.2)
        verdict = iout_equal_verifier(sphere_action_of_word(w1), sphere_action_of_word(w2), 4)
        if verdict != "inconclusive":
            assert (verdict == "equal") == (normalize(w1, "sphere-mcg") == normalize(w2, "sphere-mcg"))
