import random

import pytest
from hypothesis import given, strategies as st

from coverable.fpgroup import (Budget, Presentation, Quotient, SubgroupGraph, Word, abelianization,
                               commutator, fold_membership, free_reduce, relators_hold, simplify,
                               todd_coxeter, word_trivial_in_quotient)

from oracles import exponent_row, index_by_actions, invariant_factors, subgroup_ball

TINY = Budget(cosets=10, word_length=2, search_nodes=1, perm_degree=2, perm_tuples=1)


def W(text):
    return Word.parse(text)


def test_free_reduce_examples():
    assert free_reduce(W("a a^-1")) == Word()
    assert free_reduce(W("a b b^-1 a")) == W("a a")
    w = W("a b a^-1")
    assert free_reduce(w) == w and free_reduce(free_reduce(w)) == w


def test_word_parse_and_print():
    assert str(W("a b^-1 a^2")) == "a b^-1 a a"
    assert W("1") == Word()
    assert ~W("a b") == W("b^-1 a^-1")


def _oracle_index(p, h, max_degree=5):
    return index_by_actions(list(p.generators), [r.letters for r in p.relators],
                            [w.letters for w in h], max_degree)


def test_todd_coxeter_examples():
    p = Presentation.parse("a")
    t = todd_coxeter(p, [W("a a")])
    assert t.complete and t.index == _oracle_index(p, [W("a a")]) == 2
    z3 = Presentation.parse("a", "a a a")
    t = todd_coxeter(z3, [])
    assert t.complete and t.index == _oracle_index(z3, []) == 3
    t = todd_coxeter(Presentation.parse("a b"), [], max_cosets=100)
    assert not t.complete and t.status == "budget-exceeded"


def _oracle_abelian(p, extra=()):
    rows = [exponent_row(r.letters, list(p.generators)) for r in tuple(p.relators) + tuple(extra)]
    return invariant_factors(rows, len(p.generators))


def test_abelianization_examples():
    for p in (Presentation.parse("a b"), Presentation.parse("a", "a a a"),
              Presentation.parse("a b", "a b a^-1 b^-1", "a a")):
        inv = abelianization(p)
        assert (inv.torsion, inv.free_rank) == _oracle_abelian(p)
    inv = abelianization(Presentation.parse("a b", "a b a^-1 b^-1", "a a"))
    assert inv.torsion == (2,) and inv.free_rank == 1


def test_word_trivial_examples():
    p = Presentation.parse("a b")
    assert word_trivial_in_quotient(p, [W("b")], W("a b a^-1")).is_yes
    no = word_trivial_in_quotient(p, [W("b")], W("a"))
    assert no.is_no and no.certificate["method"] == "abelianization"
    w = commutator(W("a"), commutator(W("a"), W("b")))
    assert word_trivial_in_quotient(p, [W("a b a^-1 b^-1")], w, TINY).is_unknown
    # with the default budget the commutativity certificate settles it
    assert word_trivial_in_quotient(p, [W("a b a^-1 b^-1")], w).is_yes


def test_finite_quotient_uses_enumeration():
    # S3 = <a, b | a^2, b^2, (ab)^3>; ab has trivial abelian image but is not trivial
    p = Presentation.parse("a b", "a a", "b b", "a b a b a b")
    v = Quotient(p).is_trivial(W("a b a^-1 b^-1"))
    assert v.is_no and v.certificate["method"] in ("enumeration", "cyclic-free-product")


def test_cyclic_free_product_verdicts():
    p = Presentation.parse("a b", "a a", "b b b")
    q = Quotient(p)
    assert q.is_trivial(W("a b a b^-1 a b a b^-1")).is_no
    assert q.is_trivial(W("b a a b b")).is_yes


def test_fold_examples():
    assert fold_membership(["a"], [W("a a")], W("a a a a"))
    assert not fold_membership(["a"], [W("a a")], W("a a a"))
    assert fold_membership(["a", "b"], [W("a"), W("b a b^-1")], W("b a a b^-1"))


def test_subgroup_graph_index_and_intersection():
    g = SubgroupGraph([W("a"), W("b b"), W("b a b^-1")], ["a", "b"])
    assert g.index() == 2
    h = SubgroupGraph([W("a a"), W("b"), W("a b a^-1")], ["a", "b"])
    assert SubgroupGraph([W("a a"), W("b")], ["a", "b"]).index() is None
    assert g.intersection(h).index() == 4


letters = st.sampled_from([("a", 1), ("a", -1), ("b", 1), ("b", -1)])
short_words = st.lists(letters, min_size=1, max_size=3).map(lambda l: Word(tuple(l)).reduced())


@given(st.lists(short_words, min_size=1, max_size=2), st.integers(0, 10**6))
def test_fold_membership_agrees_with_enumeration(gens, seed):
    gens = [g for g in gens if g]
    ball = subgroup_ball([g.letters for g in gens], 4)
    rng = random.Random(seed)
    for w in ball:
        assert fold_membership(["a", "b"], gens, Word(w))
    pool = ["a", "b"]
    for _ in range(30):
        w = Word(tuple((rng.choice(pool), rng.choice((1, -1))) for _ in range(rng.randint(0, 4))))
        w = w.reduced()
        if len(w) <= 4:
            assert fold_membership(["a", "b"], gens, w) == (w.letters in ball)


def _random_presentation(rng):
    gens = ["a", "b"][: rng.randint(1, 2)]
    rels = []
    for _ in range(rng.randint(1, 3)):
        n = rng.randint(1, 5)
        rels.append(Word(tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(n))))
    return Presentation(tuple(gens), tuple(r.reduced() for r in rels if r.reduced()))


@given(st.integers(0, 10**6))
def test_completed_tables_satisfy_relators(seed):
    p = _random_presentation(random.Random(seed))
    t = todd_coxeter(p, [], max_cosets=2000)
    if t.complete:
        assert relators_hold(t, p.relators)
        inv = abelianization(p)
        assert inv.is_finite
        order = 1
        for d in inv.torsion:
            order *= d
        assert t.index % order == 0


@given(st.integers(0, 10**6))
def test_abelianization_matches_minors_oracle(seed):
    p = _random_presentation(random.Random(seed))
    inv = abelianization(p)
    assert (inv.torsion, inv.free_rank) == _oracle_abelian(p)


@given(st.integers(0, 10**6))
def test_redundant_relator_keeps_abelianization(seed):
    rng = random.Random(seed)
    p = _random_presentation(rng)
    if len(p.relators) >= 2:
        r1, r2 = rng.sample(list(p.relators), 2)
        redundant = (r1 * ~r2 * r1).reduced()
        q = p.with_relators([redundant] if redundant else [])
        assert abelianization(q) == abelianization(p)
    simple, _ = simplify(p)
    assert abelianization(simple) == abelianization(p)


@given(st.integers(0, 10**6))
def test_verdicts_monotone_in_budget(seed):
    rng = random.Random(seed)
    p = _random_presentation(rng)
    normal = [Word((("a", 1),) * rng.randint(1, 3))]
    small, big = Budget(cosets=200, word_length=16, search_nodes=200), Budget().scaled(2)
    for _ in range(5):
        n = rng.randint(0, 6)
        w = Word(tuple((rng.choice(p.generators), rng.choice((1, -1))) for _ in range(n)))
        a = Quotient(p, normal, small).is_trivial(w)
        b = Quotient(p, normal, big).is_trivial(w)
        if not a.is_unknown:
            assert b.answer == a.answer


def test_tietze_removes_generator_killed_by_relator():
    simple, images = simplify(Presentation.parse("a b", "b"))
    assert simple.generators == ("a",)
    assert images["b"] == Word()


def test_budget_scaled_doubles_everything():
    b = Budget().scaled(2)
    assert (b.cosets, b.word_length, b.search_nodes) == (100000, 128, 8000)


def test_presentations_reject_unknown_symbols():
    with pytest.raises(ValueError):
        Presentation.parse("a", "b")


def test_permutation_oracle_sanity():
    # the oracle itself: index of <a> in the free group on a, b is infinite,
    # so every degree up to the cap admits an action
    assert index_by_actions(["a", "b"], [], [(("a", 1),)], 3) is None
