import pytest

from coverable.errors import CoverableError
from coverable.fpgroup import Budget, Quotient, Word
from coverable.spanier import pi1, subgroup_contains
from coverable.tower import (KINDS, PointClass, bonding_image, builtin_tower, check_bond,
                             classify_basepoint, coverability_report, stage_spanier)

from oracles import invariant_factors


def test_builtin_examples():
    assert builtin_tower("hawaiian", 2).stage(2).counts == (3, 4, 0)
    h3 = builtin_tower("hawaiian", 3).stage(3)
    a3 = builtin_tower("archipelago", 3).stage(3)
    assert a3.counts == (h3.counts[0], h3.counts[1], 2)
    cone = builtin_tower("cone", 2).stage(2)
    assert pi1(cone).abelian.invariants.is_trivial
    assert builtin_tower("double_cone", 3).stage(3).counts == (7, 12, 6)


def test_unknown_kind_rejected():
    with pytest.raises(CoverableError):
        builtin_tower("griffiths", 2)


@pytest.mark.parametrize("kind", KINDS)
def test_bonds_and_filtration(kind):
    t = builtin_tower(kind, 4)
    for n in range(1, 4):
        check_bond(t, n)
    for n in range(1, 5):
        assert t.neighbourhood(n, 1) == t.stage(n).whole()
        for k in range(1, n):
            assert t.neighbourhood(n, k + 1) <= t.neighbourhood(n, k)


def test_stage_spanier_examples():
    t = builtin_tower("hawaiian", 3)
    d = stage_spanier(t, 3, 2)
    assert set(d.words) == {Word.parse("a2"), Word.parse("a3")}
    # oracle: Z^3 modulo the rows of a2 and a3
    assert invariant_factors([[0, 1, 0], [0, 0, 1]], 3) == ((), 1)
    inv = d.quotient_invariants()
    assert (inv.torsion, inv.free_rank) == ((), 1)
    for kind in KINDS:
        tk = builtin_tower(kind, 3)
        assert stage_spanier(tk, 3, 1).quotient_invariants().is_trivial
    for k in (1, 2, 3):
        assert stage_spanier(builtin_tower("cone", 3), 3, k).quotient_invariants().is_trivial


@pytest.mark.parametrize("kind", KINDS)
def test_filtration_monotonicity(kind):
    t = builtin_tower(kind, 4)
    for k in range(1, 4):
        v = subgroup_contains(stage_spanier(t, 4, k), stage_spanier(t, 4, k + 1))
        assert not v.is_no


@pytest.mark.parametrize("kind", KINDS)
def test_bonding_compatibility(kind):
    t = builtin_tower(kind, 4)
    for n in range(1, 4):
        pi = pi1(t.stage(n))
        for k in range(1, n + 1):
            q = stage_spanier(t, n, k).quotient()
            for w in bonding_image(t, n, stage_spanier(t, n + 1, k), pi):
                assert not q.is_trivial(w).is_no


def test_classification_examples():
    h = classify_basepoint(builtin_tower("hawaiian", 4), 4)
    assert h.point_class is PointClass.WILD
    first = h.evidence[0]["loops"][0]
    assert first["word"] == "a1"
    assert any(v["answer"] == "NO" and v["certificate"]["method"] == "abelianization"
               for v in first["levels"].values())
    assert classify_basepoint(builtin_tower("archipelago", 4), 4).point_class is PointClass.TAME
    assert classify_basepoint(builtin_tower("cone", 4), 4).point_class is PointClass.REGULAR


def test_archipelago_identifies_circles():
    t = builtin_tower("archipelago", 4)
    q = Quotient(pi1(t.stage(4)).presentation)
    assert q.is_trivial(Word.parse("a1 a4^-1")).is_yes


def test_classification_needs_two_stages():
    with pytest.raises(CoverableError):
        classify_basepoint(builtin_tower("hawaiian", 1), 1)


def test_classification_monotone_in_budget():
    small = Budget(cosets=50, word_length=4, search_nodes=10, perm_degree=2, perm_tuples=10)
    for kind in KINDS:
        t = builtin_tower(kind, 3)
        a = classify_basepoint(t, 3, small).point_class
        b = classify_basepoint(t, 3, small.scaled(4)).point_class
        if a is not PointClass.UNKNOWN:
            assert a is b


def test_coverability_reports():
    r = coverability_report(builtin_tower("hawaiian", 4), 4)
    assert r["verdict"] == "LIMIT-NOT-COVERABLE"
    assert r["classification"]["scale"] == "at tower scale n=4"
    r = coverability_report(builtin_tower("archipelago", 4), 4)
    assert r["verdict"] == "LIMIT-COVERABLE-EVIDENCE"
    assert r["classification"]["class"] == "TAME"
    assert "evidence" in r["caveat"]
    r = coverability_report(builtin_tower("double_cone", 3), 3)
    assert r["stage_certificate"]["stage_coverable"]
    assert "not computed" in r["limit_note"]
