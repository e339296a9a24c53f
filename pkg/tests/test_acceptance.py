"""Acceptance criteria, one test each.

Every criterion is a function of a budget returning the verdict answers it
saw, so criterion 10 can rerun 1-8 with doubled budgets and compare.
A PASS/FAIL line per criterion is printed at the end of the run.
"""

import random
import time

from coverable.complex import intersect_covers
from coverable.covering import (build_covering, evenly_covered_cover, image_subgroup,
                                universal_covering, verify_covering)
from coverable.fpgroup import Budget, Word
from coverable.samples import (circle, disc, random_complex, random_cover, random_path,
                               random_refinement, wedge2, z3)
from coverable.spanier import (NormalSubgroupData, change_basepoint, pi1, spanier_contains,
                               spanier_generators)
from coverable.tower import PointClass, builtin_tower, classify_basepoint, coverability_report
from coverable.wedge import make_wedge, random_loop, t3_check, wedge_decompose_loop

from oracles import index_by_actions

DEFAULT = Budget()
DOUBLED = Budget().scaled(2)


def W(text):
    return Word.parse(text)


def timed(limit):
    def wrap(fn):
        def run(budget=DEFAULT):
            start = time.perf_counter()
            answers = fn(budget)
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
            return answers
        run.__name__ = fn.__name__
        return run
    return wrap


COVERING_CASES = [
    *[(circle, [Word((("a", 1),) * k)]) for k in range(1, 5)],
    (wedge2, [W("a"), W("b b"), W("b a b^-1")]),
    (wedge2, [W("a a"), W("b"), W("a b a^-1")]),
    (wedge2, [W("a a"), W("a b"), W("b a")]),
    (z3, []),
]


def oracle_index(c, h):
    p = pi1(c).presentation
    return index_by_actions(list(p.generators), [r.letters for r in p.relators],
                            [w.letters for w in h], 6)


# oracle values first, before any covering is built
ORACLE_INDEX = [oracle_index(make(), h) for make, h in COVERING_CASES]


@timed(30)
def refinement_monotonicity(budget):
    answers = []
    for i in range(200):
        rng = random.Random(1000 + i)
        c = random_complex(rng, 12)
        u = random_cover(c, rng)
        v = random_refinement(u, rng)
        answers.append(spanier_contains(c, u, v, budget).answer)
    assert "NO" not in [a.value for a in answers]
    return answers


@timed(30)
def intersection(budget):
    answers = []
    for i in range(100):
        rng = random.Random(2000 + i)
        c = random_complex(rng, 12)
        u, v = random_cover(c, rng), random_cover(c, rng)
        x = intersect_covers(u, v)
        answers += [spanier_contains(c, u, x, budget).answer,
                    spanier_contains(c, v, x, budget).answer]
    assert "NO" not in [a.value for a in answers]
    return answers


@timed(10)
def classification_round_trip(budget):
    answers = []
    for (make, h), expected in zip(COVERING_CASES, ORACLE_INDEX):
        c = make()
        m = build_covering(c, h, budget)
        verify_covering(m)
        image = image_subgroup(m, budget)
        assert image.verdict.is_yes
        assert expected is not None and m.sheets == expected
        answers.append(image.verdict.answer)
    return answers


@timed(10)
def evenly_covered(budget):
    answers = []
    for make, h in COVERING_CASES:
        c = make()
        m = build_covering(c, h, budget)
        pi = pi1(c)
        words = image_subgroup(m, budget).words
        image = NormalSubgroupData(pi, words, tuple(pi.word_to_loop(w) for w in words), "image")
        # the Spanier group is normal, so it sits in p_* pi1 iff it sits in the core;
        # every case here is a normal subgroup (index 2, or cyclic quotients)
        v = spanier_contains(c, image, evenly_covered_cover(m), budget)
        assert not v.is_no
        answers.append(v.answer)
    return answers


@timed(60)
def universal_coherence(budget):
    answers = []
    for i in range(20):
        c = random_complex(random.Random(3000 + i), 12)
        r = universal_covering(c, 3, budget)
        verify_covering(r.covering)
        assert r.approx.stabilized
        assert r.certificate["witness_equals_pi_sp"]["answer"] == "YES"
        answers.append(r.certificate["witness_equals_pi_sp"]["answer"])
    return answers


@timed(10)
def wedge_decomposition(budget):
    checked = 0
    for i in range(10):
        rng = random.Random(4000 + i)
        w = make_wedge(random_complex(rng, 8), random_complex(rng, 8))
        for _ in range(50):
            loop = random_loop(w.complex, rng.randint(0, 12), rng)
            parts = wedge_decompose_loop(w, loop)
            joined = Word()
            for p in parts:
                assert len({w.factor_of(e) for e, _ in p.edges}) == 1
                joined = joined * p.edges
            assert joined.reduced() == loop.edges.reduced()
            checked += 1
    assert checked == 500
    return []


@timed(30)
def t3_pairs(budget):
    answers = []
    spaces = (circle, disc, wedge2, z3)
    for a in spaces:
        for b in spaces:
            r = t3_check(a(), b(), 3, budget)
            assert not r.violation, (a.__name__, b.__name__)
            assert r.transfer_matches.is_yes, (a.__name__, b.__name__)
            answers.append(r.transfer_matches.answer)
    return answers


def _loop_verdicts(cls):
    for scale in cls.evidence:
        for row in scale["loops"]:
            yield row["nullhomotopic"]
            yield from row.get("levels", {}).values()


@timed(60)
def towers(budget):
    answers = []
    for n in range(2, 7):
        h = classify_basepoint(builtin_tower("hawaiian", n), n, budget)
        assert h.point_class is PointClass.WILD
        verdicts = list(_loop_verdicts(h))
        assert all(v["answer"] != "UNKNOWN" for v in verdicts)
        assert all(v["certificate"]["method"] == "abelianization"
                   for v in verdicts if v["answer"] == "NO")
        a = classify_basepoint(builtin_tower("archipelago", n), n, budget)
        assert a.point_class is PointClass.TAME
        assert all(v["answer"] != "UNKNOWN" for v in _loop_verdicts(a))
        c = classify_basepoint(builtin_tower("cone", n), n, budget)
        assert c.point_class is PointClass.REGULAR
        answers += [h.point_class, a.point_class, c.point_class]
        answers += [v["answer"] for cls in (h, a, c) for v in _loop_verdicts(cls)]
    report = coverability_report(builtin_tower("hawaiian", 4), 4, budget)
    assert report["verdict"] == "LIMIT-NOT-COVERABLE"
    answers.append(report["verdict"])
    return answers


@timed(15)
def basepoint_change(budget):
    for i in range(50):
        rng = random.Random(5000 + i)
        c = random_complex(rng, 12)
        d = spanier_generators(c, random_cover(c, rng))
        moved = change_basepoint(d, random_path(c, rng))
        assert moved.quotient_invariants() == d.quotient_invariants()
    return []


CRITERIA_1_TO_8 = [refinement_monotonicity, intersection, classification_round_trip,
                   evenly_covered, universal_coherence, wedge_decomposition, t3_pairs, towers]
_baseline: dict[str, list] = {}


def _run(criterion):
    _baseline[criterion.__name__] = criterion(DEFAULT)


def test_criterion_01_refinement_monotonicity():
    _run(refinement_monotonicity)


def test_criterion_02_intersection_cover():
    _run(intersection)


def test_criterion_03_classification_round_trip():
    _run(classification_round_trip)


def test_criterion_04_evenly_covered_lemma():
    _run(evenly_covered)


def test_criterion_05_universal_covering_coherence():
    _run(universal_coherence)


def test_criterion_06_wedge_decomposition():
    _run(wedge_decomposition)


def test_criterion_07_wedge_universal_coverings():
    _run(t3_pairs)


def test_criterion_08_tower_classifications():
    _run(towers)


def test_criterion_09_basepoint_change():
    basepoint_change()


def _decided(x):
    return getattr(x, "value", x) not in ("UNKNOWN", "UNDETERMINED")


def test_criterion_10_budget_monotonicity():
    start = time.perf_counter()
    for criterion in CRITERIA_1_TO_8:
        base = _baseline.get(criterion.__name__) or criterion(DEFAULT)
        doubled = criterion(DOUBLED)
        assert len(base) == len(doubled)
        for before, after in zip(base, doubled):
            if _decided(before):
                assert before == after, criterion.__name__
    assert time.perf_counter() - start < 300
