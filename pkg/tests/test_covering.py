import dataclasses
import random

import pytest
from hypothesis import given, strategies as st

from coverable.complex import Complex, Cover, subdivide
from coverable.covering import (ball_covering, build_covering, equivalent, evenly_covered_cover,
                                exists_covering_for, factor_map, image_subgroup,
                                intersection_covering, universal_covering, verify_covering)
from coverable.errors import BudgetError, EdgeLiftError, TruncatedError
from coverable.fpgroup import Word
from coverable.samples import circle, disc, random_complex, theta, wedge2, z3
from coverable.spanier import NormalSubgroupData, pi1, spanier_contains

from oracles import index_by_actions


def W(text):
    return Word.parse(text)


WEDGE_INDEX2 = [W("a"), W("b b"), W("b a b^-1")]


def _oracle_index(c, h, max_degree=5):
    p = pi1(c).presentation
    return index_by_actions(list(p.generators), [r.letters for r in p.relators],
                            [w.letters for w in h], max_degree)


def test_double_cover_of_circle():
    m = build_covering(circle(), [W("a a")])
    verify_covering(m)
    assert m.total.counts == (2, 2, 0) and m.sheets == 2
    assert all(len(f) == 2 for f in m.fibers().values())
    image = image_subgroup(m)
    assert image.verdict.is_yes and image.words == (W("a a"),)


def test_identity_covering_of_disc():
    m = build_covering(disc(), [])
    verify_covering(m)
    assert m.sheets == 1 and m.total.counts == disc().counts


def test_wedge_index_two_cover():
    c = wedge2()
    m = build_covering(c, WEDGE_INDEX2)
    verify_covering(m)
    assert m.total.counts == (2, 4, 0)
    assert m.sheets == _oracle_index(c, WEDGE_INDEX2) == 2
    assert image_subgroup(m).verdict.is_yes


def test_infinite_index_raises_budget_error():
    with pytest.raises(BudgetError):
        build_covering(circle(), [])


def test_ball_windows():
    line = ball_covering(circle(), [], 2)
    verify_covering(line)
    assert line.truncated and line.total.counts == (5, 4, 0)
    tree = ball_covering(wedge2(), [], 1)
    assert tree.total.counts == (5, 4, 0)
    # rank-2 tree: 1 + 4 * (3^r - 1) / 2 vertices within radius r
    assert len(ball_covering(wedge2(), [], 4).total.vertices) == 1 + 4 * (3 ** 4 - 1) // 2


def test_ball_with_whole_group_is_the_base():
    m = ball_covering(theta(), [W("b"), W("c")], 3)
    assert not m.truncated and m.sheets == 1
    assert m.total.counts == theta().counts


def test_verify_detects_retargeted_edge():
    m = build_covering(circle(), [W("a a")])
    edges = dict(m.total.edges)
    e = sorted(edges)[1]
    s, _ = edges[e]
    edges[e] = (s, s)
    broken = dataclasses.replace(m, total=Complex(m.total.vertices, edges, {}, m.total.basepoint))
    with pytest.raises(EdgeLiftError):
        verify_covering(broken)


def test_image_of_truncated_covering_is_refused():
    with pytest.raises(TruncatedError):
        image_subgroup(ball_covering(circle(), [], 2))


def test_identity_cover_of_wedge_has_whole_image():
    m = build_covering(wedge2(), [W("a"), W("b")])
    assert m.sheets == 1 and image_subgroup(m).verdict.is_yes


def test_evenly_covered_examples():
    ident = build_covering(disc(), [])
    u = evenly_covered_cover(ident)
    assert len(u) == 1 and u.elements[0] == disc().whole()
    double = build_covering(circle(), [W("a a")])
    u = evenly_covered_cover(double)
    s = subdivide(circle())
    assert u.complex == s
    assert u.same_elements(Cover(s, (s.closure(["a/0"]), s.closure(["a/1"]))))
    assert not spanier_contains(circle(), image_data(double), u).is_no


def image_data(m):
    """``p_* pi_1`` as normal-subgroup data (valid for normal coverings)."""
    pi = pi1(m.base)
    words = image_subgroup(m).words
    return NormalSubgroupData(pi, words, tuple(pi.word_to_loop(w) for w in words), "image")


def test_exists_covering_examples():
    r = exists_covering_for(wedge2(), [W("a")], normal=True)
    assert r.found is not None and r.verdict.is_yes
    c = circle()
    whole = Cover(c, (c.whole(),))
    r = exists_covering_for(c, [W("a")], [whole])
    assert r.found is whole
    s = subdivide(c)
    arcs = Cover(s, (s.closure(["a/0"]), s.closure(["a/1"])))
    r = exists_covering_for(c, [W("a a")], [whole, arcs])
    assert r.found is arcs


def test_universal_covering_examples():
    d = universal_covering(disc())
    assert d.covering.sheets == 1 and d.certificate["pi_sp_trivial"]
    assert d.certificate["pi1_trivial_abelianization"]
    z = universal_covering(z3())
    verify_covering(z.covering)
    assert z.covering.sheets == _oracle_index(z3(), []) == 3
    line = universal_covering(circle())
    assert line.covering.truncated
    assert "infinite sheets" in line.certificate["items"]["ii_universal_covering"]
    assert line.certificate["items"]["vi_open_subgroup"] == "not checked (out of scope)"


def test_factor_maps_follow_subgroup_order():
    c = circle()
    m4, m2 = build_covering(c, [W("a a a a")]), build_covering(c, [W("a a")])
    f = factor_map(m4, m2)
    assert f is not None
    assert all(m2.projection[f[x]] == m4.projection[x] for x in f)
    assert factor_map(m2, m4) is None
    assert equivalent(m2, build_covering(c, [W("a^-1 a^-1")]))


def test_intersection_covering_sheets():
    c = wedge2()
    k = [W("a a"), W("b"), W("a b a^-1")]
    m = intersection_covering(c, WEDGE_INDEX2, k)
    verify_covering(m)
    assert m.sheets == 4 <= 2 * 2
    z = z3()
    mz = intersection_covering(z, [W("a")], [])
    assert mz.sheets == 3


@given(st.integers(0, 10**6))
def test_fiber_law_on_random_complexes(seed):
    c = random_complex(random.Random(seed))
    gens = pi1(c).presentation.generators
    if not gens:
        return
    h = [Word(((g, 1),) * 2) for g in gens]
    try:
        m = build_covering(c, h, normal=True)
    except BudgetError:
        return
    verify_covering(m)
    assert m.sheets == m.table.index
    assert not spanier_contains(c, image_data(m), evenly_covered_cover(m)).is_no
