"""Independent reference computations used to derive expected values.

Nothing here imports the library's algorithms; only plain data structures.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def det(m):
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    sign = 1
    result = Fraction(1)
    for i in range(n):
        pivot = next((r for r in range(i, n) if a[r][i] != 0), None)
        if pivot is None:
            return 0
        if pivot != i:
            a[i], a[pivot] = a[pivot], a[i]
            sign = -sign
        result *= a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] / a[i][i]
            for c in range(i, n):
                a[r][c] -= f * a[i][c]
    return int(sign * result)


def invariant_factors(rows, ncols):
    """Torsion and free rank of Z^ncols / rowspace, from gcds of minors.

    d_k = gcd of all k x k minors; the k-th invariant factor is d_k / d_{k-1}.
    """
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    prev = 1
    factors = []
    for k in range(1, min(len(rows), ncols) + 1):
        g = 0
        for rs in itertools.combinations(range(len(rows)), k):
            for cs in itertools.combinations(range(ncols), k):
                g = gcd(g, det([[rows[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
        rank = k
    torsion = tuple(f for f in factors if f > 1)
    return torsion, ncols - rank


def exponent_row(word, gens):
    """``word`` is a sequence of (symbol, sign) pairs."""
    row = [0] * len(gens)
    for s, e in word:
        row[gens.index(s)] += e
    return row


def subdivision_counts(vertices, edges, face_lengths):
    """Cell counts after one edge-bisection and face-coning step.

    A face of boundary length L has 2L corners after bisection, hence 2L
    radial edges and 2L triangles.
    """
    corners = 2 * sum(face_lengths)
    return (vertices + edges + len(face_lengths), 2 * edges + corners, corners)


def cellular_h1(vertices, edges, faces):
    """H_1 from cellular chains: Z_1 = ker d1 as a lattice, B_1 = im d2.

    Returns (torsion, free rank). ``edges``: id -> (src, dst);
    ``faces``: id -> list of (edge id, sign).
    """
    eids = sorted(edges)
    vids = sorted(vertices)
    ne = len(eids)
    # d1 has rank V - 1 on a connected complex, so rank Z_1 = E - V + 1
    z_rank = ne - (len(vids) - 1)
    boundary_rows = [exponent_row(b, eids) for b in faces.values()]
    # H_1 = Z_1 / B_1 with B_1 inside Z_1; Z_1 is a direct summand of Z^E
    # (kernel of an integer map), so the torsion of Z^E / B_1 equals that of
    # Z_1 / B_1 and the free rank drops by E - rank Z_1.
    torsion, free = invariant_factors(boundary_rows, ne)
    return torsion, free - (ne - z_rank)


def _compose_word(perms, word, point):
    for s, e in word:
        p = perms[s]
        point = p[point] if e == 1 else p.index(point)
    return point


def _transitive(perms, degree):
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for p in perms.values():
            for y in (p[x], p.index(x)):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == degree


def index_by_actions(gens, relators, subgroup, max_degree):
    """Largest degree of a transitive action in which ``subgroup`` fixes 0.

    Any such action has point stabilizer containing H, so its degree is at
    most [G:H], and the coset action attains it. ``None`` if some action of
    degree ``max_degree`` exists (the index may be larger).
    """
    best = 0
    for d in range(1, max_degree + 1):
        found = False
        for choice in itertools.product(itertools.permutations(range(d)), repeat=len(gens)):
            perms = dict(zip(gens, choice))
            if not _transitive(perms, d):
                continue
            if any(_compose_word(perms, h, 0) != 0 for h in subgroup):
                continue
            if all(_compose_word(perms, r, x) == x for r in relators for x in range(d)):
                found = True
                break
        if found:
            best = d
    return None if best == max_degree else best


def reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse(word):
    return tuple((s, -e) for s, e in reversed(word))


def subgroup_ball(gens, max_length, factors=10):
    """Reduced words of length <= max_length that are products of at most
    ``factors`` generators or their inverses."""
    letters = [tuple(g) for g in gens] + [inverse(tuple(g)) for g in gens]
    found = {()}
    frontier = {()}
    for _ in range(factors):
        nxt = set()
        for w in frontier:
            for g in letters:
                r = reduce(w + g)
                if r not in found:
                    nxt.add(r)
        found |= nxt
        frontier = nxt
    return {w for w in found if len(w) <= max_length}
