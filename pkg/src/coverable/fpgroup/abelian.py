"""Abelianization of presented groups via Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .words import Presentation, Word


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]
    free_rank: int

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


class AbelianQuotient:
    """The group ``Z^n / (row lattice of the relation matrix)`` with SNF coordinates.

    ``smith_normal_decomp`` gives ``S = U A V``; a row vector ``v`` lies in the
    row lattice of ``A`` iff ``v V`` is divisible by the diagonal of ``S``.
    """

    def __init__(self, presentation: Presentation, extra_relators: Sequence[Word] = ()):
        self.generators = presentation.generators
        rels = [r for r in tuple(presentation.relators) + tuple(extra_relators) if r]
        self.matrix = [r.exponent_sums(self.generators) for r in rels]
        n = len(self.generators)
        rows = [row for row in self.matrix if any(row)]
        if n == 0:
            self.diagonal: tuple[int, ...] = ()
            self.V = None
            return
        if not rows:
            self.diagonal = (0,) * n
            self.V = None
            return
        S, _U, V = smith_normal_decomp(Matrix(rows), domain=ZZ)
        diag = [abs(int(S[i, i])) for i in range(min(S.shape))]
        diag += [0] * (n - len(diag))
        self.diagonal = tuple(diag)
        self.V = [[int(V[i, j]) for j in range(V.shape[1])] for i in range(V.shape[0])]

    @cached_property
    def invariants(self) -> AbelianInvariants:
        torsion = tuple(d for d in self.diagonal if d > 1)
        return AbelianInvariants(torsion, sum(1 for d in self.diagonal if d == 0))

    def coordinates(self, w: Word) -> tuple[int, ...]:
        """Image of ``w``: one entry per SNF factor, reduced mod its divisor."""
        v = w.exponent_sums(self.generators)
        if self.V is not None:
            V = self.V
            v = [sum(v[i] * V[i][j] for i in range(len(v)) if v[i]) for j in range(len(V[0]))]
        out = []
        for x, d in zip(v, self.diagonal):
            out.append(int(x) % d if d else int(x))
        return tuple(out)

    def image(self, w: Word) -> dict:
        """Nontrivial coordinates keyed by factor label (``Z/d`` or ``Z``)."""
        labels = [f"Z/{d}" if d else "Z" for d in self.diagonal]
        coords = self.coordinates(w)
        return {"vector": [c for c, d in zip(coords, self.diagonal) if d != 1],
                "factors": [l for l, d in zip(labels, self.diagonal) if d != 1]}

    def is_zero(self, w: Word) -> bool:
        return not any(self.coordinates(w))


def abelianization(p: Presentation, extra_relators: Sequence[Word] = ()) -> AbelianInvariants:
    return AbelianQuotient(p, extra_relators).invariants
