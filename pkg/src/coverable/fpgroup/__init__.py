"""Finitely presented groups: words, coset enumeration, abelianization, folding."""

from .abelian import AbelianInvariants, AbelianQuotient, abelianization
from .cosets import CosetTable, relators_hold, todd_coxeter
from .folding import SubgroupGraph, fold_membership, same_subgroup
from .solver import DEFAULT_BUDGET, Budget, Quotient, word_trivial_in_quotient
from .tietze import simplify
from .verdict import Answer, Verdict, conjunction
from .words import Letter, Presentation, Word, commutator, free_reduce

__all__ = [
    "AbelianInvariants", "AbelianQuotient", "Answer", "Budget", "CosetTable",
    "DEFAULT_BUDGET", "Letter", "Presentation", "Quotient", "SubgroupGraph", "Verdict",
    "Word", "abelianization", "commutator", "conjunction", "fold_membership",
    "free_reduce", "relators_hold", "same_subgroup", "simplify", "todd_coxeter",
    "word_trivial_in_quotient",
]
