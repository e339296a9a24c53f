"""Covering-space theory over finite combinatorial 2-complexes."""
