"""Exact root-datum combinatorics for Hecke transfer of class functions."""

from .root_datum import (
    BasedRootDatum,
    DiagramAutomorphism,
    WeylElement,
    automorphism_from_permutation,
    dominance_leq,
    dominant_representative,
    dual,
    orbit,
    preset,
    weyl_group,
)
from .weights import WeightFunction, weight_multiplicities, weyl_dim

__version__ = "0.1.0"
