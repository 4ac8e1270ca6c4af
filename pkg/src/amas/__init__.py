"""amas: exact computations in cluster algebras.

Quiver and seed mutation, exchange-graph enumeration up to isomorphism,
Y-seed dynamics and Y-system periodicity, cluster characters from quiver
Grassmannians, polygon/Pluecker and unipotent-minor seed models, and cyclic
derivatives of potentials -- all over arbitrary-precision integers and
rationals, with no floating point anywhere.
"""

from .laurent import InexactDivision, LaurentPoly
from .quiver import IceQuiver, detect_finite_type, is_dynkin, mutation_class
from .rational import RationalFunc
from .roots import DynkinType
from .seeds import (
    Seed,
    YSeed,
    cluster_monomial,
    cluster_variables,
    denominator_vector,
    exchange_graph,
    initial_seed,
    initial_yseed,
    mutate_seed,
    mutate_yseed,
    rank2_variable,
    seed_canonical,
)

__all__ = [
    "DynkinType",
    "IceQuiver",
    "InexactDivision",
    "LaurentPoly",
    "RationalFunc",
    "Seed",
    "YSeed",
    "cluster_monomial",
    "cluster_variables",
    "denominator_vector",
    "detect_finite_type",
    "exchange_graph",
    "initial_seed",
    "initial_yseed",
    "is_dynkin",
    "mutate_seed",
    "mutate_yseed",
    "mutation_class",
    "rank2_variable",
    "seed_canonical",
]

__version__ = "0.1.0"
