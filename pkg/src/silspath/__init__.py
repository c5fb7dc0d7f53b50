"""Exact combinatorics of level-zero path crystals and graded characters."""

from .cartan import AffineRealRoot, CartanDatum, LevelZeroWeight, build, sigma_involution
from .weyl import (
    AffineWeylElt,
    BudgetExceeded,
    FiniteWeylElt,
    affine_identity,
    affine_reflection,
    affine_simple,
    bruhat_leq,
    finite_from_word,
    from_finite,
    longest_element,
    simple_reflection,
    translation,
    weyl_group,
)
from .peterson import Decomposition, ParabolicQuotient
from .sils import SiLSCrystal, SiLSPath, multipartitions
from .qls import LiftRecord, QLSCrystal, QLSPath
from .characters import (
    GradedCharacter,
    brute_force_gch_minus_e,
    floor_w0,
    gch_demazure_minus_e,
    gch_demazure_plus_w0,
    gch_quotient_minus,
    gch_quotient_plus,
    macdonald_t0,
    qls_degree_sum,
    weyl_character,
)

__all__ = [
    "AffineRealRoot",
    "AffineWeylElt",
    "BudgetExceeded",
    "CartanDatum",
    "Decomposition",
    "FiniteWeylElt",
    "GradedCharacter",
    "LevelZeroWeight",
    "LiftRecord",
    "ParabolicQuotient",
    "QLSCrystal",
    "QLSPath",
    "SiLSCrystal",
    "SiLSPath",
    "affine_identity",
    "affine_reflection",
    "affine_simple",
    "brute_force_gch_minus_e",
    "bruhat_leq",
    "build",
    "finite_from_word",
    "floor_w0",
    "from_finite",
    "gch_demazure_minus_e",
    "gch_demazure_plus_w0",
    "gch_quotient_minus",
    "gch_quotient_plus",
    "longest_element",
    "macdonald_t0",
    "multipartitions",
    "qls_degree_sum",
    "sigma_involution",
    "simple_reflection",
    "translation",
    "weyl_character",
    "weyl_group",
]
