"""Rectangular donuts: integer rectangles with a parallel hole of half their area."""

from donuts.census import DonutClass, DonutKind, classify, configurations, donut_numbers, verify_theorem1, verify_theorem2
from donuts.core import (
    DonutConfig,
    InvalidDonutError,
    ValidationReport,
    area,
    is_coprime_config,
    is_twistable_definitional,
    is_twistable_fast,
    scale,
    twist,
    validate,
)
from donuts.pythagoras import (
    EuclidParams,
    PythTriple,
    euclid_triple,
    is_triple_sum,
    primitive_perimeter_counts,
    primitive_perimeters,
    primitive_triples_with_perimeter,
    triple_sum_decompositions,
)
from donuts.report import VerificationReport
from donuts.squares import (
    CoprimeDivisorPair,
    GcdDecomposition,
    gcd_decompose,
    square_donut_all,
    square_donut_from_params,
    square_hole_all,
    square_hole_construct,
    square_hole_witness,
    square_hole_witnesses,
    verify_no_square_square_hole,
    verify_theorem3,
    verify_theorem4,
)

__version__ = "0.1.0"
