"""Exact linear-code toolkit: weight-w star codes, two-weight code identities and
brute-force verification over finite fields."""

from .gfield import FieldSpec, Felt, arith, field_new, parse_field, trace_to_prime
from .linalg import GFMatrix, kernel, rank, rref, solve
from .code import (
    DesignCheck,
    LinearCode,
    SubcodeHandle,
    WeightDistribution,
    code_from_generator,
    codewords_of_weight,
    codim_one_subcodes,
    dual,
    generalized_hamming_weight,
    is_projective,
    minimum_distance,
    monomial_equivalent,
    puncture,
    shorten,
    support_design_check,
    weight_distribution,
)
from .construct import (
    ProjPointSet,
    StarCode,
    code_from_defining_set,
    complement_code,
    defining_set,
    double_star_check,
    extend_if_possible,
    is_blocking_set,
    star,
)
from .identities import (
    StarPrediction,
    TwoWeightProfile,
    bounds_check,
    coset_weight_spectrum,
    divisibility_check,
    extendability_criterion,
    griesmer,
    macwilliams,
    pless_check,
    star_prediction,
    twoweight_distribution,
)
from .families import FamilyId, family

__version__ = "0.1.0"
