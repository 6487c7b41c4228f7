"""Jet schemes of monomial hypersurfaces: defining ideals, components, multiplicities."""

from .components import (
    Census,
    ComponentReport,
    Composition,
    MinimalPrime,
    census,
    drop_zero_parts,
    enumerate_minimal_primes,
    multiplicity_formula,
    multiplicity_recursive,
)
from .groebner import INFINITE, GroebnerBasis, buchberger, normal_form, quotient_dimension
from .jetideal import (
    JetIdeal,
    build_jet_ideal_general,
    factor_out_unit_generators,
    monomial_jet_generators,
    shift_after_vanishing,
)
from .lengthoracle import (
    GenericDisagreementError,
    NotMinimalError,
    local_length_at_origin,
    oracle_multiplicity,
)
from .polycore import (
    DEGREVLEX,
    LEX,
    Cmp,
    JetVar,
    Monomial,
    MonomialOrdering,
    ParseError,
    Polynomial,
    Term,
    compare_monomials,
    parse_polynomial,
    serialize,
)

__version__ = "0.1.0"
