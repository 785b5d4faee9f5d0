"""Exact-arithmetic computation and verification of Franel-number
identities, supercongruences, and conjectured divisibility families."""

from .combinatorics import (
    ROUTES,
    BinomialProvider,
    FranelTable,
    InconsistencyError,
    binomial,
    binomial_generalized,
    build_franel_table,
    franel,
    macmahon_sides,
    partial_fraction_sides,
)
from .modular import (
    NotCoprimeError,
    Residue,
    TwoSquares,
    legendre_symbol,
    mod_inverse,
    primes_in_range,
    rational_residue,
    reduce,
    two_squares_decompose,
)
from .reports import CongruenceReport, IdentityReport

__all__ = [
    "ROUTES",
    "BinomialProvider",
    "CongruenceReport",
    "FranelTable",
    "IdentityReport",
    "InconsistencyError",
    "NotCoprimeError",
    "Residue",
    "TwoSquares",
    "binomial",
    "binomial_generalized",
    "build_franel_table",
    "franel",
    "legendre_symbol",
    "macmahon_sides",
    "mod_inverse",
    "partial_fraction_sides",
    "primes_in_range",
    "rational_residue",
    "reduce",
    "two_squares_decompose",
]

__version__ = "0.1.0"
