"""Exact semi-stability toolkit for ideal lattices of real quadratic fields."""

from idlat._core import (  # noqa: F401
    AuditReport,
    CensusRow,
    DensityStats,
    FieldData,
    GramForm,
    IdealTriple,
    InvariantError,
    PairAB,
    ShortestResult,
    VerdictRecord,
    WrLattice,
    WrStability,
    audit_ratio,
    brute_shortest,
    census,
    classify_minimizer,
    cmp_int_vs_surd,
    det_sq,
    divisor_scan,
    divisors,
    element_norm,
    enumerate_ideals,
    enumerate_pairs,
    estimate_gamma,
    factor,
    field_data,
    gram,
    ideal_norm,
    is_squarefree,
    isqrt,
    kronecker,
    lagrange_reduce,
    landau_estimate,
    m_count,
    pair_ab,
    predict,
    qr_modulus,
    s1_census,
    semistable_fraction,
    to_pair,
    validate_ideal,
    verdict,
    wr_gram,
    wr_lattice,
    wr_minima_check,
    wr_stability,
)

__version__ = "0.1.0"
