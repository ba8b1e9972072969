"""Exact engines for bilinear recurrences, Somos sequences, and the
polynomiality conditions behind them. Everything is computed over exact
rationals; see the README for the JSON formats the emitters produce."""

from ._specpol import (
    ContradictionTrace,
    FamilyId,
    HCoeffs,
    HirotaSpec,
    NonIntegerTerm,
    OdeCheck,
    ParseError,
    Poly,
    Rational,
    RationalFunction,
    ResidualReport,
    RiccatiSolutionSet,
    SearchDegreeReport,
    SearchReport,
    SequenceReport,
    SomosSpec,
    SomosZeroTermError,
    StepFailure,
    certificate,
    family_name,
    g_from_u,
    h_at,
    hirota_generate,
    modified_evidence_search,
    modified_residual,
    ode_json,
    p3_ode_residual,
    p3_solution,
    parse_poly,
    poly_coprime,
    poly_from_json,
    poly_gcd,
    poly_json,
    poly_latex,
    preset,
    preset_condition_check,
    rational_roots,
    residual_json,
    riccati_descent,
    riccati_json,
    search_json,
    sequence_csv,
    sequence_json,
    sequence_latex,
    somos_csv,
    somos_first_noninteger,
    somos_generate,
    somos_json,
    sqrt_exact,
    star_residual,
    theorem2_solutions,
    verify_p3,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
