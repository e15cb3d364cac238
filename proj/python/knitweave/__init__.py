"""HOMFLY polynomials of braid closures, PD codes and knitted diagrams.

Polynomials are plain dicts: ``{(v_exp, z_exp): coeff}`` for H and P,
``{z_exp: coeff}`` for single extreme coefficients.
"""

from ._knitweave import (
    BraidWord,
    InvalidDiagram,
    InvalidTemplate,
    KnittedDiagram,
    NonPlanarDiagram,
    ParseError,
    PlanarDiagram,
    braid_closure,
    eval_hecke,
    extreme_minus_fast,
    hecke_expand,
    homfly_framed,
    homfly_unframed,
    parse_braid_word,
    parse_pd,
    polynomial_string,
    random_test,
    render_table,
    validate,
    verify_theorem,
)


def braid(letters, strands=None):
    """Braid word from a list of signed generator indices."""
    letters = list(letters)
    if strands is None:
        strands = max((abs(g) for g in letters), default=0) + 1
    return BraidWord(strands, letters)


__all__ = [
    "BraidWord",
    "InvalidDiagram",
    "InvalidTemplate",
    "KnittedDiagram",
    "NonPlanarDiagram",
    "ParseError",
    "PlanarDiagram",
    "braid",
    "braid_closure",
    "eval_hecke",
    "extreme_minus_fast",
    "hecke_expand",
    "homfly_framed",
    "homfly_unframed",
    "parse_braid_word",
    "parse_pd",
    "polynomial_string",
    "random_test",
    "render_table",
    "validate",
    "verify_theorem",
]
