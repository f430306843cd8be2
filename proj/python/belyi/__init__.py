"""Exact Belyi polynomial tools: certification, Newton polygons, constructions, heights."""

from ._belyi import (
    FormatError,
    Poly,
    belyi_ab,
    certify,
    check_containment,
    chebyshev,
    chebyshev_belyi,
    construct,
    height,
    newton,
    valuation,
    verify,
)

__all__ = [
    "FormatError",
    "Poly",
    "belyi_ab",
    "certify",
    "check_containment",
    "chebyshev",
    "chebyshev_belyi",
    "construct",
    "height",
    "newton",
    "valuation",
    "verify",
]
