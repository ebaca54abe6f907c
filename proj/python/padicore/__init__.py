"""Exact p-adic Newton polygons, Ore analysis, and common index divisors."""

from ._core import (
    count_monic_irreducibles,
    dedekind_divides_index,
    discriminant,
    families_dpr,
    families_mono,
    index_divisor,
    is_irreducible,
    ore_report,
    p_free_part,
    parse_poly,
    phi_expand,
    phi_index,
    polygon_report,
    quintic,
    regularize,
    resultant,
    scan,
    theta_minpoly,
    vp,
)

__all__ = [
    "count_monic_irreducibles",
    "dedekind_divides_index",
    "discriminant",
    "families_dpr",
    "families_mono",
    "index_divisor",
    "is_irreducible",
    "ore_report",
    "p_free_part",
    "parse_poly",
    "phi_expand",
    "phi_index",
    "polygon_report",
    "quintic",
    "regularize",
    "resultant",
    "scan",
    "theta_minpoly",
    "vp",
]
