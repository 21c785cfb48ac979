"""Numerical verification toolkit for a GL(2) x GL(2) twist."""

from fractions import Fraction

from . import _core
from ._core import (
    CuspForm,
    DirichletCharacter,
    DomainError,
    Error,
    NonInvertible,
    NonPrimitive,
    TableTooShort,
    build_form,
    char_sum_bruteforce,
    char_sum_closed,
    gauss_sum,
    primitive_characters,
    ramanujan_sum,
    run_suite,
    s_direct,
    scan,
    suite_names,
    twisted_sum,
    voronoi,
)


def exponent(theta="0", mode="paper"):
    """Exponent calculator; rational fields come back as Fraction."""
    raw = _core.exponent(str(theta), mode)
    return {
        key: Fraction(*value) if isinstance(value, tuple) else value
        for key, value in raw.items()
    }


__all__ = [
    "CuspForm",
    "DirichletCharacter",
    "DomainError",
    "Error",
    "NonInvertible",
    "NonPrimitive",
    "TableTooShort",
    "build_form",
    "char_sum_bruteforce",
    "char_sum_closed",
    "exponent",
    "gauss_sum",
    "primitive_characters",
    "ramanujan_sum",
    "run_suite",
    "s_direct",
    "scan",
    "suite_names",
    "twisted_sum",
    "voronoi",
]
