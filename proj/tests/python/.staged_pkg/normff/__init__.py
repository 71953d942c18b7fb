"""Exact arithmetic for the norm form A^2 + T*B^2 over F_q[T].

Thin re-export of the compiled core. Polynomials are passed as lists of
field-element codes from degree 0 upward.
"""

from ._core import (
    c,
    check_series_identity,
    count,
    factor,
    h,
    irreducible,
    is_norm,
    kq,
    legendre,
    pi_exact,
    represent,
)

__all__ = [
    "c",
    "check_series_identity",
    "count",
    "factor",
    "h",
    "irreducible",
    "is_norm",
    "kq",
    "legendre",
    "pi_exact",
    "represent",
]
