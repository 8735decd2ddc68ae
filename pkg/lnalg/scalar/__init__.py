# -*- coding: utf-8 -*-
# Copyright 2018-2021 the lnalg developers
#
# This file is part of lnalg.
#
# lnalg is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# lnalg is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with lnalg.  If not, see <http://www.gnu.org/licenses/>.

"""Exact rational scalars.

All arithmetic in lnalg is carried out with :class:`fractions.Fraction`.
Matrices are handed to sympy for elimination, so conversion helpers in
both directions live here, as well as the ``"p/q"`` text form used in
documents and reports.
"""

from fractions import Fraction
import numbers

import sympy


# Lists what will be imported when calling "from lnalg.scalar import *"
__all__ = [
    "to_rational",
    "format_rational",
    "to_sympy",
    "from_sympy",
    "ZERO",
    "ONE",
]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value):
    """Return `value` as a reduced :class:`~fractions.Fraction`.

    Parameters
    ----------
    value : int, Fraction, str or sympy.Rational
        Strings may be ``"p/q"``, ``"p"`` or a finite decimal such as
        ``"0.5"``. Floats are refused since they are not exact.

    Returns
    -------
    Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"{value!r} is not a rational number.")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, sympy.Basic):
        return from_sympy(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"'{value}' is not a rational number.")
    if isinstance(value, float):
        raise ValueError(
            f"Floating point value {value!r} is not accepted, pass 'p/q' instead."
        )
    raise ValueError(f"{value!r} (type {type(value).__name__}) is not rational.")


def format_rational(value):
    """Return the canonical ``"p/q"`` (or ``"p"``) text of a rational."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_sympy(value):
    value = to_rational(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value):
    value = sympy.sympify(value)
    if not value.is_Rational:
        raise ValueError(f"{value} is not a rational number.")
    return Fraction(int(value.p), int(value.q))
