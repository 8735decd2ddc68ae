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

"""Sparse vectors as dictionaries from keys to rationals.

Keys are basis indices for vectors in a
:class:`~lnalg.exactla.graded_space.GradedVectorSpace` and canonical
words for elements of a symmetric coalgebra. Zero coefficients are never
stored.
"""

from lnalg.scalar import format_rational, to_rational


def add_to(accumulator, vector, coefficient=1):
    """Add ``coefficient * vector`` to `accumulator` in place."""
    if coefficient == 0:
        return accumulator
    for key, value in vector.items():
        new = accumulator.get(key, 0) + coefficient * value
        if new == 0:
            accumulator.pop(key, None)
        else:
            accumulator[key] = new
    return accumulator


def add_term(accumulator, key, coefficient):
    if coefficient == 0:
        return accumulator
    new = accumulator.get(key, 0) + coefficient
    if new == 0:
        accumulator.pop(key, None)
    else:
        accumulator[key] = new
    return accumulator


def scaled(vector, coefficient):
    if coefficient == 0:
        return {}
    return {k: coefficient * v for k, v in vector.items()}


def cleaned(vector):
    return {k: to_rational(v) for k, v in vector.items() if v != 0}


def combine(*pairs):
    """Return the linear combination of ``(coefficient, vector)`` pairs."""
    out = {}
    for coefficient, vector in pairs:
        add_to(out, vector, coefficient)
    return out


def vector_from_names(space, values):
    """Build a vector of `space` from a mapping of basis names to values."""
    return cleaned({space.index(name): to_rational(v) for name, v in values.items()})


def vector_to_names(space, vector):
    """Return ``{name: "p/q"}`` for a vector, in basis order."""
    return {space.name(i): format_rational(vector[i]) for i in sorted(vector)}


def format_vector(space, vector):
    if not vector:
        return "0"
    terms = []
    for i in sorted(vector, key=space.rank):
        c = vector[i]
        name = space.name(i)
        if c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{format_rational(c)}*{name}")
    return " + ".join(terms).replace("+ -", "- ")
