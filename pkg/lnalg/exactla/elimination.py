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

"""Gaussian elimination over the rationals with sympy.

Pivoting is always on the smallest column index, so every result here is
a deterministic function of the row and column order.
"""

import sympy

from lnalg.scalar import from_sympy, to_sympy, ONE, ZERO


def matrix_from_columns(rows, columns, column_vectors):
    """Dense sympy matrix from sparse columns.

    Parameters
    ----------
    rows : sequence
        Keys labelling the rows.
    columns : sequence
        Keys labelling the columns.
    column_vectors : callable
        Returns the sparse vector (dict) of a column key.
    """
    position = {r: i for i, r in enumerate(rows)}
    matrix = sympy.zeros(len(rows), len(columns))
    for j, col in enumerate(columns):
        for key, value in column_vectors(col).items():
            if key not in position:
                raise ValueError(f"Column {col!r} has an entry outside the rows.")
            matrix[position[key], j] = to_sympy(value)
    return matrix


def rref(matrix):
    """Reduced row echelon form and pivot columns."""
    if matrix.rows == 0 or matrix.cols == 0:
        return matrix, ()
    reduced, pivots = matrix.rref()
    return reduced, tuple(pivots)


def rank(matrix):
    return len(rref(matrix)[1])


def kernel(matrix):
    """Kernel basis with the free column each basis vector belongs to.

    Returns
    -------
    list of tuple of (int, list of Fraction)
        One entry per free column, in increasing order. The vector has a
        one in its free column and zeros in the other free columns.
    """
    reduced, pivots = rref(matrix)
    free = [j for j in range(matrix.cols) if j not in pivots]
    basis = []
    for j in free:
        vector = [ZERO] * matrix.cols
        vector[j] = ONE
        for row, p in enumerate(pivots):
            vector[p] = -from_sympy(reduced[row, j])
        basis.append((j, vector))
    return basis


def solve_particular(matrix, rhs):
    """Solve ``matrix * x = rhs`` with all free variables set to zero.

    Returns
    -------
    list of Fraction or None
        None if the system is inconsistent.
    """
    b = sympy.Matrix([to_sympy(v) for v in rhs])
    if matrix.cols == 0:
        return [] if all(v == 0 for v in b) else None
    if matrix.rows == 0:
        return [ZERO] * matrix.cols
    reduced, pivots = rref(matrix.row_join(b))
    if matrix.cols in pivots:
        return None
    solution = [ZERO] * matrix.cols
    for row, p in enumerate(pivots):
        solution[p] = from_sympy(reduced[row, matrix.cols])
    return solution


def inverse(matrix):
    """Exact inverse as nested lists of Fractions."""
    inv = matrix.inv()
    return [[from_sympy(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]
