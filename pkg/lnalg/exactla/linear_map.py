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

from lnalg.base import NotSurjective
from lnalg.exactla.elimination import (
    inverse,
    matrix_from_columns,
    rank,
    rref,
)
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.exactla.vector import add_to, cleaned, format_vector, scaled


class GradedLinearMap:
    """Homogeneous linear map between graded vector spaces.

    The map is stored as sparse columns: basis index of the source to a
    sparse vector of the target.
    """

    def __init__(self, source, target, columns=None, degree_shift=0):
        """
        Parameters
        ----------
        source, target : GradedVectorSpace
        columns : dict, optional
            Maps a source basis index to a dict of target basis indices
            and rational coefficients. Missing columns are zero.
        degree_shift : int, optional
            Degree of the map. Default is 0.

        Raises
        ------
        ValueError
            If a nonzero entry does not land in degree
            ``source degree + degree_shift``.
        """
        if not isinstance(source, GradedVectorSpace) or not isinstance(
            target, GradedVectorSpace
        ):
            raise ValueError("Source and target must be graded vector spaces.")
        self.source = source
        self.target = target
        self.degree_shift = int(degree_shift)
        self._columns = {}
        for i, column in (columns or {}).items():
            if not 0 <= i < source.dim:
                raise ValueError(f"Column {i} is outside the source basis.")
            column = cleaned(column)
            for j in column:
                if not 0 <= j < target.dim:
                    raise ValueError(f"Entry {j} is outside the target basis.")
                if target.degree(j) != source.degree(i) + self.degree_shift:
                    raise ValueError(
                        f"Column '{source.name(i)}' has a nonzero entry "
                        f"'{target.name(j)}' in the wrong degree."
                    )
            if column:
                self._columns[i] = column

    @classmethod
    def identity(cls, space):
        return cls(space, space, {i: {i: 1} for i in range(space.dim)})

    @classmethod
    def zero(cls, source, target, degree_shift=0):
        return cls(source, target, {}, degree_shift)

    @property
    def columns(self):
        return self._columns

    def column(self, i):
        return self._columns.get(i, {})

    def __call__(self, vector):
        out = {}
        for i, c in vector.items():
            add_to(out, self._columns.get(i, {}), c)
        return out

    def compose(self, other):
        """Return ``self`` after `other`."""
        if other.target != self.source:
            raise ValueError("Maps are not composable.")
        columns = {i: self(col) for i, col in other.columns.items()}
        return GradedLinearMap(
            other.source,
            self.target,
            columns,
            self.degree_shift + other.degree_shift,
        )

    def __matmul__(self, other):
        return self.compose(other)

    def _combine(self, other, sign):
        if (
            other.source != self.source
            or other.target != self.target
            or other.degree_shift != self.degree_shift
        ):
            raise ValueError("Maps must have equal source, target and degree.")
        columns = {i: dict(c) for i, c in self._columns.items()}
        for i, c in other.columns.items():
            add_to(columns.setdefault(i, {}), c, sign)
        return GradedLinearMap(self.source, self.target, columns, self.degree_shift)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        columns = {i: scaled(c, scalar) for i, c in self._columns.items()}
        return GradedLinearMap(self.source, self.target, columns, self.degree_shift)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedLinearMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.degree_shift == other.degree_shift
            and self._columns == other._columns
        )

    def is_zero(self):
        return not self._columns

    def matrix(self, degree):
        """Dense sympy matrix of the map restricted to source `degree`."""
        rows = self.target.indices_in_degree(degree + self.degree_shift)
        cols = self.source.indices_in_degree(degree)
        return matrix_from_columns(rows, cols, self.column)

    def rank(self, degree):
        return rank(self.matrix(degree))

    def is_injective_in_degrees(self, degrees=None):
        degrees = self.source.support if degrees is None else degrees
        return all(
            self.rank(d) == self.source.dim_in_degree(d) for d in degrees
        )

    def is_bijective(self):
        degrees = set(self.source.support) | {
            d - self.degree_shift for d in self.target.support
        }
        return all(
            self.rank(d) == self.source.dim_in_degree(d)
            and self.rank(d) == self.target.dim_in_degree(d + self.degree_shift)
            for d in degrees
        )

    def inverse(self):
        """Inverse of a bijective map."""
        if not self.is_bijective():
            raise ValueError("Map is not invertible.")
        columns = {}
        for d in self.source.support:
            rows = self.target.indices_in_degree(d + self.degree_shift)
            cols = self.source.indices_in_degree(d)
            inv = inverse(self.matrix(d))
            for a, j in enumerate(rows):
                columns[j] = {cols[b]: inv[b][a] for b in range(len(cols))}
        return GradedLinearMap(self.target, self.source, columns, -self.degree_shift)

    def __repr__(self):
        lines = [
            f"<GradedLinearMap: degree {self.degree_shift}. "
            f"dim {self.source.dim} -> {self.target.dim}>"
        ]
        for i in sorted(self._columns, key=self.source.rank):
            value = format_vector(self.target, self._columns[i])
            lines.append(f"  {self.source.name(i)} -> {value}")
        return "\n".join(lines)


def is_surjective_in_degrees(f, degrees):
    """Whether `f` is onto the target in every degree in `degrees`.

    Parameters
    ----------
    f : GradedLinearMap
    degrees : iterable of int
        Target degrees.

    Returns
    -------
    bool
    """
    return all(
        f.rank(d - f.degree_shift) == f.target.dim_in_degree(d) for d in degrees
    )


def section_of_surjection(f, degrees):
    """Right inverse of `f` on the target degrees in `degrees`.

    The preimage of every target basis vector is taken in the span of
    the first pivot columns of `f`, so the section is deterministic.
    The section vanishes in every other degree.

    Parameters
    ----------
    f : GradedLinearMap
    degrees : iterable of int
        Target degrees in which `f` must be surjective.

    Returns
    -------
    sigma : GradedLinearMap
        Map from the target of `f` to its source with
        ``f(sigma(y)) == y`` for `y` in `degrees`.

    Raises
    ------
    NotSurjective
        If `f` is not surjective in one of the degrees.
    """
    columns = {}
    for d in sorted(set(degrees)):
        rows = f.target.indices_in_degree(d)
        if not rows:
            continue
        cols = f.source.indices_in_degree(d - f.degree_shift)
        matrix = f.matrix(d - f.degree_shift)
        _, pivots = rref(matrix)
        if len(pivots) != len(rows):
            raise NotSurjective(
                f"Map is not surjective in degree {d}.", witness=d
            )
        inv = inverse(matrix.extract(list(range(len(rows))), list(pivots)))
        for a, j in enumerate(rows):
            columns[j] = {cols[pivots[b]]: inv[b][a] for b in range(len(pivots))}
    return GradedLinearMap(f.target, f.source, columns, -f.degree_shift)
